"""Spin structures on Riemann surfaces left invariant by automorphisms.

A genus-g surface carries 2^{2g} spin structures (theta
characteristics).  Given the integer matrix of an automorphism acting on
first homology (images in columns) and the intersection pairing, this
package sets up and solves the mod-2 affine fixed-point system that cuts
out the invariant structures, exactly and deterministically.  It also
covers the two classical situations where more can be said: finite
cyclic orders through cyclotomic decompositions, and hyperelliptic
curves through branch-point combinatorics.

Modules
-------
gf2             exact linear algebra over the two-element field
surface_action  the affine action on spin coordinates and its solvers
cyclotomic      cyclotomic polynomials, companion blocks, order analysis
hyperelliptic   branch-subset classes, closed-form and brute counts
fixtures        shipped genus-3 quartic matrices and vectors
cli             the `spin` command-line front end
"""
from .cyclotomic import (Decomposition, IntPoly, UniquenessReport,
                         companion_matrix, cyclotomic_poly, decompositions,
                         euler_phi, model_matrix, phi_at_one,
                         shifted_det_is_odd,
                         unique_spin_iff_quotient_genus_zero)
from .fixtures import KleinData, klein_data
from .gf2 import (AffineSolutionSet, BitMatrix, BitVector, matmul, nullspace,
                  rank, solve_affine)
from .hyperelliptic import (BolzaCase, BranchPermutation, BranchSet,
                            EvenClass, OrbitShape, SpinClass, affine_add,
                            bolza_table, class_parity, classify_orbit_shape,
                            enumerate_even_classes, enumerate_spin_classes,
                            fixed_count_brute, fixed_count_closed_form,
                            group_fixed_count, permute_class)
from .surface_action import (HomologyAction, Pairing, SpinStructure,
                             count_invariant, from_interchange,
                             group_invariant_spins, invariant_spins,
                             is_symplectic_mod2, quadratic_fixed_count,
                             random_symplectic, standard_pairing,
                             to_interchange, v_vector)

__version__ = "0.1.0"

__all__ = [
    "AffineSolutionSet", "BitMatrix", "BitVector", "BolzaCase",
    "BranchPermutation", "BranchSet", "Decomposition", "EvenClass",
    "HomologyAction", "IntPoly", "KleinData", "OrbitShape", "Pairing",
    "SpinClass", "SpinStructure", "UniquenessReport", "affine_add",
    "bolza_table", "class_parity", "classify_orbit_shape",
    "companion_matrix", "count_invariant", "cyclotomic_poly",
    "decompositions", "enumerate_even_classes", "enumerate_spin_classes",
    "euler_phi", "fixed_count_brute", "fixed_count_closed_form",
    "from_interchange", "group_fixed_count", "group_invariant_spins",
    "invariant_spins", "is_symplectic_mod2", "klein_data", "matmul",
    "model_matrix", "nullspace", "permute_class", "phi_at_one",
    "quadratic_fixed_count",
    "random_symplectic", "rank", "shifted_det_is_odd", "solve_affine",
    "standard_pairing", "to_interchange",
    "unique_spin_iff_quotient_genus_zero", "v_vector",
]
