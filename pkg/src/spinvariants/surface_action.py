"""Invariant spin structures from the homology action of an automorphism.

Column convention, read this first
----------------------------------
The integer matrix ``A`` of a :class:`HomologyAction` stores images in
COLUMNS: the automorphism sends the basis class e_i to sum_j A[j][i] e_j.
With that convention the induced action on spin-structure coordinates X
is X -> Abar^T X + Vbar^T over GF(2), where bars denote mod-2 reduction,
and the invariant spin structures are exactly the solutions of

    (Abar^T - I) X = Vbar^T        (the sign of V is immaterial mod 2).

Transposition mistakes are the dominant failure mode when preparing
input matrices; if your counts look wrong, transpose and retry before
blaming the solver.

The correction vector V is computed in exact integer arithmetic from the
intersection pairing and only reduced mod 2 at the end.  The solvers are
total: matrices that do not preserve the pairing are still accepted (the
linear algebra is well defined) and may legitimately yield an empty
solution set.  Only :func:`quadratic_fixed_count`, whose derivation
needs the pairing to be preserved, insists on a symplectic input.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import gf2
from ._intmat import (IntMatrix, as_int_matrix, det_bareiss, identity_int,
                      matmul_int, mod2)
from .gf2 import AffineSolutionSet, BitMatrix, BitVector

#: quadratic_fixed_count enumerates half-spaces of GF(2)^{2g}; keep 2g small.
QUADRATIC_DIMENSION_CAP = 24


@dataclass(frozen=True)
class Pairing:
    """An integer intersection pairing on first homology, size 2g x 2g.

    The form must be antisymmetric and nondegenerate mod 2; both are
    checked at construction time because every downstream computation
    silently depends on them.
    """

    genus: int
    form: IntMatrix

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 1:
            raise ValueError("genus must be a positive integer")
        form = as_int_matrix(self.form)
        object.__setattr__(self, "form", form)
        n = 2 * self.genus
        if len(form) != n or any(len(row) != n for row in form):
            raise ValueError(f"pairing form must be {n}x{n}")
        for i in range(n):
            for j in range(n):
                if form[i][j] != -form[j][i]:
                    raise ValueError("pairing form must be antisymmetric")
        if gf2.rank(mod2(form)) != n:
            raise ValueError("pairing form must be nondegenerate mod 2")

    def mod2(self) -> BitMatrix:
        return mod2(self.form)


@dataclass(frozen=True)
class HomologyAction:
    """A 2g x 2g integer matrix acting on H_1, images stored in columns.

    Unimodularity is a property of genuine automorphisms but is checked
    only on demand (:meth:`is_unimodular`), never at construction, so
    exploratory inputs are cheap.
    """

    genus: int
    matrix: IntMatrix

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 1:
            raise ValueError("genus must be a positive integer")
        matrix = as_int_matrix(self.matrix)
        object.__setattr__(self, "matrix", matrix)
        n = 2 * self.genus
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError(f"homology matrix must be {n}x{n}")

    def det(self) -> int:
        return det_bareiss(self.matrix)

    def is_unimodular(self) -> bool:
        return self.det() in (1, -1)

    def mod2(self) -> BitMatrix:
        return mod2(self.matrix)


@dataclass(frozen=True)
class SpinStructure:
    """Coordinates x_i of a spin structure xi = sum_i x_i zeta_i + eta.

    The reference classes zeta_i and eta have no runtime representation;
    this type only pins the coordinate convention shared by all solver
    output: entry i of ``coords`` is the coefficient of zeta_i against
    the basis dual to the chosen homology basis.
    """

    genus: int
    coords: BitVector

    def __post_init__(self) -> None:
        if self.coords.length != 2 * self.genus:
            raise ValueError("coords must have length 2g")


def _check_compatible(a: HomologyAction, p: Pairing) -> None:
    if a.genus != p.genus:
        raise ValueError("action and pairing have different genus")


def standard_pairing(g: int) -> Pairing:
    """The standard symplectic pairing: <e_i, e_{i+g}> = +1 for i <= g."""
    if not isinstance(g, int) or g < 1:
        raise ValueError("genus must be a positive integer")
    n = 2 * g
    form = [[0] * n for _ in range(n)]
    for i in range(g):
        form[i][i + g] = 1
        form[i + g][i] = -1
    return Pairing(g, as_int_matrix(form))


def v_vector(a: HomologyAction, p: Pairing) -> BitVector:
    """The correction vector Vbar of the affine spin-coordinate action.

    v_i = sum over j1 < j2 of A[j1][i] * A[j2][i] * <e_{j1}, e_{j2}>,
    accumulated in exact integers and reduced mod 2 at the very end.
    """
    _check_compatible(a, p)
    n = 2 * a.genus
    matrix = a.matrix
    form = p.form
    vals = []
    for i in range(n):
        col = [matrix[j][i] for j in range(n)]
        total = 0
        for j1 in range(n):
            c1 = col[j1]
            if c1 == 0:
                continue
            row = form[j1]
            for j2 in range(j1 + 1, n):
                c2 = col[j2]
                if c2:
                    total += c1 * c2 * row[j2]
        vals.append(total)
    return BitVector.from_ints(vals)


def _coordinate_system(a: HomologyAction, p: Pairing) -> tuple[BitMatrix, BitVector]:
    """The pair (Abar^T - I, Vbar) defining the fixed-point system."""
    n = 2 * a.genus
    m = a.mod2().transpose() + BitMatrix.identity(n)
    return m, v_vector(a, p)


def invariant_spins(a: HomologyAction, p: Pairing) -> AffineSolutionSet:
    """All spin-structure coordinate vectors fixed by the action."""
    m, v = _coordinate_system(a, p)
    return gf2.solve_affine(m, v)


def count_invariant(a: HomologyAction, p: Pairing) -> int:
    """Number of invariant spin structures: 0 or 2^nullity(Abar^T - I)."""
    return invariant_spins(a, p).cardinality()


def group_invariant_spins(actions: Sequence[HomologyAction], p: Pairing) -> AffineSolutionSet:
    """Spin structures fixed by every listed action simultaneously.

    The per-action systems are stacked into one affine system and solved
    once; the result is the intersection of the individual solution sets.
    """
    actions = list(actions)
    if not actions:
        raise ValueError("at least one homology action is required")
    for a in actions:
        _check_compatible(a, p)
    systems = [_coordinate_system(a, p) for a in actions]
    stacked = BitMatrix.stack([m for m, _ in systems])
    n = 2 * p.genus
    bits = 0
    for k, (_, v) in enumerate(systems):
        bits |= v.bits << (k * n)
    return gf2.solve_affine(stacked, BitVector(len(actions) * n, bits))


def is_symplectic_mod2(a: HomologyAction, p: Pairing) -> bool:
    """True iff Abar^T * Pbar * Abar = Pbar over GF(2)."""
    _check_compatible(a, p)
    abar = a.mod2()
    pbar = p.mod2()
    return gf2.matmul(gf2.matmul(abar.transpose(), pbar), abar) == pbar


def quadratic_fixed_count(a: HomologyAction, p: Pairing) -> int:
    """Independent fixed-structure count through quadratic refinements.

    A spin structure corresponds to a quadratic refinement q of the mod-2
    pairing, determined by its values y_i = q(e_i) on the basis and
    extended through q(u + v) = q(u) + q(v) + <u, v>.  The structure is
    invariant iff q(Abar e_i) = y_i for all i.  This routine enumerates
    all 2^{2g} value assignments y (meet-in-the-middle, no elimination,
    no V vector), so it shares no code path with the affine solver and
    serves as its oracle.
    """
    if not is_symplectic_mod2(a, p):
        raise ValueError("quadratic_fixed_count requires a mod-2 symplectic action")
    dim = 2 * a.genus
    if dim > QUADRATIC_DIMENSION_CAP:
        raise ValueError(f"enumeration bound exceeded: 2g must be <= {QUADRATIC_DIMENSION_CAP}")
    abar_cols = a.mod2().transpose().data
    pbar_cols = p.mod2().transpose().data
    masks = []
    target = 0
    for i in range(dim):
        w = abar_cols[i]
        # constant term of q(Abar e_i): extend q over the set bits of w
        # in increasing order, accumulating the pairing against the
        # partial sum built so far.
        t = 0
        acc = 0
        ww = w
        while ww:
            k = (ww & -ww).bit_length() - 1
            ww &= ww - 1
            t ^= (pbar_cols[k] & acc).bit_count() & 1
            acc |= 1 << k
        # q(Abar e_i) = y_i  <=>  parity(y & (w ^ e_i)) = t
        masks.append(w ^ (1 << i))
        target |= t << i

    half = dim // 2
    hi_width = dim - half
    lo_masks = [m & ((1 << half) - 1) for m in masks]
    hi_masks = [m >> half for m in masks]

    def signature(y: int, parts: list[int]) -> int:
        sig = 0
        for i, part in enumerate(parts):
            sig |= ((y & part).bit_count() & 1) << i
        return sig

    hi_counts: dict[int, int] = {}
    for hi in range(1 << hi_width):
        sig = signature(hi, hi_masks)
        hi_counts[sig] = hi_counts.get(sig, 0) + 1
    total = 0
    for lo in range(1 << half):
        total += hi_counts.get(signature(lo, lo_masks) ^ target, 0)
    return total


def random_symplectic(g: int, seed: int, steps: int) -> HomologyAction:
    """A deterministic pseudo-random walk through integer symplectic matrices.

    The result is a product of ``steps`` generators of the integral
    symplectic group for the standard pairing: transvections x -> x +
    <x, v> v with small random v, plus the block swap e_i -> e_{i+g},
    e_{i+g} -> -e_i.  Both preserve the standard form exactly over the
    integers, so every output passes is_symplectic_mod2 against
    standard_pairing(g).  steps = 0 returns the identity.
    """
    if not isinstance(g, int) or g < 1:
        raise ValueError("genus must be a positive integer")
    if not isinstance(steps, int) or steps < 0:
        raise ValueError("steps must be a nonnegative integer")
    rng = random.Random(seed)
    n = 2 * g
    form = standard_pairing(g).form
    swap = [[0] * n for _ in range(n)]
    for i in range(g):
        swap[g + i][i] = 1        # column i holds the image e_{g+i}
        swap[i][g + i] = -1       # column g+i holds the image -e_i
    swap_m = as_int_matrix(swap)

    result = identity_int(n)
    for _ in range(steps):
        if rng.random() < 0.25:
            gen = swap_m
        else:
            v = [0] * n
            while not any(v):
                v = [rng.randint(-1, 1) for _ in range(n)]
            pv = [sum(form[i][j] * v[j] for j in range(n)) for i in range(n)]
            # transvection: column i is e_i + <e_i, v> v = e_i + pv[i] * v
            gen = as_int_matrix([[(1 if r == c else 0) + v[r] * pv[c]
                                  for c in range(n)] for r in range(n)])
        result = matmul_int(result, gen)
    return HomologyAction(g, result)


def to_interchange(a: HomologyAction, p: Pairing | None = None) -> dict:
    """Serialize an action (and optionally a pairing) to the shared JSON shape.

    The pairing field collapses to the string "standard" when it equals
    standard_pairing(genus), keeping fixture files readable.
    """
    if p is not None and p.genus != a.genus:
        raise ValueError("action and pairing have different genus")
    if p is None or p == standard_pairing(a.genus):
        pairing: str | list[list[int]] = "standard"
    else:
        pairing = [list(row) for row in p.form]
    return {"genus": a.genus,
            "matrix": [list(row) for row in a.matrix],
            "pairing": pairing}


def from_interchange(obj: object) -> tuple[HomologyAction, Pairing]:
    """Parse the shared JSON shape {"genus", "matrix", "pairing"}.

    A missing pairing field defaults to "standard"; writing is always
    explicit.  Error messages name the offending field.
    """
    if not isinstance(obj, dict):
        raise ValueError("interchange payload must be a JSON object")
    if "genus" not in obj:
        raise ValueError("interchange field 'genus' is missing")
    g = obj["genus"]
    if not isinstance(g, int) or isinstance(g, bool) or g < 1:
        raise ValueError("interchange field 'genus' must be a positive integer")
    if "matrix" not in obj:
        raise ValueError("interchange field 'matrix' is missing")
    try:
        action = HomologyAction(g, as_int_matrix(obj["matrix"]))
    except (TypeError, ValueError) as exc:
        raise ValueError(f"interchange field 'matrix' is invalid: {exc}") from exc
    pairing_field = obj.get("pairing", "standard")
    if pairing_field == "standard":
        pairing = standard_pairing(g)
    else:
        try:
            pairing = Pairing(g, as_int_matrix(pairing_field))
        except (TypeError, ValueError) as exc:
            raise ValueError(f"interchange field 'pairing' is invalid: {exc}") from exc
    return action, pairing
