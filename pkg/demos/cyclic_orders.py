"""Which cyclic orders force a unique invariant spin structure?

An order-n automorphism acts on 2g-dimensional homology through a
matrix similar to a direct sum of cyclotomic companion blocks.  The
admissible block shapes are pure arithmetic: distinct divisors d_i of n
with lcm n and multiplicities e_i summing to sum e_i * phi(d_i) = 2g.
For odd n the invariant structure is unique exactly when the quotient
surface has genus zero, i.e. when no d_i = 1 block appears.

Run:  python3 demos/cyclic_orders.py
"""
from spinvariants import (cyclotomic_poly, decompositions, phi_at_one,
                          unique_spin_iff_quotient_genus_zero)

print("small cyclotomic polynomials and their values at 1:")
for d in (1, 2, 3, 4, 6, 7, 12):
    poly = cyclotomic_poly(d)
    print(f"  Phi_{d}(x) = {poly.pretty():24}  Phi_{d}(1) = {phi_at_one(d)}")
print()

for n, g in ((7, 3), (5, 3), (15, 4), (3, 2)):
    decs = decompositions(n, g)
    print(f"order {n}, genus {g}: {len(decs)} admissible decomposition(s)")
    for dec in decs:
        report = unique_spin_iff_quotient_genus_zero(dec)
        shape = " + ".join(f"{e} x Phi_{d}" for d, e in dec.parts)
        verdict = ("unique invariant structure"
                   if report.unique else
                   f"2^{2 * report.quotient_genus_eigen} invariant structures")
        print(f"  {shape:28} quotient genus {report.quotient_genus_eigen}"
              f" -> {verdict}")
    print()

print("order 7 on genus 3 (the Klein quartic's 7-fold symmetry) admits a")
print("single block Phi_7, quotient genus 0, so its invariant structure")
print("is unique, matching the direct homology computation.")
