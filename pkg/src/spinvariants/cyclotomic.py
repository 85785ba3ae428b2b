"""Cyclotomic polynomials, companion blocks, and order-n decompositions.

A finite-order homology action of order n on a genus-g surface is
similar over the rationals to a direct sum of e_i copies of the
companion matrix of the d_i-th cyclotomic polynomial, where the d_i are
distinct divisors of n with lcm exactly n and sum e_i * phi(d_i) = 2g.
This module enumerates those admissible shapes, builds the model
matrices, and evaluates the parity criterion deciding whether the
fixed-structure count collapses to one.

The model matrix is only similar to a genuine action, never equal to
one, so rely exclusively on similarity invariants (order, determinant
parity, eigenspace dimensions) and never on its entries.

All polynomial arithmetic is exact over arbitrary-precision integers;
cyclotomic coefficients first leave {-1, 0, 1} at d = 105, well inside
the tested range.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Iterable

from ._intmat import IntMatrix, as_int_matrix, block_diag
from .surface_action import HomologyAction


@dataclass(frozen=True)
class IntPoly:
    """An integer polynomial, constant term first; () is the zero polynomial."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"coefficients must be integers, got {c!r}")
        if coeffs and coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero (use from_coefficients)")

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> "IntPoly":
        """Build from any integer sequence, stripping trailing zeros."""
        vals = list(coeffs)
        while vals and vals[-1] == 0:
            vals.pop()
        return cls(tuple(vals))

    @classmethod
    def x_power_minus_one(cls, n: int) -> "IntPoly":
        if n < 1:
            raise ValueError("exponent must be positive")
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPoly.from_coefficients(out)

    def exact_div(self, divisor: "IntPoly") -> "IntPoly":
        """Quotient by a monic divisor; the division must leave no remainder."""
        if not divisor.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self.coefficients)
        dco = divisor.coefficients
        dd = divisor.degree
        quo = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            quo[i - dd] = c
            for j, b in enumerate(dco):
                rem[i - dd + j] -= c * b
        if any(rem):
            raise ValueError("division is not exact")
        return IntPoly.from_coefficients(quo)

    def pretty(self, var: str = "x") -> str:
        """Human-readable form, highest power first."""
        if self.is_zero:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            if power == 0:
                body = str(abs(c))
            else:
                head = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{head}{var}" if power == 1 else f"{head}{var}^{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    rest = n
    p = 2
    while p * p <= rest:
        while rest % p == 0:
            factors[p] = factors.get(p, 0) + 1
            rest //= p
        p += 1 if p == 2 else 2
    if rest > 1:
        factors[rest] = factors.get(rest, 0) + 1
    return factors


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, k in _factorize(n).items():
        divs = [d * p ** e for d in divs for e in range(k + 1)]
    return sorted(divs)


def euler_phi(d: int) -> int:
    """Euler's totient, by factorization."""
    if d < 1:
        raise ValueError("argument must be a positive integer")
    out = 1
    for p, k in _factorize(d).items():
        out *= (p - 1) * p ** (k - 1)
    return out


def phi_at_one(d: int) -> int:
    """Value of the d-th cyclotomic polynomial at 1, by the closed form.

    0 when d = 1, p when d is a prime power p^k, and 1 otherwise.  This
    deliberately avoids evaluating the polynomial; the evaluation route
    is kept as a cross-check in the tests.
    """
    if d < 1:
        raise ValueError("argument must be a positive integer")
    if d == 1:
        return 0
    factors = _factorize(d)
    if len(factors) == 1:
        return next(iter(factors))
    return 1


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by exact division of x^d - 1."""
    if d < 1:
        raise ValueError("argument must be a positive integer")
    result = IntPoly.x_power_minus_one(d)
    for dp in _divisors(d)[:-1]:
        result = result.exact_div(cyclotomic_poly(dp))
    return result


def companion_matrix(p: IntPoly) -> IntMatrix:
    """Companion matrix of a monic polynomial: superdiagonal of ones, last
    row the negated lower coefficients."""
    if not p.is_monic or p.degree < 1:
        raise ValueError("companion matrix requires a monic polynomial of degree >= 1")
    n = p.degree
    rows = [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n - 1)]
    rows.append([-c for c in p.coefficients[:n]])
    return as_int_matrix(rows)


@dataclass(frozen=True)
class Decomposition:
    """An admissible rational-canonical shape for an order-n action.

    parts holds (divisor d_i, multiplicity e_i) pairs with d_1 < d_2 <
    ... < d_r; the invariants below are exactly the admissibility
    conditions and are enforced at construction.
    """

    order: int
    genus: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError("order must be a positive integer")
        if not isinstance(self.genus, int) or self.genus < 1:
            raise ValueError("genus must be a positive integer")
        parts = tuple((int(d), int(e)) for d, e in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("at least one part is required")
        divisors = [d for d, _ in parts]
        if any(e < 1 for _, e in parts):
            raise ValueError("multiplicities must be >= 1")
        if sorted(set(divisors)) != divisors:
            raise ValueError("divisors must be distinct and ascending")
        if any(self.order % d for d in divisors):
            raise ValueError("every d_i must divide the order")
        if lcm(*divisors) != self.order:
            raise ValueError("lcm of the divisors must equal the order")
        if sum(e * euler_phi(d) for d, e in parts) != 2 * self.genus:
            raise ValueError("sum of e_i * phi(d_i) must equal 2 * genus")

    @property
    def total_size(self) -> int:
        return 2 * self.genus


def decompositions(n: int, g: int) -> list[Decomposition]:
    """All admissible decompositions for order n and genus g, in
    lexicographic order of their parts tuples; empty when none exist."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("order must be a positive integer")
    if not isinstance(g, int) or g < 1:
        raise ValueError("genus must be a positive integer")
    divs = _divisors(n)
    phis = [euler_phi(d) for d in divs]
    # suffix_lcm[i] = lcm of divs[i:]; lets the search abandon branches
    # that can no longer reach lcm = n.
    suffix_lcm = [1] * (len(divs) + 1)
    for i in range(len(divs) - 1, -1, -1):
        suffix_lcm[i] = lcm(divs[i], suffix_lcm[i + 1])
    found: list[tuple[tuple[int, int], ...]] = []

    def walk(idx: int, budget: int, lcm_so_far: int,
             chosen: tuple[tuple[int, int], ...]) -> None:
        if budget == 0:
            if lcm_so_far == n:
                found.append(chosen)
            return
        if idx == len(divs) or lcm(lcm_so_far, suffix_lcm[idx]) != n:
            return
        walk(idx + 1, budget, lcm_so_far, chosen)
        d, ph = divs[idx], phis[idx]
        e = 1
        while e * ph <= budget:
            walk(idx + 1, budget - e * ph, lcm(lcm_so_far, d), chosen + ((d, e),))
            e += 1

    walk(0, 2 * g, 1, ())
    return [Decomposition(n, g, parts) for parts in sorted(found)]


def model_matrix(dec: Decomposition) -> HomologyAction:
    """Block-diagonal direct sum of e_i copies of the companion of Phi_{d_i}."""
    blocks = []
    for d, e in dec.parts:
        blocks.extend([companion_matrix(cyclotomic_poly(d))] * e)
    return HomologyAction(dec.genus, block_diag(blocks))


def shifted_det_is_odd(dec: Decomposition) -> bool:
    """Parity of det(I - A^T) for the modelled action.

    The determinant factors as the product of Phi_{d_i}(1)^{e_i}, so it
    is odd exactly when every factor is odd: no d_i equal to 1 (factor
    0) and no d_i a power of two (factor 2).
    """
    return all(phi_at_one(d) % 2 == 1 for d, _ in dec.parts)


@dataclass(frozen=True)
class UniquenessReport:
    """Outcome of the odd-order uniqueness criterion."""

    unique: bool
    quotient_genus_eigen: int


def unique_spin_iff_quotient_genus_zero(dec: Decomposition) -> UniquenessReport:
    """For odd order: unique invariant structure iff the quotient surface
    has genus zero.

    The genus h of the orbit surface is read off the fixed eigenspace,
    whose dimension is e_1 when d_1 = 1 (and 0 otherwise) and always
    equals 2h.  Even orders are rejected: the criterion's hypothesis
    fails and no prediction is offered.
    """
    if dec.order % 2 == 0:
        raise ValueError("the uniqueness criterion requires odd order")
    if dec.parts[0][0] == 1:
        e1 = dec.parts[0][1]
        if e1 % 2:
            raise ValueError("multiplicity of divisor 1 must be even (it equals twice "
                             "the quotient genus)")
        h = e1 // 2
    else:
        h = 0
    return UniquenessReport(unique=shifted_det_is_odd(dec), quotient_genus_eigen=h)
