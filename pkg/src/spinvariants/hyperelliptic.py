"""Spin structures on hyperelliptic curves as branch-point combinatorics.

A genus-g hyperelliptic curve y^2 = prod (x - e_i) ramifies over the
2g+2 points of its branch set B.  Spin structures correspond to subsets
T of B with |T| congruent to g+1 mod 2, taken modulo complementation
T ~ T^c; there are exactly 2^{2g} classes.  An automorphism descends to
a permutation of B, and a class is invariant precisely when the image
of T is T or T^c.

Branch points are opaque labels 1..2g+2 here; no complex coordinates
appear anywhere.  The geometric dictionary (roots of the defining
polynomial, rotation orbits of symmetric root configurations) lives only
in the docstrings of :func:`bolza_table`.

Counts come two ways: :func:`fixed_count_brute` enumerates classes, and
:func:`fixed_count_closed_form` applies the closed formulas for
rotation-like permutations (all nontrivial cycles of one length n, at
most two fixed points).  The two must agree; any disagreement is
surfaced as a failure, never silently corrected.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

#: enumerations touch all 2^{2g} classes; keep the genus modest.
GENUS_CAP = 8


def _check_genus(g: int) -> None:
    if not isinstance(g, int) or g < 1:
        raise ValueError("genus must be a positive integer")


def _check_genus_bound(g: int) -> None:
    _check_genus(g)
    if g > GENUS_CAP:
        raise ValueError(f"enumeration bound exceeded: genus must be <= {GENUS_CAP}")


@dataclass(frozen=True)
class BranchSet:
    """The labelled branch set of a genus-g hyperelliptic curve."""

    genus: int

    def __post_init__(self) -> None:
        _check_genus(self.genus)

    @property
    def size(self) -> int:
        return 2 * self.genus + 2

    def labels(self) -> range:
        return range(1, self.size + 1)


def _canonical_rep(genus: int, labels: Iterable[int]) -> tuple[int, ...]:
    """Canonical representative of {T, T^c}: the smaller subset, ties
    (|T| = g+1) broken by lexicographically least sorted tuple."""
    size = 2 * genus + 2
    subset = frozenset(labels)
    for x in subset:
        if not isinstance(x, int) or not 1 <= x <= size:
            raise ValueError(f"branch label {x!r} is not in 1..{size}")
    comp = frozenset(range(1, size + 1)) - subset
    a, b = tuple(sorted(subset)), tuple(sorted(comp))
    if len(a) != len(b):
        return a if len(a) < len(b) else b
    return min(a, b)


@dataclass(frozen=True)
class SpinClass:
    """A spin structure: a subset class {T, T^c} with |T| = g+1 mod 2.

    ``rep`` is the canonical representative, so class identity is plain
    data equality.  Build instances through :meth:`from_subset` unless
    the representative is already canonical.
    """

    genus: int
    rep: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_genus(self.genus)
        rep = tuple(self.rep)
        object.__setattr__(self, "rep", rep)
        if rep != _canonical_rep(self.genus, rep):
            raise ValueError(f"{rep} is not a canonical representative")
        if (len(rep) - (self.genus + 1)) % 2:
            raise ValueError("representative size must be congruent to g+1 mod 2")

    @classmethod
    def from_subset(cls, genus: int, labels: Iterable[int]) -> "SpinClass":
        return cls(genus, _canonical_rep(genus, labels))


@dataclass(frozen=True)
class EvenClass:
    """An element of E_g: an even-cardinality subset class {T, T^c}."""

    genus: int
    rep: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_genus(self.genus)
        rep = tuple(self.rep)
        object.__setattr__(self, "rep", rep)
        if rep != _canonical_rep(self.genus, rep):
            raise ValueError(f"{rep} is not a canonical representative")
        if len(rep) % 2:
            raise ValueError("representative size must be even")

    @classmethod
    def from_subset(cls, genus: int, labels: Iterable[int]) -> "EvenClass":
        return cls(genus, _canonical_rep(genus, labels))


@dataclass(frozen=True)
class BranchPermutation:
    """A permutation of the branch labels 1..2g+2.

    ``images[i - 1]`` is the image of label i.  The friendly constructor
    is :meth:`from_cycles`, which reads disjoint cycle notation such as
    "(1 2 3)(4 5)"; omitted labels are fixed points.
    """

    genus: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_genus(self.genus)
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        size = 2 * self.genus + 2
        if sorted(images) != list(range(1, size + 1)):
            raise ValueError(f"images must be a permutation of 1..{size}")

    @classmethod
    def identity(cls, genus: int) -> "BranchPermutation":
        return cls(genus, tuple(range(1, 2 * genus + 3)))

    @classmethod
    def from_cycles(cls, genus: int, text: str) -> "BranchPermutation":
        _check_genus(genus)
        size = 2 * genus + 2
        stripped = re.sub(r"\s+", " ", text).strip()
        if stripped in ("", "()"):
            return cls.identity(genus)
        bodies = re.findall(r"\(([^()]*)\)", stripped)
        leftover = re.sub(r"\([^()]*\)", "", stripped).strip()
        if leftover:
            raise ValueError(f"unexpected text outside cycles: {leftover!r}")
        mapping: dict[int, int] = {}
        seen: set[int] = set()
        for body in bodies:
            tokens = [t for t in re.split(r"[,\s]+", body.strip()) if t]
            labels = []
            for tok in tokens:
                try:
                    label = int(tok)
                except ValueError:
                    raise ValueError(f"cycle entry {tok!r} is not an integer") from None
                if not 1 <= label <= size:
                    raise ValueError(f"cycle entry {label} is outside 1..{size}")
                if label in seen:
                    raise ValueError(f"label {label} appears in more than one position")
                seen.add(label)
                labels.append(label)
            for a, b in zip(labels, labels[1:] + labels[:1]):
                mapping[a] = b
        return cls(genus, tuple(mapping.get(i, i) for i in range(1, size + 1)))

    def apply(self, label: int) -> int:
        return self.images[label - 1]

    def compose(self, other: "BranchPermutation") -> "BranchPermutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        if self.genus != other.genus:
            raise ValueError("permutations act on different branch sets")
        return BranchPermutation(self.genus,
                                 tuple(self.apply(x) for x in other.images))

    def inverse(self) -> "BranchPermutation":
        size = len(self.images)
        inv = [0] * size
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return BranchPermutation(self.genus, tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its
        least label, sorted by that label."""
        out = []
        done: set[int] = set()
        for start in range(1, len(self.images) + 1):
            if start in done:
                continue
            cyc = [start]
            done.add(start)
            nxt = self.apply(start)
            while nxt != start:
                cyc.append(nxt)
                done.add(nxt)
                nxt = self.apply(nxt)
            out.append(tuple(cyc))
        return out

    def to_cycles(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


@dataclass(frozen=True)
class OrbitShape:
    """Cycle structure of a rotation-like branch permutation: free_orbits
    cycles of length order, plus at most two fixed points."""

    order: int
    fixed_points: int
    free_orbits: int

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or self.order < 2:
            raise ValueError("order must be an integer >= 2")
        if self.fixed_points not in (0, 1, 2):
            raise ValueError("fixed_points must be 0, 1, or 2")
        if not isinstance(self.free_orbits, int) or self.free_orbits < 0:
            raise ValueError("free_orbits must be a nonnegative integer")
        if self.order % 2 == 0 and self.fixed_points == 1:
            raise ValueError("an even-order rotation cannot fix exactly one branch point")
        total = self.order * self.free_orbits + self.fixed_points
        if total % 2 or total < 4:
            raise ValueError("n*r + fixed must be an even branch-set size >= 4")

    @property
    def genus(self) -> int:
        return (self.order * self.free_orbits + self.fixed_points - 2) // 2


def enumerate_spin_classes(g: int) -> list[SpinClass]:
    """All 2^{2g} spin classes, by canonical representative, ordered by
    (representative size, lexicographic)."""
    _check_genus_bound(g)
    size = 2 * g + 2
    out = []
    for k in range((g + 1) % 2, g + 2, 2):
        for combo in itertools.combinations(range(1, size + 1), k):
            # at the tie size g+1 the canonical representative is the
            # half containing label 1; the other half is its complement
            if k == g + 1 and combo[0] != 1:
                continue
            out.append(SpinClass(g, combo))
    return out


def enumerate_even_classes(g: int) -> list[EvenClass]:
    """All 2^{2g} elements of E_g, same ordering rule as the spin classes."""
    _check_genus_bound(g)
    size = 2 * g + 2
    out = []
    for k in range(0, g + 2, 2):
        for combo in itertools.combinations(range(1, size + 1), k):
            if k == g + 1 and combo[0] != 1:
                continue
            out.append(EvenClass(g, combo))
    return out


def class_parity(c: SpinClass) -> str:
    """"even" or "odd": the parity of h^0 = (g + 1 - |T_min|) / 2."""
    h0 = (c.genus + 1 - len(c.rep)) // 2
    return "even" if h0 % 2 == 0 else "odd"


def affine_add(c: SpinClass, e: EvenClass) -> SpinClass:
    """Translate a spin class by an element of E_g: symmetric difference
    of representatives, well defined on classes."""
    if c.genus != e.genus:
        raise ValueError("spin class and even class have different genus")
    return SpinClass.from_subset(c.genus, set(c.rep) ^ set(e.rep))


def permute_class(c: SpinClass, p: BranchPermutation) -> SpinClass:
    """Image of a spin class under a branch permutation."""
    if c.genus != p.genus:
        raise ValueError("spin class and permutation have different genus")
    return SpinClass.from_subset(c.genus, (p.apply(x) for x in c.rep))


def fixed_count_brute(p: BranchPermutation) -> int:
    """Number of spin classes fixed by p, by full enumeration."""
    _check_genus_bound(p.genus)
    return sum(1 for c in enumerate_spin_classes(p.genus)
               if permute_class(c, p) == c)


def classify_orbit_shape(p: BranchPermutation) -> OrbitShape:
    """Read off the (n, fixed, r) shape of a rotation-like permutation.

    Rejects permutations whose nontrivial cycles have mixed lengths or
    that fix more than two points; the closed-form counts do not apply
    to those (brute force still does).
    """
    lengths = sorted(len(c) for c in p.cycles())
    fixed = lengths.count(1)
    nontrivial = sorted(set(length for length in lengths if length > 1))
    if not nontrivial:
        raise ValueError("the identity permutation has no rotation shape")
    if len(nontrivial) > 1:
        raise ValueError(f"mixed nontrivial cycle lengths {nontrivial}: "
                         "not rotation-like, use fixed_count_brute")
    if fixed > 2:
        raise ValueError(f"{fixed} fixed points: a rotation-like permutation "
                         "fixes at most two")
    n = nontrivial[0]
    return OrbitShape(n, fixed, lengths.count(n))


def fixed_count_closed_form(shape: OrbitShape, g: int) -> int:
    """Closed-form invariant count for a rotation-like permutation.

    Odd order n: 2^{r-2}, 2^{r-1}, 2^r for 0, 1, 2 fixed points.  Even
    n: 2^{r-1} when free and g is even, 2^r when free and g is odd, and
    2^r with two fixed points.  (Even n with one fixed point cannot
    occur: the branch set has even size.)
    """
    _check_genus(g)
    if shape.order * shape.free_orbits + shape.fixed_points != 2 * g + 2:
        raise ValueError("shape does not match genus: n*r + fixed must equal 2g+2")
    n, f, r = shape.order, shape.fixed_points, shape.free_orbits
    if n % 2 == 1:
        # f = 0 forces r even >= 2, so the exponent is never negative
        return 2 ** (r - 2 + f)
    if f == 0:
        return 2 ** (r - 1) if g % 2 == 0 else 2 ** r
    return 2 ** r


def _closure(perms: Sequence[BranchPermutation]) -> list[BranchPermutation]:
    """The group generated by perms, by breadth-first products."""
    size_cap = 2 * factorial(2 * perms[0].genus + 2)
    identity = BranchPermutation.identity(perms[0].genus)
    group = {identity.images: identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for q in frontier:
            for gen in perms:
                candidate = gen.compose(q)
                if candidate.images not in group:
                    group[candidate.images] = candidate
                    nxt.append(candidate)
        if len(group) > size_cap:
            raise RuntimeError("group closure exceeded its size guard")
        frontier = nxt
    return list(group.values())


def group_fixed_count(perms: Sequence[BranchPermutation]) -> int:
    """Number of spin classes fixed by every element of the generated group."""
    perms = list(perms)
    if not perms:
        raise ValueError("at least one permutation is required")
    genus = perms[0].genus
    if any(q.genus != genus for q in perms):
        raise ValueError("permutations act on different branch sets")
    _check_genus_bound(genus)
    group = _closure(perms)
    return sum(1 for c in enumerate_spin_classes(genus)
               if all(permute_class(c, q) == c for q in group))


@dataclass(frozen=True)
class BolzaCase:
    """One row of the genus-2 catalog: a symmetry group of a branch
    configuration and its expected invariant-structure count."""

    case_label: str
    group_name: str
    generators: tuple[BranchPermutation, ...]
    expected_count: int


def bolza_table() -> list[BolzaCase]:
    """The six genus-2 catalog fixtures with expected counts 4, 2, 1, 1, 0, 1.

    Branch labels encode symmetric root configurations on the sphere:

    (i)   free involution x -> -x on six generic points, pairing 1-4,
          2-5, 3-6;
    (ii)  parallelogram symmetry, two commuting involutions;
    (iii) two concentric triangles, rotation by a third plus an
          involution exchanging them;
    (iv)  regular hexagon, full rotation plus a reflection;
    (v)   octahedron with poles 5 and 6: quarter turn about the polar
          axis plus a half turn through equator vertices 1 and 3, which
          swaps the poles;
    (vi)  five points in one rotation orbit, the sixth fixed.
    """
    rows = [
        ("(i)", "Z_2", ["(1 4)(2 5)(3 6)"], 4),
        ("(ii)", "D_4", ["(1 2)(3 4)", "(1 3)(2 4)(5 6)"], 2),
        ("(iii)", "D_6", ["(1 3 5)(2 4 6)", "(1 2)(3 6)(4 5)"], 1),
        ("(iv)", "D_12", ["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"], 1),
        ("(v)", "octahedral", ["(1 2 3 4)", "(2 4)(5 6)"], 0),
        ("(vi)", "Z_5", ["(1 2 3 4 5)"], 1),
    ]
    return [BolzaCase(label, name,
                      tuple(BranchPermutation.from_cycles(2, s) for s in gens),
                      expected)
            for label, name, gens, expected in rows]
