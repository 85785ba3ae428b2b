"""Dense exact linear algebra over GF(2).

Vectors and matrix rows are bit-packed into Python integers (bit ``j``
is column ``j``), so a row operation is a single XOR and arbitrary
dimensions cost nothing extra.  Dimensions are capped at
:data:`DIMENSION_CAP` = 1024, far beyond any surface genus this library
is used for, purely to catch nonsense input early.

Elimination is deterministic: the pivot for each column is the first
row (top to bottom) with a nonzero entry, columns are processed left to
right, and nullspace basis vectors are emitted in increasing order of
their free column.  Callers may rely on exact basis output.

All values are frozen; every function returns fresh values and is safe
to call concurrently.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

DIMENSION_CAP = 1024

#: Refuse to enumerate affine solution sets larger than this.
ENUMERATION_CAP = 1 << 20


def _check_dim(n: int, what: str) -> None:
    if not isinstance(n, int) or not 0 <= n <= DIMENSION_CAP:
        raise ValueError(f"{what} must be an integer in 0..{DIMENSION_CAP}, got {n!r}")


@dataclass(frozen=True)
class BitVector:
    """A length-``length`` vector over GF(2), coordinates packed into ``bits``."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        _check_dim(self.length, "vector length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set outside the declared length")

    @classmethod
    def from_ints(cls, values: Iterable[int]) -> "BitVector":
        """Build from any integer sequence, reducing each entry mod 2."""
        vals = list(values)
        bits = 0
        for i, v in enumerate(vals):
            if v % 2:
                bits |= 1 << i
        return cls(len(vals), bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return (self[i] for i in range(self.length))

    def __len__(self) -> int:
        return self.length

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("vector length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def dot(self, other: "BitVector") -> int:
        if self.length != other.length:
            raise ValueError("vector length mismatch")
        return (self.bits & other.bits).bit_count() & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_ints(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def __repr__(self) -> str:
        return f"BitVector([{''.join(str(b) for b in self)}])"


@dataclass(frozen=True)
class BitMatrix:
    """A ``rows`` x ``cols`` matrix over GF(2); ``data[i]`` packs row ``i``."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_dim(self.rows, "row count")
        _check_dim(self.cols, "column count")
        if len(self.data) != self.rows:
            raise ValueError("row data does not match declared row count")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise ValueError("row bits set outside the declared column count")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BitMatrix":
        """Build from nested integer sequences, reducing entries mod 2."""
        packed = []
        width = None
        for row in rows:
            vals = list(row)
            if width is None:
                width = len(vals)
            elif len(vals) != width:
                raise ValueError("ragged rows")
            bits = 0
            for j, v in enumerate(vals):
                if v % 2:
                    bits |= 1 << j
            packed.append(bits)
        if width is None:
            width = 0
        return cls(len(packed), width, tuple(packed))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def stack(cls, mats: Iterable["BitMatrix"]) -> "BitMatrix":
        """Stack matrices vertically; all must share a column count."""
        mats = list(mats)
        if not mats:
            raise ValueError("nothing to stack")
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise ValueError("column count mismatch in stack")
        data = tuple(r for m in mats for r in m.data)
        return cls(len(data), cols, data)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def column(self, j: int) -> BitVector:
        bits = 0
        for i in range(self.rows):
            bits |= ((self.data[i] >> j) & 1) << i
        return BitVector(self.rows, bits)

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                j = (r & -r).bit_length() - 1
                out[j] |= 1 << i
                r &= r - 1
        return BitMatrix(self.cols, self.rows, tuple(out))

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shape mismatch")
        return BitMatrix(self.rows, self.cols,
                         tuple(a ^ b for a, b in zip(self.data, other.data)))

    def apply(self, v: BitVector) -> BitVector:
        """Matrix-vector product over GF(2)."""
        if v.length != self.cols:
            raise ValueError("vector length does not match column count")
        bits = 0
        for i, r in enumerate(self.data):
            bits |= ((r & v.bits).bit_count() & 1) << i
        return BitVector(self.rows, bits)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Product over GF(2).  Row i of the result XORs the rows of ``b``
    selected by the set bits of row i of ``a``."""
    if a.cols != b.rows:
        raise ValueError("inner dimensions do not match")
    out = []
    for r in a.data:
        acc = 0
        rr = r
        while rr:
            k = (rr & -rr).bit_length() - 1
            acc ^= b.data[k]
            rr &= rr - 1
        out.append(acc)
    return BitMatrix(a.rows, b.cols, tuple(out))


def _rref(data: Iterable[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of packed rows; returns (rows, pivot columns)."""
    rows = list(data)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if (rows[i] >> c) & 1), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> c) & 1:
                rows[i] ^= rows[r]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: BitMatrix) -> int:
    """Row rank over GF(2)."""
    return len(_rref(m.data, m.cols)[1])


def nullspace(m: BitMatrix) -> list[BitVector]:
    """Deterministic basis of {x : m x = 0}; size equals cols - rank."""
    rows, pivots = _rref(m.data, m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for row_idx, pivot_col in enumerate(pivots):
            if (rows[row_idx] >> free) & 1:
                bits |= 1 << pivot_col
        basis.append(BitVector(m.cols, bits))
    return basis


@dataclass(frozen=True)
class AffineSolutionSet:
    """All solutions of one affine system over GF(2): ``particular`` plus the
    span of ``basis``.  ``particular is None`` encodes the empty set (the
    system was inconsistent), in which case ``basis`` is empty too."""

    dimension: int
    particular: BitVector | None
    basis: tuple[BitVector, ...]

    def __post_init__(self) -> None:
        _check_dim(self.dimension, "ambient dimension")
        if self.particular is None:
            if self.basis:
                raise ValueError("empty set cannot carry a basis")
            return
        if self.particular.length != self.dimension:
            raise ValueError("particular solution has wrong length")
        for b in self.basis:
            if b.length != self.dimension:
                raise ValueError("basis vector has wrong length")

    @property
    def is_empty(self) -> bool:
        return self.particular is None

    def cardinality(self) -> int:
        return 0 if self.particular is None else 1 << len(self.basis)

    def vectors(self) -> list[BitVector]:
        """All solutions, sorted lexicographically by coordinate tuple."""
        if self.particular is None:
            return []
        if self.cardinality() > ENUMERATION_CAP:
            raise ValueError(
                f"solution set of size 2^{len(self.basis)} is too large to enumerate")
        sols = [self.particular.bits]
        for b in self.basis:
            sols += [s ^ b.bits for s in sols]
        return sorted((BitVector(self.dimension, s) for s in sols),
                      key=lambda v: v.to_ints())

    def contains(self, v: BitVector) -> bool:
        """Membership test: v - particular must lie in the basis span."""
        if self.particular is None:
            return False
        if v.length != self.dimension:
            raise ValueError("vector length mismatch")
        residue = v.bits ^ self.particular.bits
        rows, pivots = _rref([b.bits for b in self.basis], self.dimension)
        for row, c in zip(rows, pivots):
            if (residue >> c) & 1:
                residue ^= row
        return residue == 0

    def __iter__(self) -> Iterator[BitVector]:
        return iter(self.vectors())


def solve_affine(m: BitMatrix, b: BitVector) -> AffineSolutionSet:
    """Full solution set of ``m x = b``; empty when inconsistent."""
    if b.length != m.rows:
        raise ValueError("right-hand side length does not match row count")
    aug = [row | (((b.bits >> i) & 1) << m.cols) for i, row in enumerate(m.data)]
    rows, pivots = _rref(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return AffineSolutionSet(m.cols, None, ())
    bits = 0
    for row_idx, pivot_col in enumerate(pivots):
        if (rows[row_idx] >> m.cols) & 1:
            bits |= 1 << pivot_col
    particular = BitVector(m.cols, bits)
    return AffineSolutionSet(m.cols, particular, tuple(nullspace(m)))
