"""Linear algebra over GF(2) on bit-packed vectors.

A vector in GF(2)^n is an int whose bit i is coordinate i; addition is XOR.
Echelon bases keep their rows fully reduced with the pivot at the lowest set
bit, which makes reduction a single pass and membership tests, coordinates,
kernels and span solving cheap.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator


def iter_bits(x: int) -> Iterator[int]:
    """Yield the positions of the set bits of x, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_coeffs(coeffs: Iterable[int]) -> int:
    bits = 0
    for i, c in enumerate(coeffs):
        if c & 1:
            bits |= 1 << i
    return bits


def to_coeffs(bits: int, length: int) -> list[int]:
    return [(bits >> i) & 1 for i in range(length)]


@dataclass(frozen=True)
class BitVec:
    """Fixed-length GF(2) vector; coordinate i is bit i of `bits`."""

    len: int
    bits: int = 0

    def __post_init__(self):
        if self.len < 0:
            raise ValueError("negative length")
        if not 0 <= self.bits < (1 << self.len):
            raise ValueError("coordinates outside the declared length")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "BitVec":
        coeffs = list(coeffs)
        return cls(len(coeffs), from_coeffs(coeffs))

    def coeffs(self) -> list[int]:
        return to_coeffs(self.bits, self.len)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.len:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self.len != other.len:
            raise ValueError("length mismatch")
        return BitVec(self.len, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        return "[" + " ".join(str(c) for c in self.coeffs()) + "]"


class EchelonBasis:
    """Mutable reduced row-echelon basis of a subspace of GF(2)^dim_ambient.

    Rows are fully reduced (each pivot bit occurs in exactly one row) and
    sorted by pivot; the pivot of a row is its lowest set bit.
    """

    __slots__ = ("dim_ambient", "_rows", "pivots")

    def __init__(self, dim_ambient: int):
        if dim_ambient < 0:
            raise ValueError("negative ambient dimension")
        self.dim_ambient = dim_ambient
        self._rows: list[int] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> list[BitVec]:
        return [BitVec(self.dim_ambient, r) for r in self._rows]

    def row_bits(self) -> list[int]:
        return list(self._rows)

    def reduce(self, v: int) -> int:
        """Canonical coset representative of v modulo the row space."""
        for pivot, row in zip(self.pivots, self._rows):
            if (v >> pivot) & 1:
                v ^= row
        return v

    def add(self, v: int) -> bool:
        """Add a vector to the span; return True if the rank grew."""
        if v >> self.dim_ambient:
            raise ValueError("vector outside the ambient space")
        v = self.reduce(v)
        if v == 0:
            return False
        pivot = (v & -v).bit_length() - 1
        for i, row in enumerate(self._rows):
            if (row >> pivot) & 1:
                self._rows[i] = row ^ v
        at = bisect_left(self.pivots, pivot)
        self.pivots.insert(at, pivot)
        self._rows.insert(at, v)
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def coordinates(self, v: int) -> list[int] | None:
        """Coefficients of v over self.rows, or None if v is not in the span."""
        coords = [0] * len(self._rows)
        acc = 0
        for i, (pivot, row) in enumerate(zip(self.pivots, self._rows)):
            if (v >> pivot) & 1:
                coords[i] = 1
                acc ^= row
        return coords if acc == v else None

    def copy(self) -> "EchelonBasis":
        out = EchelonBasis(self.dim_ambient)
        out._rows = list(self._rows)
        out.pivots = list(self.pivots)
        return out

    def __iter__(self) -> Iterator[int]:
        return iter(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __repr__(self) -> str:
        return f"EchelonBasis(dim={self.dim_ambient}, rank={self.rank})"


def echelonize(rows: Iterable[int], dim_ambient: int) -> EchelonBasis:
    """Reduced row-echelon basis of the span of the given bitmask rows."""
    basis = EchelonBasis(dim_ambient)
    for row in rows:
        basis.add(row)
    return basis


def kernel(images: Iterable[int], dim_codomain: int) -> EchelonBasis:
    """Kernel of the GF(2)-linear map sending e_i to images[i].

    The result is an echelon basis inside GF(2)^len(images).  Marker bits
    placed above the codomain track which domain vectors were combined; a
    row whose image part vanished is a kernel element.
    """
    images = list(images)
    aug = EchelonBasis(dim_codomain + len(images))
    for i, im in enumerate(images):
        if im >> dim_codomain:
            raise ValueError("image outside the codomain")
        aug.add(im | (1 << (dim_codomain + i)))
    ker = EchelonBasis(len(images))
    for pivot, row in zip(aug.pivots, aug):
        if pivot >= dim_codomain:
            ker.add(row >> dim_codomain)
    return ker


class SpanSolver:
    """Expresses targets over a fixed list of vectors, via marker bits."""

    def __init__(self, vectors: Iterable[int], dim_ambient: int):
        self.vectors = list(vectors)
        self.dim_ambient = dim_ambient
        self._aug = EchelonBasis(dim_ambient + len(self.vectors))
        for i, v in enumerate(self.vectors):
            if v >> dim_ambient:
                raise ValueError("vector outside the ambient space")
            self._aug.add(v | (1 << (dim_ambient + i)))

    def express(self, target: int) -> int | None:
        """Bitmask over vector indices XOR-ing to target, or None."""
        if target >> self.dim_ambient:
            return None
        red = self._aug.reduce(target)
        if red & ((1 << self.dim_ambient) - 1):
            return None
        return red >> self.dim_ambient


def solve_in_span(vectors: Iterable[int], target: int, dim_ambient: int) -> int | None:
    """One-shot SpanSolver.express."""
    return SpanSolver(vectors, dim_ambient).express(target)
