"""Exact dense linear algebra over prime fields GF(p).

Everything higher up (algebras, modules, resolutions) reduces to ranks,
kernels and solves computed here.  Matrices are dense, row-major, with
entries stored as reduced residues in numpy int64 arrays; p <= 65521 keeps
all intermediate products well inside int64 range.

Zero-row and zero-column matrices are first-class citizens: zero modules
occur all over the place (M = 0, trivial cokernels) and must round-trip
through every operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from sympy import isprime

MAX_PRIME = 65521


class LinalgError(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p), 2 <= p <= 65521."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p <= MAX_PRIME):
            raise LinalgError(f"modulus {self.p} out of range [2, {MAX_PRIME}]")
        if not isprime(self.p):
            raise LinalgError(f"modulus {self.p} is not prime")

    def inv(self, x: int) -> int:
        return pow(int(x) % self.p, -1, self.p)


class FpMatrix:
    """Dense matrix over GF(p).  Immutable by convention."""

    __slots__ = ("field", "arr")

    def __init__(self, arr, field: FieldSpec):
        a = np.asarray(arr, dtype=np.int64)
        if a.ndim != 2:
            raise LinalgError(f"expected 2-d array, got shape {a.shape}")
        self.arr = a % field.p
        self.field = field

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "FpMatrix":
        return cls(np.eye(n, dtype=np.int64), field)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence[int],
                     field: FieldSpec) -> "FpMatrix":
        if len(entries) != rows * cols:
            raise LinalgError("entry count does not match rows*cols")
        return cls(np.asarray(entries, dtype=np.int64).reshape(rows, cols), field)

    @classmethod
    def column(cls, vec, field: FieldSpec) -> "FpMatrix":
        v = np.asarray(vec, dtype=np.int64)
        return cls(v.reshape(-1, 1), field)

    # -- basic queries -----------------------------------------------------

    @property
    def rows(self) -> int:
        return self.arr.shape[0]

    @property
    def cols(self) -> int:
        return self.arr.shape[1]

    def is_zero(self) -> bool:
        return not self.arr.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return (self.field == other.field and self.arr.shape == other.arr.shape
                and bool((self.arr == other.arr).all()))

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.field.p}, {self.arr.tolist()})"

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "FpMatrix"):
        if self.field != other.field:
            raise LinalgError("field mismatch")

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise LinalgError(f"shape mismatch {self.arr.shape} @ {other.arr.shape}")
        return FpMatrix(self.arr @ other.arr, self.field)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        return FpMatrix(self.arr + other.arr, self.field)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._check(other)
        return FpMatrix(self.arr - other.arr, self.field)

    def __neg__(self) -> "FpMatrix":
        return FpMatrix(-self.arr, self.field)

    def scale(self, c: int) -> "FpMatrix":
        return FpMatrix(self.arr * (c % self.field.p), self.field)

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.arr.T, self.field)

    def apply(self, vec) -> np.ndarray:
        """Apply to a 1-d coordinate vector, returning a 1-d vector."""
        v = np.asarray(vec, dtype=np.int64)
        return (self.arr @ v) % self.field.p

    def col(self, j: int) -> np.ndarray:
        return self.arr[:, j].copy()


@dataclass
class RrefResult:
    reduced: FpMatrix
    rank: int
    pivot_cols: list


def _rref_inplace(a: np.ndarray, p: int):
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = None
        for i in range(r, rows):
            if a[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        nz = np.nonzero(a[:, c])[0]
        nz = nz[nz != r]
        if nz.size:
            a[nz] = (a[nz] - np.outer(a[nz, c], a[r])) % p
        pivots.append(c)
        r += 1
    return pivots


def rref(m: FpMatrix) -> RrefResult:
    """Unique reduced row-echelon form, rank and pivot columns."""
    a = m.arr.copy()
    pivots = _rref_inplace(a, m.field.p)
    return RrefResult(FpMatrix(a, m.field), len(pivots), pivots)


def rank(m: FpMatrix) -> int:
    return rref(m).rank


def row_basis(m: FpMatrix) -> FpMatrix:
    """Canonical (echelonized) basis of the row space, zero rows dropped."""
    r = rref(m)
    return FpMatrix(r.reduced.arr[: r.rank], m.field)


def kernel_basis(m: FpMatrix) -> FpMatrix:
    """Canonical basis of the right null space, one vector per row.

    Row count is cols - rank; the rows are echelonized so equal subspaces
    have literally equal bases.
    """
    r = rref(m)
    p = m.field.p
    free = [c for c in range(m.cols) if c not in r.pivot_cols]
    basis = np.zeros((len(free), m.cols), dtype=np.int64)
    red = r.reduced.arr
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(r.pivot_cols):
            basis[k, pc] = (-red[i, f]) % p
    out = rref(FpMatrix(basis, m.field)).reduced
    return FpMatrix(out.arr[: len(free)], m.field)


def solve(a: FpMatrix, b: FpMatrix) -> Optional[FpMatrix]:
    """Solve a @ x = b; free variables are set to 0.  None if inconsistent."""
    if a.field != b.field:
        raise LinalgError("field mismatch")
    if a.rows != b.rows:
        raise LinalgError("dimension mismatch in solve")
    p = a.field.p
    aug = np.hstack([a.arr, b.arr])
    pivots = _rref_inplace(aug, p)
    if any(c >= a.cols for c in pivots):
        return None
    x = np.zeros((a.cols, b.cols), dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = aug[i, a.cols:]
    return FpMatrix(x, a.field)


def inverse(m: FpMatrix) -> Optional[FpMatrix]:
    if m.rows != m.cols:
        return None
    x = solve(m, FpMatrix.identity(m.rows, m.field))
    if x is None or rank(m) != m.rows:
        return None
    return x


def is_invertible(m: FpMatrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def kron(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    """Kronecker product; (a kron b)(e_i ox e_j) = a e_i ox b e_j with
    row-major tensor index (i, j) -> i * b.rows + j."""
    if a.field != b.field:
        raise LinalgError("field mismatch")
    return FpMatrix(np.kron(a.arr, b.arr), a.field)


def direct_sum(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    if a.field != b.field:
        raise LinalgError("field mismatch")
    out = np.zeros((a.rows + b.rows, a.cols + b.cols), dtype=np.int64)
    out[: a.rows, : a.cols] = a.arr
    out[a.rows:, a.cols:] = b.arr
    return FpMatrix(out, a.field)


def hstack(mats: Sequence[FpMatrix]) -> FpMatrix:
    field = mats[0].field
    return FpMatrix(np.hstack([m.arr for m in mats]), field)


def vstack(mats: Sequence[FpMatrix]) -> FpMatrix:
    field = mats[0].field
    return FpMatrix(np.vstack([m.arr for m in mats]), field)


def in_row_span(basis: FpMatrix, vec) -> bool:
    """Is vec (1-d) in the row space of basis?"""
    v = np.asarray(vec, dtype=np.int64).reshape(1, -1)
    stacked = FpMatrix(np.vstack([basis.arr, v]), basis.field)
    return rank(stacked) == rank(basis)


def columns_contained(a: FpMatrix, b: FpMatrix) -> bool:
    """Is the column space of a contained in the column space of b?"""
    return rank(hstack([b, a])) == rank(b)


@dataclass
class QuotientMaps:
    project: FpMatrix   # D -> q
    include: FpMatrix   # q -> D, section with project @ include = I


def quotient_maps(relations: FpMatrix) -> QuotientMaps:
    """Canonical projection/section for F^D modulo the column span of
    `relations`.

    The quotient coordinates are the non-pivot (free) coordinates of the
    echelonized relation space, so two equal subspaces give literally equal
    quotients.
    """
    field = relations.field
    d = relations.rows
    r = rref(relations.transpose())
    s = r.reduced.arr[: r.rank]            # echelonized relation basis, rows
    pivots = r.pivot_cols
    free = [c for c in range(d) if c not in pivots]
    q = len(free)
    proj = np.zeros((q, d), dtype=np.int64)
    for k, f in enumerate(free):
        proj[k, f] = 1
        for i, pc in enumerate(pivots):
            proj[k, pc] = (-s[i, f]) % field.p
    incl = np.zeros((d, q), dtype=np.int64)
    for k, f in enumerate(free):
        incl[f, k] = 1
    return QuotientMaps(FpMatrix(proj, field), FpMatrix(incl, field))
