"""Exact linear algebra helpers: echelon row spaces over fields and over Z/n.

Field row spaces keep reduced echelon bases (pivot entry 1, pivot columns
cleared). Over Z/n, a span is tracked as the integer lattice generated by
the rows together with n times each unit vector; membership in the Z/n-span
is then membership in that lattice, decided by an integer echelon form with
gcd pivots. This stays exact in the presence of zero divisors.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .rings import Ring, RingError

Vector = tuple


class LinAlgError(ValueError):
    pass


class FieldRowSpace:
    """Incrementally maintained reduced echelon basis over a field (or over Z/n
    while all pivots happen to be units; a non-unit pivot raises)."""

    def __init__(self, ring: Ring, ncols: int):
        self.ring = ring
        self.ncols = ncols
        self.rows: list[tuple] = []  # reduced echelon order
        self.pivots: list[int] = []

    def _reduce(self, vec: Sequence) -> list:
        R = self.ring
        v = [R.canon(x) for x in vec]
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if not R.is_zero(c):
                v = [R.sub(a, R.mul(c, b)) for a, b in zip(v, row)]
        return v

    def contains(self, vec: Sequence) -> bool:
        return all(self.ring.is_zero(x) for x in self._reduce(vec))

    def add(self, vec: Sequence) -> bool:
        """Insert a vector; returns True when the span grew."""
        R = self.ring
        v = self._reduce(vec)
        piv = next((i for i, x in enumerate(v) if not R.is_zero(x)), None)
        if piv is None:
            return False
        if not R.is_unit(v[piv]):
            raise LinAlgError(
                f"pivot {v[piv]} is not a unit in {R}; module is not free here"
            )
        inv = R.inv(v[piv])
        v = tuple(R.mul(inv, x) for x in v)
        # clear the new pivot column in the existing rows
        self.rows = [
            tuple(R.sub(a, R.mul(row[piv], b)) for a, b in zip(row, v))
            for row in self.rows
        ]
        idx = next((k for k, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(idx, v)
        self.pivots.insert(idx, piv)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis(self) -> list[tuple]:
        return list(self.rows)

    def coords(self, vec: Sequence) -> list | None:
        """Coordinates of vec in the echelon basis, or None when outside the span."""
        R = self.ring
        v = [R.canon(x) for x in vec]
        out = []
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            out.append(c)
            if not R.is_zero(c):
                v = [R.sub(a, R.mul(c, b)) for a, b in zip(v, row)]
        if any(not R.is_zero(x) for x in v):
            return None
        return out


class ZnRowSpace:
    """Span of rows over Z/n, as the integer lattice rows*Z + n*Z^k in echelon form."""

    def __init__(self, ring: Ring, ncols: int):
        if ring.kind != "Zn":
            raise LinAlgError("ZnRowSpace is for Z/n rings")
        self.ring = ring
        self.n = ring.modulus
        self.ncols = ncols
        # echelon[i] is a row with pivot at column i; pivots stay positive
        # divisors of n, so every column always has a row
        self.echelon: dict[int, list[int]] = {
            i: [0] * i + [self.n] + [0] * (ncols - i - 1) for i in range(ncols)
        }

    def _insert(self, v: list[int]) -> None:
        for i in range(self.ncols):
            if v[i] == 0:
                continue
            row = self.echelon[i]
            a, b = row[i], v[i]
            g = gcd(a, b)
            # extended gcd combination replaces the stored row; v keeps reducing
            x0, y0 = _ext_gcd(a, b)
            new_row = [x0 * r + y0 * w for r, w in zip(row, v)]
            v = [(b // g) * r - (a // g) * w for r, w in zip(row, v)]
            # tail entries may be reduced mod n: the lattice contains n*e_j
            self.echelon[i] = [
                x % self.n if j > i else x for j, x in enumerate(new_row)
            ]

    def add(self, vec: Sequence) -> bool:
        v = [int(x) % self.n for x in vec]
        if self.contains(v):
            return False
        self._insert(v)
        return True

    def contains(self, vec: Sequence) -> bool:
        v = [int(x) % self.n for x in vec]
        for i in range(self.ncols):
            if v[i] == 0:
                continue
            if i not in self.echelon:
                return False
            p = self.echelon[i][i]
            if v[i] % p != 0:
                return False
            q = v[i] // p
            v = [a - q * b for a, b in zip(v, self.echelon[i])]
        return all(x % self.n == 0 for x in v)


def _ext_gcd(a: int, b: int) -> tuple[int, int]:
    """(x, y) with x*a + y*b == gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_x, old_y


def row_space(ring: Ring, ncols: int):
    """A membership-queryable span over the given ring."""
    if ring.is_field:
        return FieldRowSpace(ring, ncols)
    return ZnRowSpace(ring, ncols)


# ---- dense matrix helpers (tuples of tuples, row major) ----


def mat_canon(ring: Ring, rows: Sequence[Sequence]) -> tuple:
    return tuple(tuple(ring.canon(x) for x in row) for row in rows)


def zero_matrix(ring: Ring, nrows: int, ncols: int) -> tuple:
    z = ring.zero()
    return tuple(tuple(z for _ in range(ncols)) for _ in range(nrows))


def identity_matrix(ring: Ring, n: int) -> tuple:
    z, o = ring.zero(), ring.one()
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def mat_mul(ring: Ring, a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    if a and b and len(a[0]) != len(b):
        raise LinAlgError("shape mismatch in matrix product")
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ring.zero()] * ncols
        for k, c in enumerate(row):
            if ring.is_zero(c):
                continue
            brow = b[k]
            acc = [ring.add(x, ring.mul(c, y)) for x, y in zip(acc, brow)]
        out.append(tuple(acc))
    return tuple(out)


def mat_add(ring: Ring, a, b) -> tuple:
    return tuple(
        tuple(ring.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_scale(ring: Ring, c, a) -> tuple:
    return tuple(tuple(ring.mul(c, x) for x in row) for row in a)


def mat_vec(ring: Ring, a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(
        _dot(ring, row, v) for row in a
    )


def _dot(ring: Ring, u: Sequence, v: Sequence):
    acc = ring.zero()
    for x, y in zip(u, v):
        acc = ring.add(acc, ring.mul(x, y))
    return acc


def nullspace(ring: Ring, rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of {v : rows @ v == 0} over a field."""
    if not ring.is_field:
        raise LinAlgError("nullspace computation requires a field")
    space = FieldRowSpace(ring, ncols)
    for row in rows:
        space.add(row)
    pivots = set(space.pivots)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [ring.zero()] * ncols
        v[f] = ring.one()
        for row, piv in zip(space.rows, space.pivots):
            v[piv] = ring.neg(row[f])
        basis.append(tuple(v))
    return basis
