"""Exact integer linear algebra over Python ints.

Smith and Hermite normal forms, row lattices in Z^d, and orders of elements
and subgroups in the quotient groups they define.  All arithmetic is exact;
matrix sizes in this package are tiny (ambient dimension at most 8), so the
algorithms are the classical elimination ones with a minimal-pivot rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

INFINITE = math.inf


class NotASublattice(ValueError):
    """A basis row of the claimed sublattice is not in the superlattice."""


class RelationOutsideAmbient(ValueError):
    """A relation vector is not an integer combination of the ambient basis."""


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"matrix entries must be int, got {type(e).__name__}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, size: int) -> IntegerMatrix:
        return cls.from_rows(
            [[int(i == j) for j in range(size)] for i in range(size)], cols=size
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        b = other.to_rows()
        out = []
        for i in range(self.rows):
            a = self.row(i)
            out.append([sum(a[t] * b[t][j] for t in range(self.cols)) for j in range(other.cols)])
        return IntegerMatrix.from_rows(out, cols=other.cols)

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        return all(
            self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss_det(self.to_rows())

    def __repr__(self):
        return f"IntegerMatrix({self.to_rows()!r})"


def _as_matrix(m: IntegerMatrix | Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
    if isinstance(m, IntegerMatrix):
        return m
    return IntegerMatrix.from_rows(m, cols=cols)


def _bareiss_det(a: list[list[int]]) -> int:
    """Fraction-free determinant."""
    n = len(a)
    if n == 0:
        return 1
    a = [r[:] for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SnfDecomposition:
    """``left @ M @ right == diag`` with unimodular ``left`` and ``right``."""

    left: IntegerMatrix
    diag: IntegerMatrix
    right: IntegerMatrix
    rank: int

    @property
    def invariant_factors(self) -> list[int]:
        return self.diag.diagonal()[:self.rank]


def snf(m: IntegerMatrix | Sequence[Sequence[int]]) -> SnfDecomposition:
    """Smith normal form with transformation matrices.

    Works on any shape, including empty and zero matrices.
    """
    m = _as_matrix(m)
    nr, nc = m.rows, m.cols
    a = m.to_rows()
    u = IntegerMatrix.identity(nr).to_rows()
    v = IntegerMatrix.identity(nc).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        ad, as_ = a[dst], a[src]
        for j in range(nc):
            ad[j] += q * as_[j]
        ud, us = u[dst], u[src]
        for j in range(nr):
            ud[j] += q * us[j]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    rank = 0
    for t in range(min(nr, nc)):
        while True:
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)

            dirty = False
            p = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // p
                    add_row(i, t, -q)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // p
                    add_col(j, t, -q)
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue

            # row t and column t are clear; enforce divisibility of the rest
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)

        if best is None:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        rank += 1

    return SnfDecomposition(
        left=IntegerMatrix.from_rows(u, cols=nr),
        diag=IntegerMatrix.from_rows(a, cols=nc),
        right=IntegerMatrix.from_rows(v, cols=nc),
        rank=rank,
    )


# ---------------------------------------------------------------------------
# Lattices


@dataclass(frozen=True)
class Lattice:
    """Row lattice in Z^d, stored by its canonical Hermite basis.

    Prefer :func:`hnf_rows` to build one; the constructor trusts its input.
    """

    ambient_dim: int
    basis: IntegerMatrix
    pivots: tuple[int, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.basis.rows

    def rows(self) -> list[tuple[int, ...]]:
        return [self.basis.row(i) for i in range(self.rank)]

    def __contains__(self, v) -> bool:
        return lattice_contains(self, v)


def _hermite(rows: list[list[int]], d: int) -> tuple[list[list[int]], list[int]]:
    rows = [r[:] for r in rows if any(r)]
    out: list[list[int]] = []
    pivots: list[int] = []
    for c in range(d):
        if not rows:
            break
        active = [r for r in rows if r[c]]
        if not active:
            continue
        rest = [r for r in rows if not r[c]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[c]))
            p = active[0]
            nxt = [p]
            for r in active[1:]:
                q = r[c] // p[c]
                r = [x - q * y for x, y in zip(r, p)]
                if r[c]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
        p = active[0]
        if p[c] < 0:
            p = [-x for x in p]
        for k, prev in enumerate(out):
            q = prev[c] // p[c]
            if q:
                out[k] = [x - q * y for x, y in zip(prev, p)]
        out.append(p)
        pivots.append(c)
        rows = rest
    return out, pivots


def hnf_rows(generators: IntegerMatrix | Sequence[Sequence[int]], ambient_dim: int | None = None) -> Lattice:
    """Canonical lattice spanned by the rows of ``generators``.

    Row Hermite form: positive pivots, entries above each pivot reduced into
    ``[0, pivot)``, zero rows dropped.  Equal subgroups give equal bases.
    """
    g = _as_matrix(generators, cols=ambient_dim)
    d = g.cols
    basis, pivots = _hermite(g.to_rows(), d)
    return Lattice(d, IntegerMatrix.from_rows(basis, cols=d), tuple(pivots))


def standard_lattice(d: int) -> Lattice:
    return hnf_rows(IntegerMatrix.identity(d))


def _check_length(lat: Lattice, v: Sequence[int]) -> list[int]:
    v = [int(x) for x in v]
    if len(v) != lat.ambient_dim:
        raise ValueError(f"vector of length {len(v)} in ambient dimension {lat.ambient_dim}")
    return v


def integer_coordinates(lat: Lattice, v: Sequence[int]) -> list[int] | None:
    """Coefficients of ``v`` on the Hermite basis, or None if ``v`` is not in the lattice."""
    w = _check_length(lat, v)
    coeffs = []
    for i, c in enumerate(lat.pivots):
        row = lat.basis.row(i)
        if any(w[j] for j in range(c)):
            return None
        q, r = divmod(w[c], row[c])
        if r:
            return None
        if q:
            w = [x - q * y for x, y in zip(w, row)]
        coeffs.append(q)
    return coeffs if not any(w) else None


def lattice_contains(lat: Lattice, v: Sequence[int]) -> bool:
    return integer_coordinates(lat, v) is not None


def rational_coordinates(lat: Lattice, v: Sequence[int]) -> list[Fraction] | None:
    """Coefficients of ``v`` over Q on the Hermite basis; None outside the rational span."""
    w = [Fraction(x) for x in _check_length(lat, v)]
    coeffs = []
    for i, c in enumerate(lat.pivots):
        row = lat.basis.row(i)
        q = w[c] / row[c]
        if q:
            w = [x - q * y for x, y in zip(w, row)]
        coeffs.append(q)
    return coeffs if not any(w) else None


def minimal_multiplier(lat: Lattice, v: Sequence[int]) -> int | None:
    """Smallest m >= 1 with m*v in the lattice, or None if no multiple ever lands there."""
    coeffs = rational_coordinates(lat, v)
    if coeffs is None:
        return None
    return math.lcm(1, *(c.denominator for c in coeffs))


def lattice_index(sub: Lattice, sup: Lattice) -> int | float:
    """Index [sup : sub]; ``INFINITE`` when sub has smaller rank.

    Raises NotASublattice if sub is not contained in sup.
    """
    if sub.ambient_dim != sup.ambient_dim:
        raise ValueError("lattices live in different ambient dimensions")
    transition = []
    for row in sub.rows():
        coords = integer_coordinates(sup, row)
        if coords is None:
            raise NotASublattice(f"{list(row)} is not in the superlattice")
        transition.append(coords)
    if sub.rank < sup.rank:
        return INFINITE
    return abs(_bareiss_det(transition))


# ---------------------------------------------------------------------------
# Quotient groups


@dataclass(frozen=True)
class QuotientReport:
    """Structure of (ambient subgroup) / (relations).

    ``relations_in_basis`` are the relation rows re-expressed on the ambient
    basis and ``snf`` is their Smith decomposition, kept as witnesses.
    """

    free_rank: int
    invariant_factors: tuple[int, ...]
    relations_in_basis: IntegerMatrix
    snf: SnfDecomposition

    @property
    def order(self) -> int | float:
        return INFINITE if self.free_rank else math.prod(self.invariant_factors)


def _solve_in_basis(basis: list[tuple[int, ...]], v: Sequence[int]) -> list[Fraction] | None:
    """Solve c @ basis == v over Q for linearly independent basis rows."""
    r, d = len(basis), len(v)
    # augmented system: columns of basis are equations
    a = [[Fraction(basis[i][j]) for i in range(r)] + [Fraction(v[j])] for j in range(d)]
    piv_cols = []
    row = 0
    for col in range(r):
        p = next((i for i in range(row, d) if a[i][col]), None)
        if p is None:
            continue
        a[row], a[p] = a[p], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for i in range(d):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        piv_cols.append(col)
        row += 1
    if any(a[i][r] for i in range(row, d)):
        return None
    coeffs = [Fraction(0)] * r
    for i, col in enumerate(piv_cols):
        coeffs[col] = a[i][r]
    return coeffs


def quotient_invariants(relations: IntegerMatrix | Sequence[Sequence[int]],
                        ambient_basis: IntegerMatrix | Sequence[Sequence[int]] | None = None,
                        *, ambient_dim: int | None = None) -> QuotientReport:
    """Free rank and invariant factors of span(ambient_basis) / span(relations).

    Relations are given in standard coordinates.  ``ambient_basis=None`` means
    the standard basis of Z^d.  Each relation is re-expressed on the ambient
    basis by an exact rational solve; a non-integral solution raises
    RelationOutsideAmbient.
    """
    if ambient_basis is not None:
        amb = _as_matrix(ambient_basis, cols=ambient_dim)
        d = amb.cols
    else:
        if isinstance(relations, IntegerMatrix):
            d = relations.cols
        elif ambient_dim is not None:
            d = ambient_dim
        else:
            d = len(relations[0])
        amb = IntegerMatrix.identity(d)
    rel = _as_matrix(relations, cols=d)
    if rel.cols != d:
        raise ValueError("relations and ambient basis have different widths")

    basis = [amb.row(i) for i in range(amb.rows)]
    herm = hnf_rows(amb)
    if herm.rank < len(basis):
        # dependent ambient generators: use the canonical basis instead
        basis = herm.rows()

    coords = []
    for i in range(rel.rows):
        c = _solve_in_basis(basis, rel.row(i))
        if c is None or any(x.denominator != 1 for x in c):
            raise RelationOutsideAmbient(f"{list(rel.row(i))} is not in the ambient subgroup")
        coords.append([int(x) for x in c])
    r = len(basis)
    in_basis = IntegerMatrix.from_rows(coords, cols=r)
    dec = snf(in_basis)
    factors = tuple(x for x in dec.invariant_factors if x != 1)
    return QuotientReport(
        free_rank=r - dec.rank,
        invariant_factors=factors,
        relations_in_basis=in_basis,
        snf=dec,
    )


def subgroup_order_in_quotient(relations: Lattice,
                               generators: IntegerMatrix | Sequence[Sequence[int]]) -> int | float:
    """Order of the image of ``generators`` in Z^d / relations.

    Computed as the index of the relation lattice in relations + <generators>.
    """
    g = _as_matrix(generators, cols=relations.ambient_dim)
    combined = hnf_rows(relations.rows() + [g.row(i) for i in range(g.rows)],
                        ambient_dim=relations.ambient_dim)
    return lattice_index(relations, combined)
