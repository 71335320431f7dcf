"""Exact integer-lattice arithmetic: HNF, membership, saturation, SNF.

All lattices are sublattices of Z^n stored by a canonical Hermite normal
form basis (row style): pivot columns strictly increase, pivots are
positive, and entries above a pivot lie in [0, pivot).  Equal lattices
therefore have identical field values.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0 for a,b not both 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _echelon(rows: Iterable[Sequence[int]], rank: int) -> dict[int, list[int]]:
    """Integer row echelon: returns map pivot-column -> row."""
    pivots: dict[int, list[int]] = {}
    for row in rows:
        v = list(row)
        if len(v) != rank:
            raise ValueError(f"vector length {len(v)} != ambient rank {rank}")
        for j in range(rank):
            if v[j] == 0:
                continue
            if j not in pivots:
                pivots[j] = v
                break
            u = pivots[j]
            a, b = u[j], v[j]
            if b % a == 0:
                q = b // a
                v = [t - q * s for s, t in zip(u, v)]
            else:
                x, y, g = xgcd(a, b)
                pivots[j] = [x * s + y * t for s, t in zip(u, v)]
                v = [(-(b // g)) * s + (a // g) * t for s, t in zip(u, v)]
    return pivots


def _normalize(pivots: dict[int, list[int]], rank: int) -> Matrix:
    order = sorted(pivots)
    rows = [pivots[j] for j in order]
    for i, j in enumerate(order):
        if rows[i][j] < 0:
            rows[i] = [-x for x in rows[i]]
    # reduce entries above each pivot into [0, pivot)
    for i, j in enumerate(order):
        p = rows[i][j]
        for k in range(i):
            q = rows[k][j] // p
            if q:
                rows[k] = [x - q * y for x, y in zip(rows[k], rows[i])]
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^ambient_rank with canonical HNF basis rows."""

    ambient_rank: int
    basis: Matrix

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def pivots(self) -> tuple[int, ...]:
        out = []
        for row in self.basis:
            j = 0
            while row[j] == 0:
                j += 1
            out.append(j)
        return tuple(out)


def hnf(generators: Iterable[Sequence[int]], ambient_rank: int) -> Lattice:
    """Canonical Hermite normal form of the row span; idempotent."""
    piv = _echelon(generators, ambient_rank)
    return Lattice(ambient_rank, _normalize(piv, ambient_rank))


def full_lattice(rank: int) -> Lattice:
    ident = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    return Lattice(rank, ident)


def zero_lattice(rank: int) -> Lattice:
    return Lattice(rank, ())


def member(lat: Lattice, v: Sequence[int]) -> bool:
    """Back-substitution against the HNF basis."""
    if len(v) != lat.ambient_rank:
        raise ValueError(f"vector length {len(v)} != ambient rank {lat.ambient_rank}")
    w = list(v)
    for row in lat.basis:
        j = 0
        while row[j] == 0:
            j += 1
        if w[j] % row[j] != 0:
            return False
        q = w[j] // row[j]
        if q:
            w = [x - q * y for x, y in zip(w, row)]
    return not any(w)


def lattice_eq(a: Lattice, b: Lattice) -> bool:
    return a == b


def lattice_sum(a: Lattice, b: Lattice) -> Lattice:
    if a.ambient_rank != b.ambient_rank:
        raise ValueError("ambient rank mismatch")
    return hnf(list(a.basis) + list(b.basis), a.ambient_rank)


def kernel_rows(rows: Sequence[Sequence[int]], width: int) -> Lattice:
    """Left-kernel: lattice of z with sum_i z[i]*rows[i] == 0, as sublattice of Z^len(rows)."""
    n = len(rows)
    aug = [list(rows[i]) + [1 if k == i else 0 for k in range(n)] for i in range(n)]
    piv = _echelon(aug, width + n)
    rel = []
    for j, row in sorted(piv.items()):
        if j >= width:
            rel.append(row[width:])
    return hnf(rel, n)


def kernel(mat: Sequence[Sequence[int]], width: int) -> Lattice:
    """Right-kernel {v in Z^width : mat @ v == 0} (mat given as rows)."""
    if not mat:
        return full_lattice(width)
    cols = [[row[i] for row in mat] for i in range(width)]
    return kernel_rows(cols, len(mat))


def purify(lat: Lattice) -> Lattice:
    """Saturation {v : n*v in lat for some n >= 1}; pure, same rank, idempotent."""
    if lat.is_zero():
        return lat
    rels = kernel(lat.basis, lat.ambient_rank)
    if rels.is_zero():
        return full_lattice(lat.ambient_rank)
    return kernel(rels.basis, lat.ambient_rank)


def is_pure(lat: Lattice) -> bool:
    return lat == purify(lat)


def intersect(a: Lattice, b: Lattice) -> Lattice:
    if a.ambient_rank != b.ambient_rank:
        raise ValueError("ambient rank mismatch")
    if a.is_zero() or b.is_zero():
        return zero_lattice(a.ambient_rank)
    stacked = list(a.basis) + list(b.basis)
    rels = kernel_rows(stacked, a.ambient_rank)
    vecs = []
    for z in rels.basis:
        v = [0] * a.ambient_rank
        for i, zi in enumerate(z[: a.rank]):
            if zi:
                v = [x + zi * y for x, y in zip(v, a.basis[i])]
        vecs.append(v)
    return hnf(vecs, a.ambient_rank)


def scale(lat: Lattice, n: int) -> Lattice:
    return hnf([[n * x for x in row] for row in lat.basis], lat.ambient_rank)


def p_purify(lat: Lattice, p: int) -> Lattice:
    """Close under division by p within Z^n only; contained in purify(lat)."""
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    cur = lat
    while True:
        # (1/p) * (cur intersect p*Z^n)
        meet = intersect(cur, scale(full_lattice(lat.ambient_rank), p))
        nxt = hnf([[x // p for x in row] for row in meet.basis], lat.ambient_rank)
        if nxt == cur:
            return cur
        cur = nxt


def is_p_pure(lat: Lattice, p: int) -> bool:
    return lat == p_purify(lat, p)


def apply_matrix(mat: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    """mat @ v with mat given as rows (result length == number of rows)."""
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in mat)


def matrix_image(mat: Sequence[Sequence[int]], dom: Lattice) -> Lattice:
    """Image lattice of dom under the matrix (rows x ambient)."""
    height = len(mat)
    return hnf([apply_matrix(mat, row) for row in dom.basis], height)


def matrix_rank(mat: Sequence[Sequence[int]]) -> int:
    if not mat:
        return 0
    return hnf(mat, len(mat[0])).rank


def smith_normal_form(mat: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Diagonal of the Smith normal form: positive, each dividing the next."""
    a = [list(r) for r in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[int] = []
    top = 0
    while True:
        pr = pc = -1
        for i in range(top, m):
            for j in range(top, n):
                if a[i][j]:
                    pr, pc = i, j
                    break
            if pr >= 0:
                break
        if pr < 0:
            break
        a[top], a[pr] = a[pr], a[top]
        for row in a:
            row[top], row[pc] = row[pc], row[top]
        while True:
            # clear column `top` with row ops, then row `top` with column ops
            for i in range(top + 1, m):
                if a[i][top]:
                    x, y, g = xgcd(a[top][top], a[i][top])
                    p, q = a[top][top] // g, a[i][top] // g
                    for j in range(top, n):
                        s, t = a[top][j], a[i][j]
                        a[top][j] = x * s + y * t
                        a[i][j] = -q * s + p * t
            for j in range(top + 1, n):
                if a[top][j]:
                    x, y, g = xgcd(a[top][top], a[top][j])
                    p, q = a[top][top] // g, a[top][j] // g
                    for i in range(top, m):
                        s, t = a[i][top], a[i][j]
                        a[i][top] = x * s + y * t
                        a[i][j] = -q * s + p * t
            if all(a[i][top] == 0 for i in range(top + 1, m)) and all(
                a[top][j] == 0 for j in range(top + 1, n)
            ):
                break
        piv = a[top][top]
        bad = None
        for i in range(top + 1, m):
            for j in range(top + 1, n):
                if a[i][j] % piv:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(top, n):
                a[top][j] += a[bad][j]
            continue
        diag.append(abs(piv))
        top += 1
        if top == m or top == n:
            break
    return tuple(diag)


def quotient_invariant_factors(sub: Lattice) -> tuple[int, ...]:
    """Invariant factors (> 1) of Z^n / sub; requires sub of full rank."""
    if sub.rank != sub.ambient_rank:
        raise ValueError("quotient is infinite: sublattice not of full rank")
    return tuple(d for d in smith_normal_form(sub.basis) if d > 1)


def primitive(v: Sequence[int]) -> Vector:
    """Canonical primitive representative of the line through v (v != 0)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no line")
    w = [x // g for x in v]
    for x in w:
        if x:
            if x < 0:
                w = [-y for y in w]
            break
    return tuple(w)


def line(v: Sequence[int], rank: int) -> Lattice:
    """The pure rank-1 sublattice through v."""
    return hnf([primitive(v)], rank)
