"""Frame structures: free abelian ambient group, tagged subgroups, partial endomorphisms.

A frame is the desk-scale model of a free abelian group with finitely many
indexed subgroups and indexed (partial) endomorphisms.  Subgroup entries are
either explicit lattices or intensional cofamilies ("every singly generated
pure subgroup of the ambient group except the lines through the listed
exceptions").
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .lattices import (
    Lattice,
    Matrix,
    Vector,
    apply_matrix,
    full_lattice,
    hnf,
    is_pure,
    kernel_rows,
    line,
    matrix_rank,
    member,
    primitive,
    purify,
)


@dataclass(frozen=True)
class Explicit:
    lattice: Lattice


@dataclass(frozen=True)
class Cofamily:
    """All pure lines of the ambient group except those through `exceptions`."""

    exceptions: tuple[Vector, ...]  # primitive, canonical sign, sorted


SubgroupSpec = Explicit | Cofamily


@dataclass(frozen=True)
class FrameFunction:
    domain: str | None  # None: whole group; otherwise a subgroup index
    matrix: Matrix  # rank x rank, acting on column vectors


@dataclass(frozen=True)
class FrameStructure:
    rank: int
    subgroups: tuple[tuple[str, SubgroupSpec], ...]
    functions: tuple[tuple[str, FrameFunction], ...]
    pure_indices: tuple[str, ...]

    def subgroup_map(self) -> dict[str, SubgroupSpec]:
        return dict(self.subgroups)

    def function_map(self) -> dict[str, FrameFunction]:
        return dict(self.functions)

    def subgroup(self, index: str) -> SubgroupSpec:
        return self.subgroup_map()[index]

    def ambient(self) -> Lattice:
        return full_lattice(self.rank)


def make_frame(
    rank: int,
    subgroups: Mapping[str, SubgroupSpec] | None = None,
    functions: Mapping[str, FrameFunction] | None = None,
    pure: Iterable[str] | None = None,
) -> FrameStructure:
    subs = tuple(sorted((subgroups or {}).items()))
    fns = tuple(sorted((functions or {}).items()))
    return FrameStructure(rank, subs, fns, tuple(sorted(set(pure or ()))))


def canonical_exceptions(vectors: Iterable[Sequence[int]]) -> tuple[Vector, ...]:
    return tuple(sorted({primitive(v) for v in vectors}))


def validate_frame(frame: FrameStructure) -> list[str]:
    problems: list[str] = []
    subs = frame.subgroup_map()
    for idx, spec in subs.items():
        if isinstance(spec, Explicit):
            if spec.lattice.ambient_rank != frame.rank:
                problems.append(f"subgroup {idx}: ambient rank mismatch")
            elif idx in frame.pure_indices and not is_pure(spec.lattice):
                problems.append(f"subgroup {idx}: purity required but not pure")
        else:
            if spec.exceptions != canonical_exceptions(spec.exceptions):
                problems.append(f"subgroup {idx}: exceptions not canonical")
            for v in spec.exceptions:
                if len(v) != frame.rank:
                    problems.append(f"subgroup {idx}: exception rank mismatch")
    for idx, fn in frame.functions:
        if len(fn.matrix) != frame.rank or any(len(r) != frame.rank for r in fn.matrix):
            problems.append(f"function {idx}: matrix shape mismatch")
        if fn.domain is not None and fn.domain not in subs:
            problems.append(f"function {idx}: unknown domain {fn.domain}")
    return problems


def function_domain_lattice(frame: FrameStructure, fn: FrameFunction) -> Lattice:
    if fn.domain is None:
        return frame.ambient()
    spec = frame.subgroup(fn.domain)
    if isinstance(spec, Explicit):
        return spec.lattice
    raise ValueError("function domain is an intensional cofamily")


# -- embeddings ---------------------------------------------------------------


@dataclass(frozen=True)
class FrameEmbedding:
    source: FrameStructure
    target: FrameStructure
    matrix: Matrix  # target.rank x source.rank
    bound_used: int


def _columns(mat: Matrix, width: int) -> list[list[int]]:
    return [[row[j] for row in mat] for j in range(width)]


def _lines_into_target_line(mat: Matrix, src_rank: int, exc: Vector) -> list[Vector] | None:
    """Primitive source lines v with mat@v in Q*exc.

    Returns the list of primitive generators if that set is finite (subspace
    dimension <= 1), otherwise None (meaning: infinitely many lines).
    """
    # Solve mat@v - t*exc = 0 for (v, t): left-kernel of the stacked rows
    # (columns of mat, then -exc), projected onto the v part.
    stacked = [[row[j] for row in mat] for j in range(src_rank)] + [[-x for x in exc]]
    ker = kernel_rows(stacked, len(mat))
    vs = [z[:src_rank] for z in ker.basis if any(z[:src_rank])]
    sol = hnf(vs, src_rank)
    if sol.rank == 0:
        return []
    if sol.rank == 1:
        return [primitive(sol.basis[0])]
    return None


def verify_frame_embedding(emb: FrameEmbedding) -> list[str]:
    problems: list[str] = []
    src, tgt, mat = emb.source, emb.target, emb.matrix
    if len(mat) != tgt.rank or any(len(r) != src.rank for r in mat):
        return ["matrix shape mismatch"]
    if src.rank and matrix_rank(_columns(mat, src.rank)) != src.rank:
        problems.append("matrix not injective")
    tgt_subs = tgt.subgroup_map()
    for idx, spec in src.subgroups:
        if idx not in tgt_subs:
            problems.append(f"target lacks subgroup index {idx}")
            continue
        tspec = tgt_subs[idx]
        if isinstance(spec, Explicit):
            if not isinstance(tspec, Explicit):
                problems.append(f"subgroup {idx}: explicit/cofamily mismatch")
                continue
            for row in spec.lattice.basis:
                if not member(tspec.lattice, apply_matrix(mat, row)):
                    problems.append(f"subgroup {idx}: image of {row} escapes target")
                    break
        else:
            if not isinstance(tspec, Cofamily):
                problems.append(f"subgroup {idx}: explicit/cofamily mismatch")
                continue
            src_exc = set(spec.exceptions)
            for exc in tspec.exceptions:
                hits = _lines_into_target_line(mat, src.rank, exc)
                if hits is None:
                    problems.append(f"subgroup {idx}: a 2-dim family maps into exception line {exc}")
                    continue
                for v in hits:
                    if v not in src_exc:
                        problems.append(
                            f"subgroup {idx}: family line {v} maps into exception line {exc}"
                        )
    tgt_fns = tgt.function_map()
    for idx, fn in src.functions:
        if idx not in tgt_fns:
            problems.append(f"target lacks function index {idx}")
            continue
        tfn = tgt_fns[idx]
        try:
            dom = function_domain_lattice(src, fn)
        except ValueError:
            problems.append(f"function {idx}: cofamily domain unsupported")
            continue
        for row in dom.basis:
            lhs = apply_matrix(mat, apply_matrix(fn.matrix, row))
            rhs = apply_matrix(tfn.matrix, apply_matrix(mat, row))
            if lhs != rhs:
                problems.append(f"function {idx}: does not commute on {row}")
                break
    return problems


@dataclass(frozen=True)
class NotUpToBound:
    """Explicitly not a proof of non-embeddability."""

    bound: int


def _function_constraint_lattice(
    src: FrameStructure, tgt: FrameStructure, bound: int
) -> Lattice | None:
    """Integer lattice of matrices (flattened) satisfying all function equations.

    Returns None when a function index cannot be matched.
    """
    dim = src.rank * tgt.rank
    rows = []  # linear forms (as coefficient rows) that must vanish
    tgt_fns = tgt.function_map()
    for idx, fn in src.functions:
        if idx not in tgt_fns:
            return None
        tfn = tgt_fns[idx]
        dom = function_domain_lattice(src, fn)
        for d in dom.basis:
            fd = apply_matrix(fn.matrix, d)
            # for each target coordinate i: sum_j M[i][j]*fd[j] - sum_k tfn[i][k] * (M@d)[k] == 0
            for i in range(tgt.rank):
                coeff = [0] * dim
                for j in range(src.rank):
                    coeff[i * src.rank + j] += fd[j]
                for k in range(tgt.rank):
                    c = tfn.matrix[i][k]
                    if c:
                        for j in range(src.rank):
                            coeff[k * src.rank + j] -= c * d[j]
                if any(coeff):
                    rows.append(coeff)
    if not rows:
        return full_lattice(dim)
    cols = [[r[i] for r in rows] for i in range(dim)]
    return kernel_rows(cols, len(rows))


def _enumerate_lattice_box(lat: Lattice, bound: int):
    """Yield all lattice points with every entry in [-bound, bound].

    DFS over HNF coefficients.  Because basis rows below row i vanish at
    pivot column i, the pivot entry is fixed once c_0..c_i are chosen, which
    bounds each coefficient to an exact interval.
    """
    basis = lat.basis
    if not basis:
        yield tuple([0] * lat.ambient_rank)
        return
    pivots = lat.pivots()
    k = len(basis)
    point = [0] * lat.ambient_rank

    def rec(i: int):
        if i == k:
            if all(-bound <= x <= bound for x in point):
                yield tuple(point)
            return
        p = pivots[i]
        piv = basis[i][p]
        base = point[p]
        # choose c with |base + c*piv| <= bound
        lo = -((bound + base) // piv)
        hi = (bound - base) // piv
        for c in range(lo, hi + 1):
            if c:
                for j in range(lat.ambient_rank):
                    point[j] += c * basis[i][j]
            yield from rec(i + 1)
            if c:
                for j in range(lat.ambient_rank):
                    point[j] -= c * basis[i][j]

    yield from rec(0)


def _box_vectors(rank: int, bound: int) -> list[Vector]:
    return [tuple(v) for v in itertools.product(range(-bound, bound + 1), repeat=rank)]


def _column_dfs_candidates(
    src: FrameStructure, tgt: FrameStructure, bound: int
):
    """Yield candidate matrices column by column with explicit-subgroup pruning."""
    tgt_subs = tgt.subgroup_map()
    # (trigger column, source row, target lattice) per explicit subgroup basis row
    checks: list[list[tuple[Vector, Lattice]]] = [[] for _ in range(src.rank)]
    for idx, spec in src.subgroups:
        if not isinstance(spec, Explicit):
            continue
        tspec = tgt_subs.get(idx)
        if not isinstance(tspec, Explicit):
            return
        for row in spec.lattice.basis:
            trigger = max(j for j in range(src.rank) if row[j])
            checks[trigger].append((row, tspec.lattice))
    box = _box_vectors(tgt.rank, bound)
    cols: list[Vector] = []

    def image(row: Vector) -> Vector:
        acc = [0] * tgt.rank
        for j, c in enumerate(row[: len(cols)]):
            if c:
                for i in range(tgt.rank):
                    acc[i] += c * cols[j][i]
        return tuple(acc)

    def rec(j: int):
        if j == src.rank:
            yield tuple(
                tuple(cols[k][i] for k in range(src.rank)) for i in range(tgt.rank)
            )
            return
        for cand in box:
            cols.append(cand)
            if all(member(lat, image(row)) for row, lat in checks[j]):
                yield from rec(j + 1)
            cols.pop()

    yield from rec(0)


def frame_embed_search(
    src: FrameStructure, tgt: FrameStructure, bound: int
) -> FrameEmbedding | NotUpToBound:
    """Exhaustive search for a frame embedding over matrices with entries in [-bound, bound].

    A returned embedding is verified; NotUpToBound is explicitly not a proof
    of non-embeddability.  With function symbols present the search space is
    first cut down to the integer solution lattice of the commutation
    equations; otherwise a column DFS with subgroup pruning is used.  Both
    are complete for the entry box.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if src.rank > tgt.rank:
        return NotUpToBound(bound)
    if src.rank == 0:
        emb = FrameEmbedding(src, tgt, tuple(() for _ in range(tgt.rank)), bound)
        if not verify_frame_embedding(emb):
            return emb
        return NotUpToBound(bound)
    for mat in _matrix_candidates(src, tgt, bound):
        emb = FrameEmbedding(src, tgt, mat, bound)
        if not verify_frame_embedding(emb):
            return emb
    return NotUpToBound(bound)


def _matrix_candidates(src: FrameStructure, tgt: FrameStructure, bound: int):
    if src.functions:
        sol = _function_constraint_lattice(src, tgt, bound)
        if sol is None:
            return
        for flat in _enumerate_lattice_box(sol, bound):
            if not any(flat):
                continue
            yield tuple(
                tuple(flat[i * src.rank : (i + 1) * src.rank]) for i in range(tgt.rank)
            )
    else:
        yield from _column_dfs_candidates(src, tgt, bound)


def frame_iso_search(
    a: FrameStructure, b: FrameStructure, bound: int
) -> FrameEmbedding | NotUpToBound:
    """Search for an invertible embedding whose inverse also embeds (isomorphism)."""
    if a.rank != b.rank:
        return NotUpToBound(bound)
    if a.rank == 0:
        return FrameEmbedding(a, b, (), bound)
    for mat in _matrix_candidates(a, b, bound):
        if _det_unimodular(mat):
            emb = FrameEmbedding(a, b, mat, bound)
            if not verify_frame_embedding(emb):
                inv = _integer_inverse(mat)
                if inv is not None:
                    back = FrameEmbedding(b, a, inv, bound)
                    if not verify_frame_embedding(back):
                        return emb
    return NotUpToBound(bound)


def _det(mat: Matrix) -> int:
    n = len(mat)
    if n == 0:
        return 1
    a = [list(r) for r in mat]
    # fraction-free Gaussian elimination (Bareiss)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def _det_unimodular(mat: Matrix) -> bool:
    return _det(mat) in (1, -1)


def _integer_inverse(mat: Matrix) -> Matrix | None:
    n = len(mat)
    d = _det(mat)
    if d not in (1, -1):
        return None
    # adjugate via cofactors (desk ranks only)
    def minor(i, j):
        sub = [
            [mat[r][c] for c in range(n) if c != j] for r in range(n) if r != i
        ]
        return _det(tuple(tuple(r) for r in sub))

    adj = [[((-1) ** (i + j)) * minor(j, i) for j in range(n)] for i in range(n)]
    return tuple(tuple(x // d for x in row) for row in adj)
