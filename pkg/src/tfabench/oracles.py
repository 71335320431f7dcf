"""Independent brute-force oracles used to cross-check the main implementations.

Everything here prefers transparent exhaustion over cleverness; these
functions are the reference side of the dual-route checks and must stay
independent of the code paths they certify.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence


def brute_member(
    basis: Sequence[Sequence[int]], v: Sequence[int], coeff_bound: int
) -> bool:
    """Is v an integer combination of the basis rows with coefficients in the box?"""
    if not basis:
        return not any(v)
    n = len(v)
    for coeffs in itertools.product(range(-coeff_bound, coeff_bound + 1), repeat=len(basis)):
        acc = [0] * n
        for c, row in zip(coeffs, basis):
            if c:
                for i in range(n):
                    acc[i] += c * row[i]
        if list(v) == acc:
            return True
    return False


def row_reduce_span(generators: Sequence[Sequence[int]], rank: int) -> list[list[int]]:
    """Integer row reduction by repeated smallest-pivot subtraction.

    A deliberately different elimination path from the HNF routine: pick the
    row with the smallest nonzero entry in the current column and subtract
    multiples until only one row is nonzero there.
    """
    rows = [list(g) for g in generators if any(g)]
    result: list[list[int]] = []
    col = 0
    while col < rank and rows:
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            base = active[0]
            new_active = [base]
            for r in active[1:]:
                q = r[col] // base[col]
                r2 = [x - q * y for x, y in zip(r, base)]
                if r2[col]:
                    new_active.append(r2)
                elif any(r2):
                    rest.append(r2)
            if len(new_active) == len(active) and all(
                r[col] % new_active[0][col] == 0 for r in new_active[1:]
            ):
                # all reduced to multiples; one more pass clears them
                pass
            active = new_active
        if active:
            pivot = active[0]
            if pivot[col] < 0:
                pivot = [-x for x in pivot]
            result.append(pivot)
        rows = rest
        col += 1
    return result


def span_membership_table(
    basis: Sequence[Sequence[int]], rank: int, box: int, coeff_bound: int
) -> dict[tuple[int, ...], bool]:
    """Membership verdict for every vector with entries in [-box, box]."""
    table = {}
    for v in itertools.product(range(-box, box + 1), repeat=rank):
        table[v] = brute_member(basis, v, coeff_bound)
    return table


# -- trees --------------------------------------------------------------------


def all_maps_tree_embedding(
    t_parent: Sequence[int],
    t_color: Sequence[int],
    s_parent: Sequence[int],
    s_color: Sequence[int],
) -> tuple[int, ...] | None:
    """Naive exhaustive embedding search over node maps.

    Enumerates assignments node by node (any image node), rejecting as soon
    as the root, color, or order-iff condition fails on the assigned prefix.
    """
    nt, ns = len(t_parent), len(s_parent)

    def s_le(a: int, b: int) -> bool:
        while True:
            if a == b:
                return True
            if b == 0:
                return False
            b = s_parent[b]

    def t_le(a: int, b: int) -> bool:
        while True:
            if a == b:
                return True
            if b == 0:
                return False
            b = t_parent[b]

    assignment: list[int] = []

    def rec(i: int) -> tuple[int, ...] | None:
        if i == nt:
            return tuple(assignment)
        for img in range(ns):
            if i == 0 and img != 0:
                continue
            if t_color[i] != s_color[img]:
                continue
            ok = True
            for j in range(i):
                if t_le(j, i) != s_le(assignment[j], img) or t_le(i, j) != s_le(
                    img, assignment[j]
                ):
                    ok = False
                    break
            if not ok:
                continue
            assignment.append(img)
            res = rec(i + 1)
            if res is not None:
                return res
            assignment.pop()
        return None

    return rec(0)


# -- games --------------------------------------------------------------------


def naive_sim_alpha(
    universe_a: Sequence,
    universe_b: Sequence,
    sim0: Callable[[tuple, tuple], bool],
    a_tuple: tuple,
    b_tuple: tuple,
    alpha: int,
) -> bool:
    """Plain recursive back-and-forth with no memoization beyond sim0 itself."""
    if alpha == 0:
        return sim0(a_tuple, b_tuple)
    for a in universe_a:
        if not any(
            naive_sim_alpha(universe_a, universe_b, sim0, a_tuple + (a,), b_tuple + (b,), alpha - 1)
            for b in universe_b
        ):
            return False
    for b in universe_b:
        if not any(
            naive_sim_alpha(universe_a, universe_b, sim0, a_tuple + (a,), b_tuple + (b,), alpha - 1)
            for a in universe_a
        ):
            return False
    return True
