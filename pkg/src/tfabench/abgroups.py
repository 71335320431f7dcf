"""Finite abelian groups by invariant factors; finite rings and modules by tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

Element = tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbGroup:
    """Direct sum Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, each d_i >= 2.

    Elements are tuples reduced mod the factors; the empty chain is the
    trivial group (one element, the empty tuple... realized as all-zero tuple).
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = self.invariant_factors
        for d in fs:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(fs, fs[1:]):
            if b % a:
                raise ValueError("divisibility chain violated")

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def zero(self) -> Element:
        return tuple(0 for _ in self.invariant_factors)

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.invariant_factors))

    def neg(self, a: Element) -> Element:
        return tuple((-x) % d for x, d in zip(a, self.invariant_factors))

    def elements(self) -> Iterator[Element]:
        """Canonical enumeration: lexicographic tuples."""
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def is_subgroup(self, subset: frozenset[Element]) -> bool:
        if self.zero() not in subset:
            return False
        return all(self.add(a, b) in subset for a in subset for b in subset)


def all_groups_of_order_at_most(n: int) -> list[FiniteAbGroup]:
    """Every FiniteAbGroup with order <= n, via divisor-chain enumeration."""
    out = [FiniteAbGroup(())]

    def extend(chain: tuple[int, ...], prod: int):
        last = chain[-1]
        d = last
        while prod * d <= n:
            if d % last == 0:
                nxt = chain + (d,)
                out.append(FiniteAbGroup(nxt))
                extend(nxt, prod * d)
            d += 1

    for d in range(2, n + 1):
        out.append(FiniteAbGroup((d,)))
        extend((d,), d)
    # dedupe (extend may revisit) and sort canonically
    uniq = sorted({g.invariant_factors for g in out})
    return [FiniteAbGroup(f) for f in uniq]


# -- finite rings and modules given by tables --------------------------------


def _check_add_table(add: Sequence[Sequence[int]], what: str) -> None:
    n = len(add)
    for row in add:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise ValueError(f"{what}: malformed addition table")
    for a in range(n):
        for b in range(n):
            if add[a][b] != add[b][a]:
                raise ValueError(f"{what}: addition not commutative")
            for c in range(n):
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise ValueError(f"{what}: addition not associative")
    for a in range(n):
        if add[0][a] != a:
            raise ValueError(f"{what}: element 0 is not the additive identity")
        if not any(add[a][b] == 0 for b in range(n)):
            raise ValueError(f"{what}: missing additive inverse")


@dataclass(frozen=True)
class FiniteRing:
    """Ring on elements 0..n-1; index 0 is the additive identity."""

    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check_add_table(self.add, "ring")
        n = len(self.add)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                        raise ValueError("ring: multiplication not associative")
                    if self.mul[a][self.add[b][c]] != self.add[self.mul[a][b]][self.mul[a][c]]:
                        raise ValueError("ring: left distributivity fails")
                    if self.mul[self.add[a][b]][c] != self.add[self.mul[a][c]][self.mul[b][c]]:
                        raise ValueError("ring: right distributivity fails")

    @property
    def size(self) -> int:
        return len(self.add)


@dataclass(frozen=True)
class FiniteModule:
    """Left module over a FiniteRing, both given by tables."""

    ring: FiniteRing
    add: tuple[tuple[int, ...], ...]
    action: tuple[tuple[int, ...], ...]  # action[r][m]

    def __post_init__(self):
        _check_add_table(self.add, "module")
        n, m = self.ring.size, len(self.add)
        if len(self.action) != n or any(len(row) != m for row in self.action):
            raise ValueError("module: malformed action table")
        for r in range(n):
            for a in range(m):
                for b in range(m):
                    if self.action[r][self.add[a][b]] != self.add[self.action[r][a]][self.action[r][b]]:
                        raise ValueError("module: action not additive in the module argument")
        for r in range(n):
            for s in range(n):
                for a in range(m):
                    if self.action[self.ring.add[r][s]][a] != self.add[self.action[r][a]][self.action[s][a]]:
                        raise ValueError("module: action not additive in the ring argument")
                    if self.action[self.ring.mul[r][s]][a] != self.action[r][self.action[s][a]]:
                        raise ValueError("module: action not multiplicative")

    @property
    def size(self) -> int:
        return len(self.add)


@dataclass(frozen=True)
class TaggedFiniteGroup:
    """A finite abelian group with a tuple of total endomorphisms.

    The structure-comparison currency for module reductions: two modules
    are isomorphic iff their tagged groups are isomorphic.
    """

    add: tuple[tuple[int, ...], ...]
    endos: tuple[tuple[int, ...], ...]  # endos[i][a] = image of a under endo i

    @property
    def size(self) -> int:
        return len(self.add)


def tagged_iso_search(g: TaggedFiniteGroup, h: TaggedFiniteGroup) -> tuple[int, ...] | None:
    """Brute-force isomorphism of tagged groups (desk scale: order <= ~8).

    Returns the bijection as a tuple (g-element -> h-element), or None.
    """
    if g.size != h.size or len(g.endos) != len(h.endos):
        return None
    n = g.size
    for perm in itertools.permutations(range(1, n)):
        f = (0,) + perm
        ok = True
        for a in range(n):
            for b in range(n):
                if f[g.add[a][b]] != h.add[f[a]][f[b]]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        for ea, eb in zip(g.endos, h.endos):
            for a in range(n):
                if f[ea[a]] != eb[f[a]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return f
    return None
