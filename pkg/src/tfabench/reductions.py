"""The reduction chain from groups to subgroup-tagged frames.

Each operation realizes one link at desk scale: abelian group -> kernel of
the coefficient-summing (augmentation) map, subgroup -> endomorphism via a
graph trick, endomorphisms -> subgroups via graphs, purity repair through
fresh free summands, and module -> tagged-group views.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abgroups import Element, FiniteAbGroup, FiniteModule, TaggedFiniteGroup
from .frames import Explicit, FrameFunction, FrameStructure, make_frame
from .lattices import (
    Lattice,
    Vector,
    full_lattice,
    hnf,
    kernel_rows,
    lattice_sum,
    matrix_image,
    zero_lattice,
)


def augmentation_kernel(group: FiniteAbGroup) -> tuple[Lattice, tuple[Element, ...]]:
    """Kernel of a |-> sum_b a(b)*b in Z^|G|, with the element enumeration used."""
    elements = tuple(group.elements())
    m = len(elements)
    k = len(group.invariant_factors)
    if k == 0:
        return full_lattice(m), elements
    # a in K  iff  M a = D y for some y, where column b of M is the tuple b
    # and D is the diagonal of invariant factors.
    stacked = [list(b) for b in elements]
    for i, d in enumerate(group.invariant_factors):
        stacked.append([-d if t == i else 0 for t in range(k)])
    rel = kernel_rows(stacked, k)
    proj = [z[:m] for z in rel.basis]
    return hnf(proj, m), elements


def augmentation_reduction(group: FiniteAbGroup) -> FrameStructure:
    """Frame over Z^|G| with one subgroup K, the kernel of the coefficient-sum map.

    Z^|G| / K is isomorphic to the input group; K has full rank.
    """
    kern, _ = augmentation_kernel(group)
    return make_frame(kern.ambient_rank, subgroups={"K": Explicit(kern)})


def graph_trick(frame: FrameStructure) -> FrameStructure:
    """Replace the single subgroup H of (G, H) by a total endomorphism.

    Output lives on G x H' (H' a fresh copy of H): zero on the G factor,
    the canonical isomorphism H' -> H on the fresh factor.  Then
    ker = G x 0 and im = H x 0.
    """
    subs = frame.subgroup_map()
    if len(subs) != 1 or frame.functions:
        raise ValueError("graph_trick expects exactly one subgroup and no functions")
    (spec,) = subs.values()
    if not isinstance(spec, Explicit):
        raise ValueError("graph_trick expects an explicit subgroup")
    h = spec.lattice
    r, hr = frame.rank, h.rank
    n = r + hr
    mat = [[0] * n for _ in range(n)]
    for i, row in enumerate(h.basis):
        for t in range(r):
            mat[t][r + i] = row[t]
    phi = FrameFunction(None, tuple(tuple(row) for row in mat))
    return make_frame(n, functions={"phi": phi})


def _embed_block(vec: Vector, offset: int, total: int) -> Vector:
    out = [0] * total
    for i, x in enumerate(vec):
        out[offset + i] = x
    return tuple(out)


def eliminate_functions(frame: FrameStructure) -> FrameStructure:
    """Subgroups-only frame over G x G: copies, graphs, the first factor, the diagonal.

    Graph purity equals domain purity, so purity flags transfer from the
    domains; the first factor and the diagonal are direct summands.
    """
    r = frame.rank
    n = 2 * r
    subs: dict[str, Explicit] = {}
    pure: set[str] = set()
    for idx, spec in frame.subgroups:
        if not isinstance(spec, Explicit):
            raise ValueError("eliminate_functions expects explicit subgroups")
        rows = [_embed_block(row, 0, n) for row in spec.lattice.basis]
        subs[f"G[{idx}]"] = Explicit(hnf(rows, n))
        if idx in frame.pure_indices:
            pure.add(f"G[{idx}]")
    for idx, fn in frame.functions:
        if fn.domain is None:
            dom = full_lattice(r)
            dom_pure = True
        else:
            spec = frame.subgroup(fn.domain)
            assert isinstance(spec, Explicit)
            dom = spec.lattice
            dom_pure = fn.domain in frame.pure_indices
        rows = []
        for d in dom.basis:
            img = tuple(sum(fn.matrix[i][j] * d[j] for j in range(r)) for i in range(r))
            rows.append(tuple(d) + img)
        subs[f"graph[{idx}]"] = Explicit(hnf(rows, n))
        if dom_pure:
            pure.add(f"graph[{idx}]")
    subs["*0"] = Explicit(hnf([_embed_block(row, 0, n) for row in full_lattice(r).basis], n))
    subs["*1"] = Explicit(hnf([tuple(row) + tuple(row) for row in full_lattice(r).basis], n))
    pure.update({"*0", "*1"})
    return make_frame(n, subgroups=subs, pure=pure)


def purity_repair(
    frame: FrameStructure, generating_sets: dict[str, tuple[Vector, ...]]
) -> FrameStructure:
    """Replace each tagged subgroup by a fresh free summand mapping onto it.

    Ambient becomes G x (direct sum of Z^{S_n}); the fresh summands are
    direct summands (hence pure), and the function for index n carries its
    summand onto the original subgroup, basis vector for s mapping to s.
    """
    subs = frame.subgroup_map()
    if frame.functions:
        raise ValueError("purity_repair expects a subgroups-only frame")
    order = sorted(subs)
    if set(generating_sets) != set(order):
        raise ValueError("generating_sets must cover exactly the subgroup indices")
    r = frame.rank
    sizes = {idx: len(generating_sets[idx]) for idx in order}
    n = r + sum(sizes.values())
    for idx in order:
        spec = subs[idx]
        if not isinstance(spec, Explicit):
            raise ValueError("purity_repair expects explicit subgroups")
        if hnf(generating_sets[idx], r) != spec.lattice:
            raise ValueError(f"generating set for {idx} does not generate the subgroup")
    out_subs: dict[str, Explicit] = {}
    out_fns: dict[str, FrameFunction] = {}
    pure: set[str] = set()
    offset = r
    for idx in order:
        gens = generating_sets[idx]
        rows = []
        for i in range(len(gens)):
            e = [0] * n
            e[offset + i] = 1
            rows.append(tuple(e))
        out_subs[idx] = Explicit(hnf(rows, n))
        pure.add(idx)
        mat = [[0] * n for _ in range(n)]
        for i, s in enumerate(gens):
            for t in range(r):
                mat[t][offset + i] = s[t]
        out_fns[f"phi[{idx}]"] = FrameFunction(idx, tuple(tuple(row) for row in mat))
        offset += len(gens)
    out_subs["*"] = Explicit(hnf([_embed_block(row, 0, n) for row in full_lattice(r).basis], n))
    pure.add("*")
    return make_frame(n, subgroups=out_subs, functions=out_fns, pure=pure)


def omega_minus_reduction(
    group: FiniteAbGroup, subgroups: list[frozenset[Element]]
) -> FrameStructure:
    """Tagged-frame view of (G, G_n) through the coefficient lattice Z^|G|.

    The star subgroup is the kernel of the coefficient-sum map; subgroup n
    becomes star + the coordinate block of G_n, so the quotient by star
    carries subgroup n back onto G_n.
    """
    for s in subgroups:
        if not group.is_subgroup(s):
            raise ValueError("listed set is not a subgroup")
    kern, elements = augmentation_kernel(group)
    m = len(elements)
    pos = {b: i for i, b in enumerate(elements)}
    subs: dict[str, Explicit] = {"*": Explicit(kern)}
    for n, s in enumerate(subgroups):
        block = []
        for b in sorted(s):
            e = [0] * m
            e[pos[b]] = 1
            block.append(tuple(e))
        subs[str(n)] = Explicit(lattice_sum(kern, hnf(block, m)))
    return make_frame(m, subgroups=subs)


def rmod_view(module: FiniteModule) -> TaggedFiniteGroup:
    """View a finite module as its additive group tagged with one endomorphism per scalar."""
    endos = tuple(tuple(row) for row in module.action)
    return TaggedFiniteGroup(module.add, endos)


def function_kernel(frame: FrameStructure, index: str) -> Lattice:
    """ker of a whole-domain function, as a sublattice of the ambient group."""
    fn = frame.function_map()[index]
    if fn.domain is not None:
        raise ValueError("kernel computed for total functions only")
    ker = kernel_rows([[row[j] for row in fn.matrix] for j in range(frame.rank)], frame.rank)
    return ker


def function_image(frame: FrameStructure, index: str) -> Lattice:
    fn = frame.function_map()[index]
    dom = full_lattice(frame.rank) if fn.domain is None else None
    if dom is None:
        spec = frame.subgroup(fn.domain)
        assert isinstance(spec, Explicit)
        dom = spec.lattice
    return matrix_image(fn.matrix, dom)
