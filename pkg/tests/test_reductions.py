import itertools

import pytest

from tfabench.abgroups import (
    FiniteAbGroup,
    FiniteModule,
    FiniteRing,
    all_groups_of_order_at_most,
    tagged_iso_search,
)
from tfabench.frames import Explicit, validate_frame
from tfabench.lattices import (
    full_lattice,
    hnf,
    intersect,
    is_pure,
    member,
    purify,
    quotient_invariant_factors,
    zero_lattice,
)
from tfabench.reductions import (
    augmentation_kernel,
    augmentation_reduction,
    eliminate_functions,
    function_image,
    function_kernel,
    graph_trick,
    omega_minus_reduction,
    purity_repair,
    rmod_view,
)


def cyclic_ring(n: int) -> FiniteRing:
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    return FiniteRing(add, mul)


def test_augmentation_trivial_group():
    frame = augmentation_reduction(FiniteAbGroup(()))
    spec = frame.subgroup("K")
    assert isinstance(spec, Explicit)
    assert spec.lattice == full_lattice(1)


def test_augmentation_z2():
    group = FiniteAbGroup((2,))
    kern, elements = augmentation_kernel(group)
    assert elements == ((0,), (1,))
    assert kern == hnf([(1, 0), (0, 2)], 2)
    # oracle: enumerate coefficient vectors and compare with the map's kernel
    for a in itertools.product(range(-4, 5), repeat=2):
        in_kernel = (a[1]) % 2 == 0
        assert member(kern, a) == in_kernel
    assert quotient_invariant_factors(kern) == (2,)


def test_augmentation_klein_four():
    group = FiniteAbGroup((2, 2))
    frame = augmentation_reduction(group)
    spec = frame.subgroup("K")
    assert isinstance(spec, Explicit)
    assert quotient_invariant_factors(spec.lattice) == (2, 2)


def test_augmentation_recovers_invariant_factors_small():
    for group in all_groups_of_order_at_most(12):
        frame = augmentation_reduction(group)
        spec = frame.subgroup("K")
        assert quotient_invariant_factors(spec.lattice) == group.invariant_factors


def test_graph_trick_zero_subgroup():
    frame = graph_trick(
        augmentation_reduction(FiniteAbGroup(())).__class__(
            2, (("H", Explicit(zero_lattice(2))),), (), ()
        )
    )
    fn = frame.function_map()["phi"]
    assert frame.rank == 2
    assert all(all(x == 0 for x in row) for row in fn.matrix)


def test_graph_trick_example():
    from tfabench.frames import make_frame

    inp = make_frame(2, subgroups={"H": Explicit(hnf([(2, 0)], 2))})
    out = graph_trick(inp)
    assert out.rank == 3
    fn = out.function_map()["phi"]
    image_of_e3 = tuple(fn.matrix[i][2] for i in range(3))
    assert image_of_e3 == (2, 0, 0)
    assert function_kernel(out, "phi") == hnf([(1, 0, 0), (0, 1, 0)], 3)
    im = function_image(out, "phi")
    assert im == hnf([(2, 0, 0)], 3)
    # intersecting the image with the original factor recovers H
    first_factor = hnf([(1, 0, 0), (0, 1, 0)], 3)
    assert intersect(im, first_factor) == hnf([(2, 0, 0)], 3)


def test_eliminate_functions_no_functions():
    from tfabench.frames import make_frame

    out = eliminate_functions(make_frame(1))
    subs = out.subgroup_map()
    assert out.rank == 2
    assert subs["*1"].lattice == hnf([(1, 1)], 2)
    assert subs["*0"].lattice == hnf([(1, 0)], 2)


def test_eliminate_functions_identity_graph():
    from tfabench.frames import FrameFunction, make_frame

    inp = make_frame(1, functions={"f": FrameFunction(None, ((1,),))})
    out = eliminate_functions(inp)
    subs = out.subgroup_map()
    assert subs["graph[f]"].lattice == subs["*1"].lattice == hnf([(1, 1)], 2)


def test_eliminate_functions_doubling_graph_purity():
    from tfabench.frames import FrameFunction, make_frame

    inp = make_frame(1, functions={"f": FrameFunction(None, ((2,),))})
    out = eliminate_functions(inp)
    graph = out.subgroup_map()["graph[f]"].lattice
    assert graph == hnf([(1, 2)], 2)
    assert is_pure(graph)
    assert "graph[f]" in out.pure_indices
    assert not validate_frame(out)


def test_purity_repair_empty_generating_set():
    from tfabench.frames import make_frame

    inp = make_frame(1, subgroups={"0": Explicit(zero_lattice(1))})
    out = purity_repair(inp, {"0": ()})
    assert out.rank == 1
    fn = out.function_map()["phi[0]"]
    assert function_image(out, "phi[0]") == zero_lattice(1)
    assert fn.domain == "0"


def test_purity_repair_example():
    from tfabench.frames import make_frame

    inp = make_frame(2, subgroups={"0": Explicit(hnf([(2, 0)], 2))})
    out = purity_repair(inp, {"0": ((2, 0),)})
    assert out.rank == 3
    fn = out.function_map()["phi[0]"]
    assert tuple(fn.matrix[i][2] for i in range(3)) == (2, 0, 0)
    assert function_image(out, "phi[0]") == hnf([(2, 0, 0)], 3)
    # fresh summands are direct summands, hence pure
    for idx, spec in out.subgroups:
        assert is_pure(spec.lattice), idx
    assert not validate_frame(out)


def test_purity_repair_rejects_wrong_generators():
    from tfabench.frames import make_frame

    inp = make_frame(2, subgroups={"0": Explicit(hnf([(2, 0)], 2))})
    with pytest.raises(ValueError):
        purity_repair(inp, {"0": ((4, 0),)})


def test_rmod_view_z2_over_itself():
    ring = cyclic_ring(2)
    mod = FiniteModule(ring, ring.add, ring.mul)
    tagged = rmod_view(mod)
    assert tagged.endos[0] == (0, 0)
    assert tagged.endos[1] == (0, 1)


def test_rmod_view_z4_on_z2():
    ring = cyclic_ring(4)
    add2 = ((0, 1), (1, 0))
    action = tuple(tuple((r * m) % 2 for m in range(2)) for r in range(4))
    mod = FiniteModule(ring, add2, action)
    tagged = rmod_view(mod)
    assert tagged.endos[2] == (0, 0)


def f2x_ring() -> FiniteRing:
    # F2[x]/(x^2): element index encodes bits (a0, a1) of a0 + a1*x
    def add(a, b):
        return a ^ b

    def mul(a, b):
        a0, a1 = a & 1, a >> 1
        b0, b1 = b & 1, b >> 1
        c0 = a0 * b0 % 2
        c1 = (a0 * b1 + a1 * b0) % 2
        return c0 + 2 * c1

    n = 4
    return FiniteRing(
        tuple(tuple(add(a, b) for b in range(n)) for a in range(n)),
        tuple(tuple(mul(a, b) for b in range(n)) for a in range(n)),
    )


def f2x_module(nilpotent: bool) -> FiniteModule:
    ring = f2x_ring()
    m = 4  # (m0, m1) encoded as m0 + 2*m1
    add = tuple(tuple(a ^ b for b in range(m)) for a in range(m))

    def x_act(v):
        v0, v1 = v & 1, v >> 1
        return v1 if nilpotent else 0

    def act(r, v):
        r0, r1 = r & 1, r >> 1
        out = 0
        if r0:
            out ^= v
        if r1:
            out ^= x_act(v)
        return out

    action = tuple(tuple(act(r, v) for v in range(m)) for r in range(4))
    return FiniteModule(ring, add, action)


def test_rmod_view_separates_module_structures():
    trivial = rmod_view(f2x_module(nilpotent=False))
    jordan = rmod_view(f2x_module(nilpotent=True))
    assert tagged_iso_search(trivial, trivial) is not None
    assert tagged_iso_search(jordan, jordan) is not None
    assert tagged_iso_search(trivial, jordan) is None


def test_module_table_validation():
    ring = cyclic_ring(2)
    bad_action = ((0, 0), (1, 0))  # 1 acts non-identically but also non-additively
    with pytest.raises(ValueError):
        FiniteModule(ring, ((0, 1), (1, 0)), bad_action)


def test_omega_minus_trivial():
    frame = omega_minus_reduction(FiniteAbGroup(()), [frozenset({()})])
    assert frame.subgroup_map()["*"].lattice == full_lattice(1)
    assert frame.subgroup_map()["0"].lattice == full_lattice(1)


def test_omega_minus_z2():
    group = FiniteAbGroup((2,))
    zero_sub = frozenset({(0,)})
    whole = frozenset({(0,), (1,)})
    frame = omega_minus_reduction(group, [zero_sub, whole])
    star = frame.subgroup_map()["*"].lattice
    assert frame.subgroup_map()["0"].lattice == star
    assert frame.subgroup_map()["1"].lattice == full_lattice(2)


def test_omega_minus_rejects_non_subgroup():
    group = FiniteAbGroup((4,))
    with pytest.raises(ValueError):
        omega_minus_reduction(group, [frozenset({(0,), (1,)})])
