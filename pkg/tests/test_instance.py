from __future__ import annotations

import random

import pytest

from lcr import (
    Graph,
    LcrInstance,
    RichListRemoval,
    SingletonRemoval,
    is_proper_list_coloring,
    is_valid_sequence,
    lift_sequence,
    make_instance,
    normalize,
    restrict,
)
from lcr.errors import (
    InfeasibleList,
    InvalidSequence,
    OutOfRange,
    PartialColoring,
)
from lcr.generators import gen_random_instance
from lcr.instance import induced_instance, trimmed_instance
from lcr.oracle import build, oracle_decide, reachable

from .helpers import path_graph, star_graph


def edge_instance(l0, l1, f0, fr):
    return make_instance(Graph(2, [(0, 1)]), [l0, l1], f0, fr)


def test_instance_validates_shapes():
    g = Graph(2, [(0, 1)])
    with pytest.raises(ValueError):
        make_instance(g, [{1, 2}], (1, 2), (2, 1))
    with pytest.raises(ValueError):
        make_instance(g, [{1, 2}, set()], (1, 2), (2, 1))
    with pytest.raises(ValueError):
        make_instance(g, [{1, 2}, {1, 2}], (1,), (2, 1))


def test_num_colors_is_dense_universe_size():
    inst = edge_instance({0, 3}, {1}, (0, 1), (3, 1))
    assert inst.num_colors == 4


# -- proper list colorings -----------------------------------------------------


def test_proper_coloring_accepted():
    inst = edge_instance({1, 2}, {1, 2}, (1, 2), (2, 1))
    assert is_proper_list_coloring(inst, (1, 2))


def test_monochromatic_edge_rejected():
    inst = edge_instance({1, 2}, {1, 2}, (1, 2), (2, 1))
    assert not is_proper_list_coloring(inst, (1, 1))


def test_color_outside_list_rejected():
    inst = make_instance(Graph(1), [{2, 3}], (2,), (3,))
    assert not is_proper_list_coloring(inst, (1,))


def test_partial_coloring_is_an_error():
    inst = edge_instance({1, 2}, {1, 2}, (1, 2), (2, 1))
    with pytest.raises(PartialColoring):
        is_proper_list_coloring(inst, (1,))


# -- normalization ---------------------------------------------------------------


def test_singleton_removal_cascades():
    inst = edge_instance({1}, {1, 2}, (1, 2), (1, 2))
    trimmed, trace = normalize(inst)
    assert trimmed.graph.n == 0
    assert trace.removals == (
        SingletonRemoval(0, 1, (1,)),
        SingletonRemoval(1, 2, ()),
    )
    assert trace.id_map == {}


def test_rich_list_removal_keeps_neighbor_lists():
    # center list has degree + 3 colors, so it goes first; the isolated
    # leaves that remain are rich in turn and the instance empties
    inst = make_instance(
        star_graph(3),
        [{0, 1, 2, 3, 4, 5}, {0, 1}, {1, 2}, {2, 3}],
        (0, 1, 2, 3),
        (4, 0, 1, 2),
    )
    trimmed, trace = normalize(inst)
    assert trace.removals[0] == RichListRemoval(0)
    assert all(isinstance(r, RichListRemoval) for r in trace.removals)
    assert trimmed.graph.n == 0


def test_normalize_identity_on_normalized_instance():
    inst = edge_instance({1, 2}, {2, 3}, (1, 2), (2, 3))
    trimmed, trace = normalize(inst)
    assert trimmed is inst
    assert trace.removals == ()
    assert trace.id_map == {0: 0, 1: 1}


def test_normalize_is_idempotent():
    for seed in range(40):
        inst = gen_random_instance(6, seed=seed)
        once, _ = normalize(inst)
        twice, trace = normalize(once)
        assert twice is once and trace.removals == ()


def test_normalize_renumbers_survivors():
    # vertex 1 is forced, which strips color 3 from vertex 2; vertex 0 ends
    # up isolated and rich; the far edge survives with fresh ids
    inst = make_instance(
        path_graph(4),
        [{1, 2}, {3}, {2, 3, 4}, {2, 4}],
        (1, 3, 2, 4),
        (2, 3, 4, 2),
    )
    trimmed, trace = normalize(inst)
    assert trace.removals == (SingletonRemoval(1, 3, (2,)), RichListRemoval(0))
    assert trace.id_map == {2: 0, 3: 1}
    assert trimmed.graph.n == 2 and trimmed.graph.m == 1
    assert trimmed.lists == (frozenset({2, 4}), frozenset({2, 4}))
    assert trimmed.f0 == (2, 4) and trimmed.fr == (4, 2)


def test_normalize_flags_contradicted_pin():
    inst = edge_instance({1}, {1, 2}, (1, 2), (2, 2))
    with pytest.raises(InfeasibleList):
        normalize(inst)


def test_normalized_bounds_hold():
    for seed in range(60):
        inst = gen_random_instance(7, seed=100 + seed)
        trimmed, _ = normalize(inst)
        for v in range(trimmed.graph.n):
            assert 2 <= len(trimmed.lists[v]) <= trimmed.graph.degree(v) + 1


def test_trimmed_instance_replays_the_trace():
    for seed in range(40):
        inst = gen_random_instance(7, seed=300 + seed)
        trimmed, trace = normalize(inst)
        replayed = trimmed_instance(inst, trace)
        assert replayed == trimmed


def test_normalize_preserves_the_answer():
    # the empty product makes the oracle answer yes on a fully trimmed instance
    for seed in range(120):
        inst = gen_random_instance(6, colors=3, seed=500 + seed)
        trimmed, _ = normalize(inst)
        assert oracle_decide(inst) == oracle_decide(trimmed)


# -- witness lifting -------------------------------------------------------------


def test_lift_empty_sequence_without_removals():
    inst = edge_instance({1, 2}, {2, 3}, (1, 2), (1, 2))
    _, trace = normalize(inst)
    assert lift_sequence(trace, inst, []) == []


def test_lift_reinserts_rich_vertex_moves():
    # vertex 0 is rich and vanishes; the lifted run must dodge it around
    # vertex 1's recoloring and park it on its target color afterwards
    inst = edge_instance({1, 2, 3}, {1, 2}, (1, 2), (2, 1))
    trimmed, trace = normalize(inst)
    assert trimmed.graph.n == 0
    lifted = lift_sequence(trace, inst, [])
    assert lifted == [(0, 3), (1, 1), (0, 2)]
    assert is_valid_sequence(inst, lifted)


def test_lift_keeps_forced_colors_for_singletons():
    inst = edge_instance({1}, {1, 2}, (1, 2), (1, 2))
    _, trace = normalize(inst)
    lifted = lift_sequence(trace, inst, [])
    assert lifted == []
    assert is_valid_sequence(inst, lifted)


def test_lift_rejects_sequences_invalid_on_the_trimmed_instance():
    inst = edge_instance({1, 2, 3}, {1, 2}, (1, 2), (2, 1))
    _, trace = normalize(inst)
    with pytest.raises(InvalidSequence):
        lift_sequence(trace, inst, [(0, 1)])


def test_lifted_witnesses_stay_valid():
    rng = random.Random(77)
    checked = 0
    for seed in range(200):
        inst = gen_random_instance(rng.randint(3, 7), colors=4, seed=700 + seed)
        trimmed, trace = normalize(inst)
        if trimmed.graph.n == 0:
            seq = []
        else:
            steps = reachable(
                build(trimmed.graph, trimmed.lists), trimmed.f0, trimmed.fr
            )
            if steps is None:
                continue
            seq = steps
        lifted = lift_sequence(trace, inst, seq)
        assert is_valid_sequence(inst, lifted)
        checked += 1
    assert checked >= 100


# -- step validation ---------------------------------------------------------------


def test_empty_sequence_needs_equal_endpoints():
    same = edge_instance({1, 2}, {1, 2}, (1, 2), (1, 2))
    assert is_valid_sequence(same, [])
    different = edge_instance({1, 2}, {1, 2}, (1, 2), (2, 1))
    assert not is_valid_sequence(different, [])


def test_single_vertex_recolor_step():
    inst = make_instance(Graph(1), [{1, 2}], (1,), (2,))
    assert is_valid_sequence(inst, [(0, 2)])


def test_colliding_first_step_is_invalid():
    inst = edge_instance({1, 2}, {1, 2}, (1, 2), (2, 1))
    assert not is_valid_sequence(inst, [(0, 2), (1, 1)])


def test_steps_must_change_the_vertex():
    inst = make_instance(Graph(1), [{1, 2}], (1,), (2,))
    assert not is_valid_sequence(inst, [(0, 1), (0, 2)])
    assert not is_valid_sequence(inst, [(0, 3)])
    assert not is_valid_sequence(inst, [(1, 2)])


def test_sequence_must_land_on_fr():
    inst = make_instance(Graph(1), [{1, 2, 3}], (1,), (2,))
    assert not is_valid_sequence(inst, [(0, 3)])
    assert is_valid_sequence(inst, [(0, 3), (0, 2)])


# -- restriction -------------------------------------------------------------------


def k13_instance():
    return make_instance(
        star_graph(3),
        [{0, 1}, {0, 1}, {1, 2}, {0, 2}],
        (0, 1, 1, 2),
        (1, 0, 2, 0),
    )


def test_restrict_full_prefix_is_the_whole_coloring():
    inst = k13_instance()
    assert restrict(inst, inst.f0, 4) == {0: 0, 1: 1, 2: 1, 3: 2}


def test_restrict_first_vertex_only():
    inst = k13_instance()
    # the solver ordering of this star starts at the promoted leaf 1
    assert restrict(inst, inst.f0, 1) == {1: 1}


def test_restrict_mid_prefix_projects_the_ordering():
    inst = k13_instance()
    assert restrict(inst, inst.f0, 2) == {1: 1, 0: 0}
    assert restrict(inst, inst.f0, 3) == {1: 1, 0: 0, 3: 2}


def test_restrict_rejects_bad_prefix_sizes():
    inst = k13_instance()
    with pytest.raises(OutOfRange):
        restrict(inst, inst.f0, 0)
    with pytest.raises(OutOfRange):
        restrict(inst, inst.f0, 5)
    with pytest.raises(PartialColoring):
        restrict(inst, (0, 1), 2)


# -- induced sub-instances ----------------------------------------------------------


def test_induced_instance_keeps_lists_and_endpoints():
    inst = make_instance(
        path_graph(4),
        [{1, 2}, {2, 3}, {3, 4}, {4, 5}],
        (1, 2, 3, 4),
        (2, 3, 4, 5),
    )
    sub, id_map = induced_instance(inst, [2, 0, 3])
    assert id_map == {0: 0, 2: 1, 3: 2}
    assert sub.graph.edges == frozenset({(1, 2)})
    assert sub.lists == (frozenset({1, 2}), frozenset({3, 4}), frozenset({4, 5}))
    assert sub.f0 == (1, 3, 4) and sub.fr == (2, 4, 5)
