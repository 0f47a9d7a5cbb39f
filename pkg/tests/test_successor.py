import itertools

import pytest

from hamtough.generate import successor_instances
from hamtough.graph import complete_bipartite, from_edges
from hamtough.solvers import CycleCertificate, cycle_is_valid, hamilton_cycle
from hamtough.successor import (
    ConfigError,
    SuccessorConfig,
    _crossing_surgeries,
    _surgery_apex_marks_pair,
    _surgery_kernel_bb,
    _surgery_kernel_ff,
    _surgery_kernel_fb,
    _surgery_shared_mark,
    build_config,
    find_crossing_repair,
)


def ring_graph(m, apex_edges, chords):
    """Cycle 0..m-1 plus apex vertex m, plus extra chords."""
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m, v) for v in apex_edges]
    edges += list(chords)
    return from_edges(m + 1, edges), CycleCertificate(tuple(range(m)))


def test_config_input_validation():
    g, cyc = ring_graph(5, [0, 2], [])
    with pytest.raises(ConfigError):
        build_config(g, 5, CycleCertificate((0, 1, 2, 3)), 0, 2)  # missing vertex
    with pytest.raises(ConfigError):
        build_config(g, 5, cyc, 0, 0)  # x == y
    with pytest.raises(ConfigError):
        build_config(g, 5, cyc, 0, 1)  # 1 not adjacent to apex


def test_apex_marks_pair_surgery_general():
    # apex at 6 sees 5 and 1, so the shifted set is {0, 2}; chord 0-2 violates
    g, cyc = ring_graph(6, [5, 1], [(0, 2)])
    cands = _surgery_apex_marks_pair(cyc, 6, 0, 2)
    assert any(cycle_is_valid(g, c) for c in cands)


def test_apex_marks_pair_surgery_consecutive():
    g, cyc = ring_graph(5, [0, 1], [])
    # shifted set {1, 2} is adjacent along the ring
    cands = _surgery_apex_marks_pair(cyc, 5, 1, 2)
    assert any(cycle_is_valid(g, c) for c in cands)


def test_shared_mark_surgery():
    # x=0, xp=1, y=2, yp=3, a=4: a in both reach sets
    g, cyc = ring_graph(6, [0, 2], [(4, 1), (5, 3)])
    cands = _surgery_shared_mark(cyc, 6, 0, 2, 4)
    assert any(cycle_is_valid(g, c) for c in cands)


def test_kernel_pair_surgeries():
    # forward-forward: x=0, y=2, u=4, v=6 with support chords
    g, cyc = ring_graph(8, [0, 2], [(4, 6), (3, 5), (5, 1)])
    assert cycle_is_valid(g, _surgery_kernel_ff(cyc, 8, 0, 2, 4, 6))

    # backward-backward: x=0, u=2, v=4, y=5
    g, cyc = ring_graph(8, [0, 5], [(6, 3), (3, 1), (2, 4)])
    assert cycle_is_valid(g, _surgery_kernel_bb(cyc, 8, 0, 5, 2, 4))

    # mixed: x=0, v=2, y=4, u=6
    g, cyc = ring_graph(8, [0, 4], [(7, 5), (6, 2), (1, 3)])
    assert cycle_is_valid(g, _surgery_kernel_fb(cyc, 8, 0, 4, 6, 2))


def _config_stub(g, cyc, z, x, y, kernel_forward=(), kernel_backward=()):
    """Bare configuration carrier for direct surgery calls."""
    return SuccessorConfig(
        apex=z,
        cycle=cyc,
        x=x,
        y=y,
        x_next=cyc.successor(x),
        y_next=cyc.successor(y),
        next_x_neighbors=frozenset(),
        y_marks_forward=frozenset(),
        y_marks_backward=frozenset(),
        y_marks=frozenset(),
        apex_marks=frozenset(),
        residue=frozenset(),
        kernel_forward=frozenset(kernel_forward),
        kernel_backward=frozenset(kernel_backward),
        kernel=frozenset(kernel_forward) | frozenset(kernel_backward),
        kernel_marks=frozenset(),
        kernel_neighborhood=frozenset(),
        violations=(),
    )


def test_crossing_surgery_at_shifted_x():
    # u=8 forward kernel, v = x_next = 1, a=5, b=6 = succ(a)
    g, cyc = ring_graph(10, [0, 3], [(8, 5), (4, 9), (1, 6)])
    cfg = _config_stub(g, cyc, 10, 0, 3, kernel_forward={8})
    cands = _crossing_surgeries(cfg, 8, 1, 5, 6)
    assert any(cycle_is_valid(g, c) for c in cands)


def test_crossing_surgery_at_shifted_y():
    # u=8 forward kernel, v = y_next = 4, a=5, b=6 = succ(a)
    g, cyc = ring_graph(10, [0, 3], [(8, 5), (4, 6), (7, 1)])
    cfg = _config_stub(g, cyc, 10, 0, 3, kernel_forward={8})
    cands = _crossing_surgeries(cfg, 8, 4, 5, 6)
    assert any(cycle_is_valid(g, c) for c in cands)


def test_crossing_surgery_with_generator():
    # u=8 forward kernel, v = y_next = 5, a=3, b=2 = pred(a), generator c=7
    g, cyc = ring_graph(10, [0, 4], [(8, 3), (9, 5), (6, 1), (2, 7)])
    cfg = _config_stub(g, cyc, 10, 0, 4, kernel_forward={8, 7})
    cands = _crossing_surgeries(cfg, 8, 5, 3, 2)
    assert any(cycle_is_valid(g, c) for c in cands)


def test_crossing_surgery_backward_kernel_far_side():
    # u=2 backward kernel, v = y_next = 5, a=6 past y_next, b=7 = succ(a)
    g, cyc = ring_graph(10, [0, 4], [(2, 6), (5, 7), (3, 1)])
    cfg = _config_stub(g, cyc, 10, 0, 4, kernel_backward={2})
    cands = _crossing_surgeries(cfg, 2, 5, 6, 7)
    assert any(cycle_is_valid(g, c) for c in cands)


def test_crossing_surgery_backward_kernel_near_side():
    # u=4 backward kernel, v = y_next = 7, a=2 before u, b=3 = succ(a)
    g, cyc = ring_graph(10, [0, 6], [(4, 2), (1, 5), (7, 3)])
    cfg = _config_stub(g, cyc, 10, 0, 6, kernel_backward={4})
    cands = _crossing_surgeries(cfg, 4, 7, 2, 3)
    assert any(cycle_is_valid(g, c) for c in cands)


def test_crossing_surgery_backward_kernel_inner():
    # u=2 backward kernel, v = y_next = 6, a=4 between u and y, b=3 = pred(a)
    g, cyc = ring_graph(10, [0, 5], [(2, 4), (6, 3), (3, 1)])
    cfg = _config_stub(g, cyc, 10, 0, 5, kernel_backward={2})
    cands = _crossing_surgeries(cfg, 2, 6, 4, 3)
    assert any(cycle_is_valid(g, c) for c in cands)


def test_wheel_config_returns_cycle():
    rim = [(i, (i + 1) % 5) for i in range(5)]
    hub = [(5, i) for i in range(5)]
    g = from_edges(6, rim + hub)
    result = build_config(g, 5, CycleCertificate((0, 1, 2, 3, 4)), 0, 2)
    assert isinstance(result, CycleCertificate)
    assert cycle_is_valid(g, result.order)


def test_bipartite_apex_config_sets():
    # big side {0,1}, small {2,3,4}; apex 4, alternating cycle (0,2,1,3)
    g = complete_bipartite(2, 3)
    cyc = CycleCertificate((0, 2, 1, 3))
    cfg = build_config(g, 4, cyc, 0, 1)
    assert isinstance(cfg, SuccessorConfig)
    assert cfg.apex_marks == {2, 3}
    assert cfg.next_x_neighbors == {0, 1}
    assert cfg.marks_intersection == {3}
    assert cfg.kernel == {2, 3}
    assert not cfg.violations


def test_generated_configs_are_clean():
    checked = 0
    for inst in itertools.islice(successor_instances(seed=99), 12):
        if inst.hamiltonian:
            continue
        cfg = build_config(inst.graph, inst.z, inst.cycle, inst.x, inst.y)
        assert isinstance(cfg, SuccessorConfig)
        assert not cfg.violations
        repair, unresolved = find_crossing_repair(inst.graph, cfg)
        assert repair is None and not unresolved
        # kernel members become isolated once their neighborhood is removed
        assert not (cfg.kernel & cfg.kernel_neighborhood)
        assert inst.z not in cfg.kernel_neighborhood
        checked += 1
    assert checked >= 5


def test_hamiltonian_instances_get_repair_or_solver():
    found_repair = 0
    for inst in itertools.islice(successor_instances(seed=3), 25):
        if not inst.hamiltonian:
            continue
        result = build_config(inst.graph, inst.z, inst.cycle, inst.x, inst.y)
        if isinstance(result, CycleCertificate):
            assert cycle_is_valid(inst.graph, result.order)
            found_repair += 1
        else:
            assert hamilton_cycle(inst.graph) is not None
    assert found_repair >= 1
