import json
from fractions import Fraction

import pytest

from hamtough.campaign import CampaignError, run_campaign
from hamtough.graph import complete, cycle_graph, petersen
from hamtough.graph6 import emit_graph6


def lines_for(*graphs):
    return [(i + 1, emit_graph6(g)) for i, g in enumerate(graphs)]


def test_chvatal_campaign_counts():
    report, records = run_campaign("chvatal", lines_for(complete(5), cycle_graph(5), petersen()))
    assert report.graphs_examined == 3
    assert report.hypothesis_hits == 1  # only K_5 satisfies the condition
    assert report.conclusion_verified == 1
    assert report.clean
    assert records[0].certificate.startswith("CYCLE ")
    assert records[1].hypothesis is False and records[1].conclusion is None


def test_requires_threshold():
    with pytest.raises(CampaignError):
        run_campaign("hoang", lines_for(complete(5)))
    with pytest.raises(CampaignError):
        run_campaign("made-up", lines_for(complete(5)))
    with pytest.raises(CampaignError):
        run_campaign("hoang", lines_for(complete(5)), t=Fraction(3, 2))


def test_bad_lines_abort_or_skip():
    stream = [(1, emit_graph6(complete(4))), (2, "C~~~"), (3, emit_graph6(cycle_graph(5)))]
    with pytest.raises(CampaignError) as err:
        run_campaign("chvatal", stream)
    assert "line 2" in str(err.value)
    report, records = run_campaign("chvatal", stream, skip_bad=True)
    assert report.graphs_examined == 2
    assert report.bad_lines and report.bad_lines[0][0] == 2


def test_closure_lemma_campaign():
    report, _ = run_campaign("closure-lemma", lines_for(complete(6), cycle_graph(6)), t=4)
    # K_6 is infinitely tough; C_6 is 1-tough so the hypothesis skips it
    assert report.hypothesis_hits == 1
    assert report.clean


def test_bauer_campaign():
    report, _ = run_campaign("bauer", lines_for(complete(5), cycle_graph(5), petersen()), t=1)
    assert report.clean
    assert report.conclusion_verified == report.hypothesis_hits


def test_successor_campaign_below_threshold_is_vacuous():
    # the apex theorem is stated for t >= 4; Petersen at t = 4/3 must not count
    report, records = run_campaign("successor", lines_for(petersen()), t=Fraction(4, 3))
    assert report.graphs_examined == 1
    assert report.hypothesis_hits == 0
    report, _ = run_campaign("successor", lines_for(petersen(), complete(6)), t=4)
    assert report.hypothesis_hits == 0  # Petersen is not 4-tough, K_6 is Hamiltonian
    assert report.clean


def test_pancyclic_campaign():
    report, _ = run_campaign("pancyclic-corollary", lines_for(complete(6)), t=4)
    assert report.hypothesis_hits == 1 and report.clean


def test_violation_records_reproduce():
    # K_{3,3} is 1-tough and satisfies the shifted condition at t = 1, but it
    # is bipartite, so the pancyclicity conclusion genuinely fails there
    from hamtough.graph import complete_bipartite
    from hamtough.graph6 import parse_graph6
    from hamtough.solvers import pancyclic

    report, _ = run_campaign("pancyclic-corollary", lines_for(complete_bipartite(3, 3)), t=1)
    assert not report.clean
    record = report.violations[0]
    assert "missing cycle length 3" in record["detail"]
    # the record is a self-contained reproduction
    g = parse_graph6(record["g6"])
    assert not pancyclic(g).pancyclic
    rerun, _ = run_campaign("pancyclic-corollary", [(1, record["g6"])], t=1)
    assert rerun.violations[0]["detail"] == record["detail"]


def test_hoang_t3_t4_small_stream():
    # shifted-condition soundness at the remaining thresholds on a small slate
    from hamtough.generate import random_graph, random_tough_graph
    from hamtough.graph6 import emit_graph6
    import random as _random

    rng = _random.Random(31)
    lines = [emit_graph6(random_graph(rng.randint(8, 12), rng.uniform(0.3, 0.9), rng)) for _ in range(150)]
    lines += [emit_graph6(random_tough_graph(rng.randint(9, 12), 4, seed=rng.randrange(2**31))) for _ in range(10)]
    stream = list(enumerate(lines, start=1))
    for t in (3, 4):
        report, _ = run_campaign("hoang", stream, t=t)
        assert report.clean, report.violations[:2]


def test_parallel_matches_serial():
    graphs = [complete(5), cycle_graph(5), petersen(), complete(6), cycle_graph(7)]
    serial, rec1 = run_campaign("chvatal", lines_for(*graphs), jobs=1)
    parallel, rec2 = run_campaign("chvatal", lines_for(*graphs), jobs=2)
    assert serial.summary_json(include_timing=False) == parallel.summary_json(include_timing=False)
    strip = lambda rs: [r.to_json(include_timing=False) for r in rs]
    assert strip(rec1) == strip(rec2)


def test_report_json_shapes():
    report, records = run_campaign("chvatal", lines_for(complete(4)))
    payload = json.loads(records[0].to_json())
    assert set(payload) >= {"g6", "hypothesis", "conclusion", "certificate", "micros"}
    summary = json.loads(report.summary_json())
    assert summary["theorem"] == "chvatal"
    assert summary["violations"] == []


def test_determinism_without_timing():
    graphs = [cycle_graph(6), complete(5)]
    a, ra = run_campaign("chvatal", lines_for(*graphs))
    b, rb = run_campaign("chvatal", lines_for(*graphs))
    assert a.summary_json(include_timing=False) == b.summary_json(include_timing=False)
    assert [r.to_json(include_timing=False) for r in ra] == [
        r.to_json(include_timing=False) for r in rb
    ]
