import json
import os
import subprocess
from fractions import Fraction

import pytest

import grecip


def test_golomb_counts():
    assert grecip.count_golomb_rulers(3, 18) == 98
    assert grecip.count_golomb_rulers(3, 35) == 510
    assert grecip.is_golomb([1, 3, 2])
    assert not grecip.is_golomb([1, 1, 1])
    assert grecip.enumerate_golomb_rulers(3, 6) == [[1, 3, 2], [2, 3, 1]]
    assert [grecip.optimal_length(m) for m in range(1, 5)] == [1, 3, 6, 11]


def test_quasipolynomial_m3():
    q = grecip.golomb_quasipolynomial(3)
    assert q.period == 12
    assert q.constituents[0] == [10, -4, Fraction(1, 2)]
    assert q.constituents[3] == [Fraction(9, 2), -3, Fraction(1, 2)]
    assert q(0) == 10
    assert all(q(t) == grecip.count_golomb_rulers(3, t) for t in range(1, 40))
    assert q.minimal_period() == 12


def test_arrangement():
    assert grecip.period_bound(3) == 12
    vs = grecip.iop_vertices(3)
    assert len(vs) == 9
    assert [Fraction(1, 3)] * 3 in vs
    assert len(grecip.golomb_hyperplanes(3)) == 5


def test_regions():
    assert [len(grecip.constrained_orientations(m)) for m in range(1, 5)] == [1, 2, 10, 114]
    assert len(grecip.constrained_orientations(4, combinatorial=True)) == 122
    assert grecip.constrained_orientations(2) == [["1", "2"], ["2", "1"]]
    assert grecip.multiplicity([1, 3, 2]) == 1
    assert grecip.multiplicity([1, 1, 1]) == 6


def test_golomb_reciprocity():
    for m, at_zero in ((2, 2), (3, 10)):
        report = grecip.reciprocity_check_golomb(m, 0, 8)
        assert report["ok"]
        assert report["value_at_zero"] == at_zero


def test_triangle():
    g = grecip.MixedGraph.triangle()
    assert g.chromatic_polynomial() == [0, 1, Fraction(-3, 2), Fraction(1, 2)]
    assert [g.reciprocity(t)["rhs"] for t in (1, 2, 3)] == [3, 12, 30]
    assert g.acyclic_orientations() == [[1, 2, 3], [1, 3, 2], [3, 1, 2]]
    assert g.compatible_orientation_count([0, 1, 0]) == 2
    assert g.chromatic_number() == 3
    assert grecip.MixedGraph.from_json(g.to_json()).edges == g.edges


def test_mixed_graph_validation():
    with pytest.raises(ValueError, match=r"\[2,1\]"):
        grecip.MixedGraph(2, edges=[(1, 2)], arcs=[(2, 1)])
    assert grecip.MixedGraph(2, arcs=[(1, 2), (2, 1)]).chromatic_number() is None


def test_budget():
    with pytest.raises(grecip.BudgetExceeded):
        grecip.count_golomb_rulers(5, 60, budget=1000)
    assert issubclass(grecip.BudgetExceeded, grecip.Error)


CLI = os.environ.get("GRECIP_CLI")


@pytest.mark.skipif(not CLI, reason="GRECIP_CLI not set")
@pytest.mark.parametrize(
    "args",
    [
        ["quasipoly", "--m", "3"],
        ["vertices", "--m", "3", "--format", "json"],
        ["regions", "--m", "3", "--list", "--format", "json"],
        ["golomb-count", "--check-table1", "--format", "json"],
        ["reciprocity", "mixed", "--fixture", "triangle", "--format", "json"],
        ["mixed", "chroma", "--fixture", "triangle", "--format", "json"],
    ],
)
def test_cli_json_is_canonical(args):
    out = subprocess.run([CLI, *args], check=True, capture_output=True, text=True).stdout
    assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out
