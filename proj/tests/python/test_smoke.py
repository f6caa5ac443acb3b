import pytest

import ell3

LINE = [(-1, -3, 3, -1, "a"), (0, 0, 0, 0, "b"), (1, 3, -3, 1, "c")]
TRIANGLE = [(-4, 0, 0, 0, "p1"), (2, 0, -6, 0, "p3"), (2, 0, 6, 0, "p4")]


def test_distances():
    assert ell3.sqdist((-4, 0, 0, 0), (2, 0, -6, 0)) == (144, 0)
    assert ell3.classify(LINE[0], LINE[2]) == "double"
    assert ell3.classify(TRIANGLE[0], TRIANGLE[1]) == "unit"


def test_constraints():
    assert ell3.constraints(LINE) == [("ell3", (0, 1, 2))]
    assert ell3.constraints(TRIANGLE, kinds="eq1") == [("eq1", (0, 1, 2))]
    with pytest.raises(ValueError):
        ell3.constraints(TRIANGLE, kinds="eq3")


def test_solve():
    r = ell3.solve(TRIANGLE, seed=[(0, "red")])
    assert r["satisfiable"]
    assert r["coloring"][0] == "red"
    assert len(set(r["coloring"])) == 2
    with pytest.raises(ell3.SeedConflict):
        ell3.solve(TRIANGLE, seed=[(0, "red"), (1, "red"), (2, "red")])


def test_fig1_unsat():
    ds = ell3.dataset("fig1")
    assert len(ds["points"]) == 56
    labels = [p[4] for p in ds["points"]]
    seed = [(labels.index(label), color) for label, color in ds["seed"] if label in labels]
    r = ell3.solve(ds["points"], seed=seed, kinds=ds["kinds"])
    assert not r["satisfiable"]
    assert r["leaves"] > 0
    assert r["certificate"]


def test_brute_force_agrees():
    ds = ell3.dataset("fig1")
    pts = ds["points"][:12]
    for seed in ([], [(0, "red")], [(0, "blue"), (3, "red")]):
        assert ell3.solve(pts, seed=seed)["satisfiable"] == ell3.brute_force(pts, seed=seed)


def test_cases():
    assert ell3.check_case("case1")["steps"] == 17
    summary = ell3.check_all_cases()
    assert summary["exhaustive"]
    assert [c["name"] for c in summary["cases"]] == [f"case{k}" for k in range(1, 7)]


def test_grid():
    r = ell3.verify_grid(2)
    assert r["points"] == 43
    assert r["completions"] > 0


def test_dimacs_round_trip():
    text = ell3.to_dimacs(LINE)
    assert ell3.parse_dimacs(text) == (3, [[1, 2, 3], [-1, -2, -3]])
    with pytest.raises(ell3.ParseError):
        ell3.parse_dimacs("p cnf 1 1\n2 0\n")


def test_render():
    svg = ell3.render_svg(TRIANGLE, ["red", "blue", None], title="t")
    assert svg.startswith("<svg")
    assert "#d62728" in svg
