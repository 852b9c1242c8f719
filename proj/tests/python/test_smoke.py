import json

import pytest

import jorder


def test_instances_listed():
    names = jorder.instances()
    for alias in ("q", "sym2q", "spin3q", "dual-q", "torus2"):
        assert alias in names
    assert jorder.instance_name("sym2q") == "Sym(2,Q)"
    assert jorder.instance_dim("sym3q") == 6


def test_footnote_counterexample():
    a = json.dumps(["2", "1", "1"])
    b = json.dumps(["1", "0", "9"])
    ab = json.loads(jorder.bullet("sym2q", a, b))
    assert ab == ["2", "5", "9"]
    assert jorder.cone_contains("sym2q", a)
    assert jorder.cone_contains("sym2q", b)
    assert not jorder.cone_contains("sym2q", json.dumps(ab))


def test_inverse_and_quad():
    a = json.dumps(["2", "1", "1"])
    inv = json.loads(jorder.inverse("sym2q", a))
    assert inv == ["1", "-1", "2"]
    e = jorder.unit("sym2q")
    sq = json.loads(jorder.quad("sym2q", a, e))
    assert sq == ["5", "3", "2"]
    assert not jorder.is_invertible("spin3q", json.dumps(["1", "1", "0", "0"]))


def test_cyclic_relation():
    assert jorder.cyclically_ordered("q", '["1"]', '["2"]', '["-1"]')
    assert not jorder.cyclically_ordered("q", '["1"]', '["0"]', '["-1"]')
    inf = '{"inf": true}'
    assert jorder.cyclically_ordered("q", '["0"]', '["1"]', inf)
    # chart and homogeneous evaluators agree on these
    assert jorder.cyclically_ordered_full("q", '["1"]', '["2"]', '["-1"]')
    assert jorder.transversal("q", '["0"]', inf)
    assert not jorder.transversal("q", '["1"]', '["1"]')


def test_classification():
    assert jorder.classify_pair("q", '["0"]', '{"inf": true}') == "P"
    assert jorder.classify_pair("q", '["0"]', '["1"]') == "E"
    assert jorder.classify_pair("q", '["1"]', '["-1"]') == "H"


def test_torus_boxes():
    boxes = jorder.torus_boxes(["1/2", "1/2"], ["-1/2", "-1/2"])
    assert len(boxes) == 4
    assert len(jorder.torus_boxes(["-1/2"], ["1/2"])) == 1


def test_axiom_suites():
    rep = jorder.check_axioms("sym2q", "jordan", seed=3, cases=40, bound=5)
    assert rep["pass"], rep["text"]
    rep = jorder.check_axioms("q", "pco", seed=3, cases=80, bound=6)
    assert rep["pass"], rep["text"]
    # negative control: the naturals-only order is not square ordered
    rep = jorder.check_axioms("trivial-n", "por", seed=3, cases=100, bound=6)
    assert not rep["pass"]
    failing = {c["name"] for c in rep["checks"] if not c["pass"]}
    assert "square-order" in failing


def test_tube_and_spectral():
    rep = jorder.tube_experiment("sym2q", seed=5, cases=40, bound=4)
    assert rep["pass"], rep["text"]
    rep = jorder.spectral_ball(2, seed=5, cases=60, bound=4)
    assert rep["pass"], rep["text"]


def test_render_deterministic():
    r1 = jorder.render_interval("q", '["0"]', '{"inf": true}', [0], "-3", "3", 12)
    r2 = jorder.render_interval("q", '["0"]', '{"inf": true}', [0], "-3", "3", 12)
    assert r1["svg"] == r2["svg"]
    assert r1["csv"] == r2["csv"]
    assert r1["class"] == "P"
    assert r1["members"] == 6


def test_errors_surface():
    with pytest.raises(jorder.JorderError):
        jorder.inverse("q", '["0"]')
