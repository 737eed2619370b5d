"""Smoke test for the python bindings.

Runnable directly (python smoke.py) and under pytest.
"""

import acfg

MODELS = ["sumSF", "minSF", "sumEQ", "minEQ", "sumAL", "minAL"]


def test_graph_roundtrip():
    g = acfg.Graph(4)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.add_edge(2, 3)
    assert g.n == 4 and g.edge_count == 3
    assert acfg.parse_graph(acfg.format_graph(g)).edges() == g.edges()


def test_structure_roundtrip():
    s = acfg.parse_structure("1 2 | 3 4 | 5", 5)
    assert s.blocks() == [[0, 1], [2, 3], [4]]
    assert acfg.parse_structure(str(s), 5) == s
    assert acfg.Structure(5, [[4], [2, 3], [0, 1]]) == s  # canonical order


def test_values_on_builtin():
    fix = acfg.builtin("fig2_altruism")
    g, gamma, delta = fix["graph"], fix["structures"]["gamma"], fix["structures"]["delta"]
    assert acfg.value(g, 0, gamma) == 10
    assert acfg.value(g, 0, delta) == 16
    assert acfg.value(g, 1, delta) == 20
    # player 1 prefers delta under every model
    assert all(acfg.compare(g, m, 0, delta, gamma) == 1 for m in MODELS)
    assert acfg.utility(g, "sumEQ", 0, gamma) == 20


def test_utility_is_exact_python_int():
    g = acfg.Graph(3)
    g.add_edge(0, 1)
    u = acfg.utility(g, "sumAL", 0, acfg.Structure.grand(3))
    assert isinstance(u, int) and u > 0


def test_verify_and_constructions():
    fix = acfg.builtin("fig1_path4")
    g = fix["graph"]
    gamma = acfg.nash_construct(g)
    for m in MODELS:
        v = acfg.verify(g, m, "nash", gamma)
        assert v["stable"] and v["witness"] is None
    comp = acfg.components_structure(g)
    assert acfg.verify(g, "sumSF", "strictcore", comp)["stable"]
    bad = acfg.verify(g, "sumSF", "perfect", acfg.Structure.singletons(4))
    assert not bad["stable"] and isinstance(bad["witness"], str)
    assert acfg.check_ir_characterization(g, "minEQ", comp)


def test_exists():
    g = acfg.random_graph(6, 0.4, seed=7)
    r = acfg.exists_stable(g, "minSF", "popular", threads=2)
    assert r["found"] in (True, False)
    if r["found"]:
        assert acfg.verify(g, "minSF", "popular", r["structure"])["stable"]


def test_bell():
    assert acfg.bell(10) == 115975
    assert acfg.bell(30) == int("846749014511809332450147")


def main():
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
    print("smoke: all checks passed")


if __name__ == "__main__":
    main()
