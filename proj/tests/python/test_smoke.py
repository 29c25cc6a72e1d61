import json

import pytest

import signedcol as sc


def test_graph_roundtrip():
    g = sc.SignedGraph(3, [(0, 1, "+"), (1, 2, "-")])
    assert (g.n, g.m) == (3, 2)
    assert g.sign(2, 1) == "-"
    assert g.sign(0, 2) is None
    assert g.vertex_class(1) == "Mixed"
    back = sc.parse_sg(g.to_sg())
    assert back.edges() == g.edges()


def test_bad_input():
    with pytest.raises(ValueError):
        sc.parse_sg("p sg 2 2\ne 0 1 +\ne 0 1 -\n")
    with pytest.raises(ValueError):
        sc.SignedGraph(2, [(0, 1, "x")])
    with pytest.raises(ValueError):
        sc.target("k5")


def test_homomorphisms():
    sp9 = sc.target("sp9")
    assert sp9.n == 9 and sp9.m == 36
    edge = sc.SignedGraph(2, [(0, 1, "+")])
    phi = sc.find_homomorphism(edge, sp9, {0: 4})
    assert phi is not None and phi[0] == 4
    assert sc.count_homomorphisms(edge, sp9, {0: 4}) == 4
    assert sc.find_homomorphism(sc.target("k4s+"), sp9) is None
    assert sc.canonical_form(sp9) == sc.canonical_form(sc.flip_signs(sp9))


def test_colouring():
    path = sc.SignedGraph(3, [(0, 1, "+"), (1, 2, "-")])
    assert not sc.validate_colouring(path, [0, 1, 0])
    assert sc.validate_colouring(path, [0, 1, 2])
    assert sc.find_k_colouring(path, 2) is None
    chi, labels = sc.chromatic(path)
    assert chi == 3 and sc.validate_colouring(path, labels)


def test_ten_colouring():
    k4 = sc.from_graph6("C~", "++++++")
    result = sc.ten_colouring(k4)
    assert result["branch"] == "UnbalancedVertex"
    assert result["k"] <= 10
    assert sc.validate_colouring(k4, result["labels"], result["k"])
    assert json.loads(result["trace"])["branch"] == "UnbalancedVertex"
    with pytest.raises(ValueError):
        sc.ten_colouring(sc.SignedGraph(2, [(0, 1, "+")]))


def test_survey_and_verify():
    lines = sc.survey(max_n=4, sp9star=True).splitlines()
    assert len(lines) == 12
    summary = json.loads(lines[-1])
    instances = [json.loads(line) for line in lines[:-1]]
    assert all(r["bound10_ok"] and r["chi"] <= 10 for r in instances)
    assert summary["summary"] is True and summary["falsifications"] == 0
    names = [name for name, _, _ in sc.verify()]
    assert len(names) == 7
