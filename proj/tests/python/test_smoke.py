import json

import pytest

import wcoh

RP2 = [[0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4],
       [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5]]


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def test_smith_normal_form():
    a = [[2, 4], [6, 8]]
    u, d, v = wcoh.smith_normal_form(a)
    assert d == [[2, 0], [0, 4]]
    assert matmul(matmul(u, a), v) == d


def test_smith_normal_form_big_entries():
    big = 2**100 + 7
    u, d, v = wcoh.smith_normal_form([[big, 0], [0, 3 * big]])
    assert d == [[big, 0], [0, 3 * big]]


def test_canonical_form():
    assert wcoh.canonical_form(2, [[2, 0], [0, 4]]) == (0, [2, 4])
    assert wcoh.canonical_form(3) == (3, [])


def test_weight_table():
    assert wcoh.weight_table(builder="affine:1") == {(0, 2): (1, [])}
    assert wcoh.weight_table(builder="torus:1") == {(1, 0): (1, []), (0, 2): (1, [])}
    text = wcoh.builder_json("curve:1,2")
    assert wcoh.weight_table(json=text) == {(1, 0): (1, []), (0, 1): (2, []), (0, 2): (1, [])}


def test_torsion_and_rational():
    datum = json.loads(wcoh.builder_json("affine:1"))
    datum["strata"][0]["cohomology"]["1"] = {"generators": 1, "relations": [[2]]}
    text = json.dumps(datum)
    assert wcoh.weight_table(json=text)[(0, 1)] == (0, [2])
    assert (0, 1) not in wcoh.weight_table(json=text, rational=True)


def test_reduced_cohomology_rp2():
    h = wcoh.reduced_cohomology(RP2)
    assert h[0] == (0, [])
    assert h[1] == (0, [])
    assert h[2] == (0, [2])


def test_checks_and_contractibility():
    assert wcoh.check("prop1", builder="torus:2")["passed"]
    assert wcoh.check("degeneration", builder="curve:1,2", hc={1: 3, 2: 1})["passed"]
    assert not wcoh.check("degeneration", builder="curve:1,2", hc={1: 2, 2: 1})["passed"]
    assert wcoh.contractibility(builder="affine:3") == "contractible-certified"
    assert wcoh.contractibility(builder="torus:2") == "sphere-like S^1"
    assert wcoh.validate(builder="torus:2") == []


def test_errors():
    with pytest.raises(wcoh.ParseError):
        wcoh.weight_table(builder="nonsense")
    with pytest.raises(ValueError):
        wcoh.weight_table()
    broken = json.loads(wcoh.builder_json("affine:1"))
    broken["strata"][1]["restrictions"]["1"]["0"] = [[2]]
    with pytest.raises(wcoh.InvalidInput):
        wcoh.weight_table(json=json.dumps(broken))


def test_cli():
    code, out, err = wcoh.run_cli(["compute", "--builder", "torus:1", "--format", "csv"])
    assert code == 0
    assert out == "a,b,free_rank,torsion\n0,2,1,\n1,0,1,\n"
    assert "affine:2" in wcoh.example_names()
