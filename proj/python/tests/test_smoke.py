import json

import _logmod as lm


def test_rootdata():
    d = json.loads(lm.rootdata_json("A1", "sc", 6, 1))
    assert d["r"] == 2
    assert d["z_invariant_factors"] == [6]
    assert d["k_rho_trivial"] is True


def test_admissibility_table():
    rows = json.loads(lm.admissibility_table_json(["A"], 1, [4, 8], 1, False))
    verdicts = {(r["lattice"], r["order"]): r for r in rows}
    assert verdicts[("sc", 4)]["strongly_admissible"]
    assert not verdicts[("adjoint", 4)]["admissible"]
    assert verdicts[("adjoint", 8)]["strongly_admissible"]


def test_degree_recovery_round_trip():
    eig = lm.eigendata_json("B2", "sc", 6, 1, [-7, 5])
    out = json.loads(lm.recover_degree_json(eig))
    assert out["weight"] == [-7, 5]


def test_build_verify_simples():
    alg = lm.build_algebra_json("A1", 4, "sc", 1, 0)
    rep = json.loads(lm.verify_json(alg, ["pentagon", "counit", "antipode"]))
    assert rep["all_passed"]
    simples = json.loads(lm.simples_json(alg))
    assert simples["count"] == 4
    dims = sorted(s["dim"] for s in simples["simples"])
    assert dims == [1, 1, 2, 2]
    assert sum(1 for s in simples["simples"] if s["transparent"]) == 1


def test_lattice_transparency():
    flags = lm.lattice_transparent("A1", "sc", 6, 1, [[0], [1], [6]])
    assert flags == [1, 0, 1]
