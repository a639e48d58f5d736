import json
import pathlib

import pytest

import fupdate

FIX = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def read_mat(name):
    lines = (FIX / name).read_text().split("\n")
    r, c, _ = map(int, lines[0].split())
    return [list(map(int, lines[1 + i].split())) for i in range(r)]


def test_example1_paper_encoder():
    p = fupdate.Problem.load(str(FIX / "example1_problem.json"))
    assert (p.m, p.n, p.q, p.epsilon) == (5, 8, 2, 1)
    ok, witness = fupdate.is_valid_encoder(p, read_mat("example1_S.mat"))
    assert ok and witness is None
    ok, witness = fupdate.is_valid_encoder(p, read_mat("example1_S.mat")[:1])
    assert not ok and len(witness) == 5
    assert len(fupdate.interference(p)["syndromes"]) == 18


def test_example5_companion_matches_fixture():
    p = fupdate.Problem.load(str(FIX / "example5_problem.json"))
    r = fupdate.construct(p, "companion")
    assert r["length"] == 12 and r["checked"]
    assert r["S"] == read_mat("example5_S.mat")
    trials, failures = fupdate.simulate(p, r["S"], trials=200, seed=4)
    assert (trials, failures) == (200, 0)


def test_optimal_and_bounds():
    p = fupdate.Problem.load(str(FIX / "example3_gf4_problem.json"))
    assert fupdate.bounds(p) == (2, 2)
    r = fupdate.optimal_codelength(p)
    assert r["l_opt"] == 2 and r["certified"]


def test_code_values():
    assert fupdate.kq(2, 7, 3)[:2] == (4, 4)
    assert fupdate.kq(4, 4, 3)[:2] == (2, 2)
    assert fupdate.covering_radius(2, [[1, 1, 1]], "generator") == 1


def test_striped_round_trip_and_decode():
    p = fupdate.Problem.striped(2, [[1, 1, 1]], 4, 1)
    r = fupdate.construct(p, "t1-ecc")
    assert r["length"] == 3
    x = [1, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1]
    y = list(x)
    y[5] ^= 1
    mul = lambda a, v: [sum(ai * vi for ai, vi in zip(row, v)) % 2 for row in a]
    got = fupdate.decode(p, r["S"], mul(r["H"], y), mul(p.A, x))
    assert got == mul(p.A, y)
    back = fupdate.Problem.from_json(p.to_json())
    assert back.A == p.A


def test_errors_and_cli():
    with pytest.raises(fupdate.ParseError):
        fupdate.Problem.from_json('{"field": {"p": 2}, "epsilon": 1, "A": [[1, 1], [1, 1]]}')
    with pytest.raises(fupdate.FupdateError):
        fupdate.Problem.from_rows(2, [[1, 1], [1, 1]], 1)
    big = fupdate.Problem.from_rows(2, [[1] * 40], 3)
    with pytest.raises(fupdate.BudgetExceeded):
        fupdate.interference(big, budget=100)
    code, out, _ = fupdate.run_cli(["bounds", "--problem", str(FIX / "example3_gf2_problem.json")])
    assert code == 0 and "lower: 3" in out.splitlines()
    doc = json.loads(fupdate.fic_export(fupdate.Problem.load(str(FIX / "example1_problem.json"))))
    assert doc["users"] == 28 and doc["index_base"] == 1
