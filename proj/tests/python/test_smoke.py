"""Smoke tests for the python bindings: thin checks that the main operations
are wired through; the exhaustive suites live in the C++ tests."""

import math

import pytest

import bandgrowth as bg


def sl2():
    return bg.Algebra.enveloping(
        3,
        brackets=[
            (0, 2, [(1, 1, 1)]),   # [e,f] = h
            (1, 0, [(0, 2, 1)]),   # [h,e] = 2e
            (1, 2, [(2, -2, 1)]),  # [h,f] = -2f
        ],
        names=["e", "h", "f"],
    )


def test_polynomial_growth():
    alg = bg.Algebra.polynomial(1)
    table = bg.assoc_growth(alg, [alg.one(), alg.element("x")], 10)
    assert table.dims == [n + 1 for n in range(1, 11)]
    assert table.csv().startswith("n,dim\n1,2\n")


def test_enveloping_growth_is_binomial():
    u = sl2()
    gens = [u.one(), u.element("e"), u.element("h"), u.element("f")]
    table = bg.assoc_growth(u, gens, 5)
    assert table.dims == [math.comb(n + 3, 3) for n in range(1, 6)]


def test_pbw_straightening_via_products():
    u = sl2()
    assert u.mul(u.element("f"), u.element("e")) == u.element("e*f") - u.element("h")


def test_banded_bracket_identity():
    alg = bg.Algebra.polynomial(2)
    a = alg.element("x") + alg.element("y", 2, 3)
    upper = bg.Banded.band(1, a)
    lower = bg.Banded.band(-1, alg.one())
    assert alg.bracket_banded(upper, lower) == bg.phi(a)
    assert "e(1,1)" in alg.banded_str(bg.phi(a))


def test_band_correction_rule():
    alg = bg.Algebra.polynomial(1)
    x = alg.element("x")
    prod = alg.mul_banded(bg.Banded.band(-1, alg.one()), bg.Banded.band(1, x))
    assert prod == bg.Banded.band(0, x) + bg.Banded.cell(1, 1, -x)


def test_lie_growth_sl2_structure_constants():
    alg = bg.Algebra.structure_constants(
        3,
        products=[
            (0, 2, [(1, 1, 1)]), (2, 0, [(1, -1, 1)]),
            (1, 0, [(0, 2, 1)]), (0, 1, [(0, -2, 1)]),
            (1, 2, [(2, -2, 1)]), (2, 1, [(2, 2, 1)]),
        ],
        names=["e", "h", "f"],
    )
    table = bg.lie_growth(alg, [alg.element("e"), alg.element("f")], 5)
    assert table.dims == [2, 3, 3, 3, 3]
    assert bg.brute_force_span(alg, [alg.element("e"), alg.element("f")], 4) == 3


def test_verify_lemma_scenario():
    alg = bg.Algebra.polynomial(1)
    scenario = bg.Scenario(alg, [alg.element("x")], 4)
    for rows in (
        bg.verify_phi(scenario, trials=100, seed=42),
        bg.verify_commutator_image(scenario),
        bg.verify_inclusion(scenario),
    ):
        assert all(passed for _, passed, _ in rows)
    rows, base_table, banded_table = bg.verify_growth_bound(scenario)
    assert all(passed for _, passed, _ in rows)
    assert base_table.dims == [2, 3, 4, 5]
    assert list(banded_table.bounds) == [(n * n + 2 * n + 1) * (n + 1) for n in range(1, 5)]


def test_truncation_oracle():
    ok, failed_trial, _ = bg.truncation_oracle(bg.Algebra.polynomial(1), trials=50)
    assert ok
    assert failed_trial == -1


def test_pipeline():
    result = bg.pipeline_growth(sl2(), 3)
    assert all(passed for _, passed, _ in result["report"])
    assert result["u_table"].dims == [4, 10, 20]
    assert result["cc_lie"].dims[2] <= result["cc_assoc"].dims[2]


def test_validation_errors_surface():
    with pytest.raises(ValueError):
        bg.Algebra.enveloping(3, brackets=[
            (0, 1, [(0, 1, 1)]), (1, 2, [(1, 1, 1)]), (2, 0, [(2, 1, 1)]),
        ])
    with pytest.raises(ValueError):
        bg.Algebra.polynomial(1, p=6)


def test_cli_roundtrip(tmp_path):
    cfg = tmp_path / "g.cfg"
    cfg.write_text(
        "[algebra]\nkind = polynomial\nvars = 1\n"
        "[elements]\na1 = (1, 1, 1)\na2 = (x, 1, 1)\n"
        "[run]\nn_max = 5\n"
    )
    code, out, err = bg.cli(["growth", "--config", str(cfg), "--out", str(tmp_path)])
    assert code == 0, err
    assert (tmp_path / "growth.csv").read_text() == "n,dim\n1,2\n2,3\n3,4\n4,5\n5,6\n"
