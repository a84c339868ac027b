import math

import pytest

qz = pytest.importorskip("qzeno")


def params(c0=0.8):
    a = qz.alpha_from_c0(c0, qz.Branch.PLUS)
    return qz.SystemParams(a, math.sqrt(1.0 - a * a))


def test_basis_index():
    assert qz.basis_index(1, 1, 0, 0) == 12
    assert qz.basis_index(1, 0, 0, 1) == 9


def test_zeno_state_hand_values():
    out = qz.zeno_state(params(), 2)
    assert out.survival_probability == pytest.approx(0.25, abs=1e-12)
    assert out.concurrence == pytest.approx(0.8, abs=1e-12)


def test_oracle_matches_analytic():
    p = params()
    for n in (1, 3, 8):
        oracle = qz.run_zeno_protocol(p, n, qz.swap_time(1.0))
        analytic = qz.zeno_state(p, n)
        assert oracle.concurrence == pytest.approx(analytic.concurrence, abs=1e-9)


def test_sudden_death_and_resurrection():
    assert qz.sudden_death_time(0.8) == pytest.approx(math.pi / 4, abs=1e-12)
    assert qz.sudden_death_time(1.0) is None
    report = qz.run_bell_prep(params())
    assert report.final_concurrence == pytest.approx(1.0, abs=1e-9)
    assert report.survival_probability == pytest.approx(0.4, abs=1e-9)


def test_wootters_roundtrip():
    psi = qz.evolve(qz.initial_state(params()), 1.0, 0.6)
    rho = qz.reduce_to_ab(psi)
    c = qz.wootters_concurrence(rho)
    assert c == pytest.approx(qz.free_concurrence(0.8, 0.6, 1.0, qz.Branch.PLUS), abs=1e-8)


def test_csv_deterministic():
    a = qz.zeno_sweep_csv(0.8, n_max=20)
    b = qz.zeno_sweep_csv(0.8, n_max=20)
    assert a == b
    assert a.splitlines()[0] == "N,C_N_minus,C_N_plus"
