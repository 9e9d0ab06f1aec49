import numpy as np
import pytest

import unisample as us


def test_universality_verdicts():
    assert us.is_universal(us.IndexSet(8, [0, 1, 3, 4, 6]))
    verdict = us.is_universal(us.IndexSet(8, [0, 1, 4, 5]))
    assert not verdict.universal
    assert verdict.witness == (2, 2, 0)
    with pytest.raises(ValueError):
        us.is_universal(us.IndexSet(12, [0, 1]))


def test_maximal_and_minimal():
    s = us.IndexSet(32, [0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 12, 14, 15])
    r = us.maximal_universal(s)
    assert r.size == 7
    assert r.levels == [2, 1, 0]
    assert r.example.indices == [0, 1, 2, 3, 4, 6, 7]

    m = us.minimal_universal(us.IndexSet(8, [0, 4]))
    assert m.size == 5
    assert us.is_universal(m.example)

    built = us.universal_subset_of_size(us.IndexSet(16, list(range(16))), 11)
    assert len(built.example) == 11 and us.is_universal(built.example)
    with pytest.raises(us.Infeasible):
        us.universal_subset_of_size(us.IndexSet(8, [0, 1, 4, 5]), 3)
    with pytest.raises(us.NotUniversal):
        us.decompose(us.IndexSet(8, [0, 1, 4, 5]))


def test_counting_returns_exact_integers():
    assert us.count_universal(4, us.PrimePowerModulus(2, 3)) == 16
    assert us.count_universal(8, us.PrimePowerModulus(2, 4)) == 256
    big = us.count_universal(512, us.PrimePowerModulus(2, 10))
    assert big == 2**512
    assert us.count_by_brute_force(7, us.PrimePowerModulus(3, 2)) == 27
    assert us.bracelet_count(12, 4) == 29
    curve = us.entropy_curve(2, 8, 9)
    assert len(curve) == 9 and curve[0][1] == 0.0


def test_rank_oracle_agrees_with_criterion():
    for mask in range(1 << 8):
        s = us.IndexSet(8, [i for i in range(8) if mask >> i & 1])
        assert us.brute_force_universal(s) == us.is_universal(s).universal


def test_interpolation_round_trip():
    rng = np.random.default_rng(1)
    support = us.IndexSet(16, [1, 4, 5, 11])
    spectrum = np.zeros(16, complex)
    spectrum[support.indices] = rng.normal(size=4) + 1j * rng.normal(size=4)
    f = np.fft.ifft(spectrum)
    rows = us.universal_subset_of_size(us.IndexSet(16, list(range(16))), 4).example
    signal, ill, rank = us.interpolate(list(f[rows.indices]), rows, support)
    assert np.allclose(signal, f, atol=1e-12)
    assert not ill and rank.full_rank
    assert np.allclose(us.dft(f), spectrum, atol=1e-12)

    with pytest.raises(us.SingularSystem):
        us.interpolate([1, 2], us.IndexSet(4, [0, 2]), us.IndexSet(4, [0, 2]))

    report = us.condition_report(us.IndexSet(64, list(range(8))), us.IndexSet(64, list(range(8))))
    assert report.condition_number >= report.lower_bound > 100


def test_uncertainty_and_sumsets():
    delta = np.zeros(8)
    delta[0] = 1
    report = us.verify_uncertainty(delta)
    assert report.all_pass()
    assert len(report.support) == 1 and len(report.spectrum_support) == 8

    cd = us.cauchy_davenport_check(us.IndexSet(8, [0, 1]), us.IndexSet(8, [0, 4]))
    assert cd.sum.indices == [0, 1, 4, 5]
    assert cd.theorem_applies and cd.theorem_pass
    assert us.sumset(us.IndexSet(16, [0, 2]), us.IndexSet(16, [0, 2, 4])).indices == [0, 2, 4, 6]


def test_random_experiment_is_reproducible():
    mod = us.PrimePowerModulus(3, 5)
    d = us.largest_admissible_d(243, 230, 0.5)
    a = us.random_maximal_experiment(mod, 230, d, 0.5, 200, seed=5)
    b = us.random_maximal_experiment(mod, 230, d, 0.5, 200, seed=5, threads=2)
    assert a.successes == b.successes
    assert a.passed
