import random

import pytest

from platbraid import braid as bc
from platbraid import hilden as hd
from platbraid import mixed as mx
from platbraid.braid import BraidWord, braid


def _pair_loop(i, j, g, m):
    """Pair j passes behind the earlier pairs, circles fixed strand i, and returns."""
    n = g + 2 * m
    go = []
    for k in range(j - 1, 0, -1):
        p = g + 2 * k - 1  # earlier pair sits at p, p+1; the travelling pair at p+2, p+3
        go += [(p + 1, 1), (p, 1), (p + 2, 1), (p + 1, 1)]
    core = list(mx.embed(mx.mixed(g, 2 * m, f"a{i} s1 a{i} s1")).letters)
    back = list(BraidWord(n, tuple(go)).inverse().letters)
    return BraidWord(n, tuple(go + core + back))


def test_lambda_is_rho_12():
    for m in (2, 3, 4):
        assert bc.words_equal(hd.rho(1, 2, m), braid(2 * m, "s2 s1 s1 s2"))
        assert bc.words_equal(hd.lambda1(m), hd.rho(1, 2, m))


def test_literal_case_assignment_differs():
    # read at face value the printed conditions give a different word for rho_{1,2}
    assert hd.rho_literal(2, 1, 3) == hd.rho(1, 2, 3)
    assert not bc.words_equal(hd.rho_literal(1, 2, 3), hd.lambda1(3))


@pytest.mark.parametrize("m", [2, 3])
def test_every_classical_generator_is_hilden(m):
    words = [hd.sigma_odd(i, m) for i in range(1, m + 1)]
    words += [hd.mu(i, m) for i in range(1, m)]
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i != j:
                words += [hd.rho(i, j, m), hd.omega(i, j, m)]
    for w in words:
        assert hd.preserves_arcs(w), bc.format_braid(w)


def test_non_members():
    assert not hd.preserves_arcs(braid(4, "s2"))
    assert not hd.preserves_arcs(mx.mixed(1, 2, "a1"))
    assert not hd.preserves_arcs(mx.mixed(1, 2, "a1 S1 a1 S1"))
    with pytest.raises(ValueError):
        hd.preserves_arcs(braid(3, "s1"))


def test_minimal_generators():
    assert len(hd.minimal_generators(3)) == 4
    with pytest.raises(ValueError):
        hd.minimal_generators(1)


@pytest.mark.parametrize("g", [1, 2])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_mixed_generators_are_hilden(g, m):
    for name, w in hd.mixed_generators(g, m):
        assert hd.preserves_arcs(w), name


@pytest.mark.parametrize("g", [1, 2])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_tau_ladder_matches_pair_loop(g, m):
    for i in range(1, g + 1):
        for j in range(1, m + 1):
            assert bc.words_equal(mx.embed(hd.tau(i, j, g, m)), _pair_loop(i, j, g, m)), (i, j)


def test_tau_ladder_wrong_direction_is_different():
    g, m = 1, 2
    c = hd.mu_ladder(2, g, m)
    core = hd.tau(1, 1, g, m)
    flipped = mx.product(g, 2 * m, [c.inverse(), core, c])
    assert not mx.mixed_words_equal(flipped, hd.tau(1, 2, g, m))


def test_tau_range():
    with pytest.raises(ValueError):
        hd.tau(2, 1, 1, 2)


def test_generator_names():
    assert hd.generator_by_name("tau1,2", 1, 2) == hd.tau(1, 2, 1, 2)
    assert hd.generator_by_name("mu1", 0, 2).letters == tuple(("s", i, s) for i, s in hd.mu(1, 2).letters)
    with pytest.raises(ValueError):
        hd.generator_by_name("zeta1", 0, 2)


def test_hilden_sample_members():
    for seed in range(20):
        w = hd.hilden_sample(2, 4, 5, seed)
        assert hd.preserves_arcs(w)
    assert hd.hilden_sample(1, 2, 3, 9) == hd.hilden_sample(1, 2, 3, 9)


def test_random_products_keep_membership():
    rng = random.Random(1)
    gens = [w for _, w in hd.mixed_generators(1, 2)]
    for _ in range(30):
        parts = [rng.choice(gens) for _ in range(4)]
        w = mx.product(1, 4, parts)
        assert hd.preserves_arcs(w)
        assert not hd.preserves_arcs(mx.compose(w, mx.mixed(1, 4, "s2")))


def test_omega_tau_report_first_pair():
    r = hd.verify_omega_tau_identity(1, 1, 2, 2)
    assert not r.holds
    assert r.twist == (-2, -2) and r.inverted
    assert any("== rhs" in line for line in r.transcript)


def test_omega_tau_report_second_pair():
    r = hd.verify_omega_tau_identity(1, 2, 2, 2)
    assert not r.holds and r.twist is None


def test_omega_second_pair_is_conjugate_of_first():
    g, m = 2, 2
    a = hd._renumbered_omega(1, 2, g, m)
    b = hd._renumbered_omega(1, 3, g, m)
    c = mx.mixed(g, 2 * m, "s2 s1 s3 s2")
    assert mx.mixed_words_equal(b, mx.product(g, 2 * m, [c.inverse(), a, c]))


def test_omega_tau_preconditions():
    assert "g even" in hd.verify_omega_tau_identity(1, 1, 1, 2).message
    assert "out of range" in hd.verify_omega_tau_identity(1, 3, 2, 2).message
