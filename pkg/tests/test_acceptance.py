"""Acceptance criteria, one test per criterion (criterion 5 split in three).

A summary line per criterion is printed at the end of the run.
"""

import random
import time

import pytest

from platbraid import braid as bc
from platbraid import hilden as hd
from platbraid import mixed as mx
from platbraid.braid import BraidWord
from platbraid.corpus import fig6_plats
from platbraid.equivalence import (Budget, MoveSpec, apply_move, decide_equivalence, random_equivalent,
                                   stk_via_stn, verify_witness)
from platbraid.morse import full_pipeline, part_to_algebraic, random_morse
from platbraid.plat import PlatPresentation, closure_components, invariants, plat

from gen import random_mixed, random_plat
from oracles import morse_tracer, pairing_components

ORACLE_SECONDS = 60.0
EQUIVALENT_SECONDS = 10.0
DISTINGUISHED_SECONDS = 1.0


def _artin_rewrite(rng, word):
    """Insert or substitute one defining relation, or a cancelling pair."""
    m = word.strand_count
    letters = list(word.letters)
    pos = rng.randint(0, len(letters))
    choice = rng.random()
    if choice < 0.4:
        lhs, rhs = rng.choice(bc.artin_relations(m))
        letters[pos:pos] = list(lhs.letters) + list(rhs.inverse().letters)
    elif choice < 0.8:
        for lhs, rhs in rng.sample(bc.artin_relations(m), len(bc.artin_relations(m))):
            src, dst = (lhs, rhs) if rng.random() < 0.5 else (rhs, lhs)
            k = len(src.letters)
            hits = [p for p in range(len(letters) - k + 1) if tuple(letters[p:p + k]) == src.letters]
            if hits:
                p = rng.choice(hits)
                letters[p:p + k] = list(dst.letters)
                break
        else:
            lhs, rhs = rng.choice(bc.artin_relations(m))
            letters[pos:pos] = list(lhs.letters) + list(rhs.inverse().letters)
    else:
        i, s = rng.randint(1, m - 1), rng.choice((1, -1))
        letters[pos:pos] = [(i, s), (i, -s)]
    return BraidWord(m, tuple(letters))


def test_criterion_1_oracle_soundness():
    start = time.monotonic()
    for m in range(2, 9):
        for lhs, rhs in bc.artin_relations(m):
            w = BraidWord(m, lhs.letters + rhs.inverse().letters)
            assert bc.artin_action(w).is_identity(), (m, bc.format_braid(w))
    rng = random.Random(1)
    pairs = 0
    while pairs < 1000:
        m = rng.randint(3, 8)
        base = BraidWord(m, tuple((rng.randint(1, m - 1), rng.choice((1, -1)))
                                  for _ in range(rng.randint(0, 30))))
        other = base
        for _ in range(rng.randint(1, 3)):
            other = _artin_rewrite(rng, other)
        if len(other.letters) > 40:
            continue
        assert bc.words_equal(base, other)
        pairs += 1
    elapsed = time.monotonic() - start
    print(f"criterion 1: oracle checks took {elapsed:.1f}s")
    assert elapsed < ORACLE_SECONDS


def test_criterion_2_mixed_relations():
    count = 0
    for g in range(0, 4):
        for n in range(1, 5):
            for rel in mx.relation_instances(g, n):
                assert mx.mixed_words_equal(rel.left, rel.right), rel.key
                count += 1
    print(f"criterion 2: {count} relation instances hold")
    assert count > 0


def test_criterion_3_fixed_subbraid():
    rng = random.Random(3)
    for _ in range(500):
        g, n = rng.randint(1, 3), rng.randint(1, 4)
        w = random_mixed(rng, g, n, rng.randint(0, 30))
        assert bc.is_trivial(bc.delete_strands(mx.embed(w), set(range(1, g + 1))))


def test_criterion_4_hilden_invariance():
    rng = random.Random(4)
    for trial in range(500):
        p = random_plat(rng, max_g=3, strands=(2, 4, 6), max_len=12)
        k = hd.hilden_sample(p.g, p.word.n, rng.randint(0, 10), trial)
        base = invariants(p)
        assert invariants(PlatPresentation(k * p.word)) == base
        assert invariants(PlatPresentation(p.word * k)) == base


def test_criterion_5_lambda_rho():
    for m in range(2, 5):
        target = BraidWord(2 * m, ((2, 1), (1, 1), (1, 1), (2, 1)))
        assert bc.words_equal(hd.lambda1(m), target)
        assert bc.words_equal(hd.rho(1, 2, m), target)


def _displayed_conjugator(j, g, m):
    letters = []
    for k in range(j - 1, 0, -1):
        letters += [("s", 2 * k, 1), ("s", 2 * k - 1, 1), ("s", 2 * k + 1, 1), ("s", 2 * k, 1)]
    return mx.MixedBraidWord(g, 2 * m, tuple(letters))


def test_criterion_5_tau_ladder():
    for g in (1, 2):
        for m in (1, 2, 3):
            for i in range(1, g + 1):
                core = mx.mixed(g, 2 * m, f"a{i} s1 a{i} s1")
                for j in range(1, m + 1):
                    c = _displayed_conjugator(j, g, m)
                    assert mx.mixed_words_equal(hd.tau(i, j, g, m), mx.product(g, 2 * m, [c, core, c.inverse()]))


def test_criterion_5_omega_tau():
    results = []
    for m in (1, 2):
        for j in range(1, m + 1):
            r = hd.verify_omega_tau_identity(1, j, 2, m)
            print(f"criterion 5: omega/tau g=2 m={m} j={j}: holds={r.holds}; {r.message}")
            for line in r.transcript:
                print("    " + line)
            results.append(r.holds)
    assert any(results), "exact identity holds at no offset; see the decisions ledger"


def test_criterion_6_stabilization():
    rng = random.Random(6)
    group_outcomes = set()
    for _ in range(200):
        p = random_plat(rng, max_g=2, strands=(2, 4, 6), max_len=10)
        base = invariants(p)
        assert invariants(PlatPresentation(apply_move(p.word, MoveSpec("st_n")))) == base
        for k in range(1, p.word.n // 2 + 1):
            assert invariants(PlatPresentation(apply_move(p.word, MoveSpec("st_k", k)))) == base
            report = stk_via_stn(p.word, k)
            assert report.bundle_equal
            group_outcomes.add(report.group_equal)
    sample = stk_via_stn(mx.mixed(1, 4, "a1 s2 S3"), 1)
    print("criterion 6: stk_via_stn transcript")
    for line in sample.transcript:
        print("    " + line)
    # recorded fact: the mu-ladder recipe equals st_k as a group element
    assert group_outcomes == {True}


def test_criterion_7_equivalent_pairs():
    rng = random.Random(7)
    worst = 0.0
    for trial in range(100):
        p = random_plat(rng, max_g=2, strands=(2, 4), max_len=6)
        q, _ = random_equivalent(p, 6, trial)
        start = time.monotonic()
        verdict = decide_equivalence(p, q, Budget())
        elapsed = time.monotonic() - start
        worst = max(worst, elapsed)
        assert verdict.status == "equivalent", (trial, verdict.message)
        assert verify_witness(p, q, verdict)
        assert elapsed < EQUIVALENT_SECONDS
    print(f"criterion 7: slowest equivalent pair {worst:.2f}s")


def test_criterion_7_distinguished_pairs():
    rng = random.Random(70)
    found = 0
    worst = 0.0
    while found < 100:
        a = random_plat(rng, max_g=2, strands=(2, 4, 6), max_len=10)
        b = PlatPresentation(random_plat(rng, max_g=a.g, strands=(2, 4, 6), max_len=10).word)
        if b.g != a.g or invariants(a) == invariants(b):
            continue
        start = time.monotonic()
        verdict = decide_equivalence(a, b)
        elapsed = time.monotonic() - start
        worst = max(worst, elapsed)
        assert verdict.status == "distinguished"
        assert elapsed < DISTINGUISHED_SECONDS
        found += 1
    print(f"criterion 7: slowest distinguished pair {worst:.3f}s")


@pytest.mark.parametrize("policy", ["over", "under"])
def test_criterion_8_pipeline(policy):
    for seed in range(200):
        d = random_morse(seed % 4, 12, seed)
        assert len(d.events) <= 12
        assert invariants(full_pipeline(d, policy)) == morse_tracer(d), seed


def test_criterion_9_label_sensitivity():
    a, b = fig6_plats()
    ba, bb = invariants(part_to_algebraic(a)), invariants(part_to_algebraic(b))
    print(f"criterion 9: {ba}  vs  {bb}")
    assert ba != bb


def _oracle_components(p):
    perm = bc.permutation(mx.embed(p.word))
    g = p.g
    return pairing_components(p.word.n, tuple(perm(g + t) - g for t in range(1, p.word.n + 1)))


def test_criterion_10_classics():
    trefoil = plat(mx.mixed(0, 4, "s2 s2 s2"))
    hopf = plat(mx.mixed(0, 4, "s2 s2"))
    assert len(closure_components(trefoil)) == _oracle_components(trefoil) == 1
    assert len(closure_components(hopf)) == _oracle_components(hopf) == 2
    for n in range(1, 7):
        ident = plat(mx.mixed(0, 2 * n))
        assert len(closure_components(ident)) == _oracle_components(ident) == n
