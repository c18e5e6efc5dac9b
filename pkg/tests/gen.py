"""Random test inputs shared by several test modules."""

import random

from platbraid.mixed import ALPHA, SIGMA, MixedBraidWord
from platbraid.plat import PlatPresentation


def random_mixed(rng, g, n, length):
    letters = []
    for _ in range(length):
        if g and (n == 1 or rng.random() < 0.35):
            letters.append((ALPHA, rng.randint(1, g), rng.choice((1, -1))))
        elif n > 1:
            letters.append((SIGMA, rng.randint(1, n - 1), rng.choice((1, -1))))
    return MixedBraidWord(g, n, tuple(letters))


def random_plat(rng, max_g=2, strands=(2, 4), max_len=6):
    g = rng.randint(0, max_g)
    n2 = rng.choice(strands)
    return PlatPresentation(random_mixed(rng, g, n2, rng.randint(0, max_len)))


def rng(seed):
    return random.Random(seed)


def random_geometric_plat(rng, max_g=2, max_pairs=2, max_len=8):
    """GeometricPlat with fixed strands scattered among the moving ones."""
    from platbraid.braid import BraidWord
    from platbraid.morse import GeometricPlat
    from platbraid.plat import ClosureLabels

    g = rng.randint(0, max_g)
    n2 = 2 * rng.randint(1, max_pairs)
    m = g + n2
    fixed_top = tuple(sorted(rng.sample(range(1, m + 1), g)))
    fixed = [p in fixed_top for p in range(1, m + 1)]
    letters = []
    for _ in range(rng.randint(0, max_len)):
        sites = [i for i in range(1, m) if not (fixed[i - 1] and fixed[i])]
        i = rng.choice(sites)
        letters.append((i, rng.choice((1, -1))))
        fixed[i - 1], fixed[i] = fixed[i], fixed[i - 1]
    labels = ClosureLabels(tuple(rng.choice("ou") for _ in range(n2 // 2)),
                           tuple(rng.choice("ou") for _ in range(n2 // 2)))
    return GeometricPlat(g, BraidWord(m, tuple(letters)), fixed_top, labels)
