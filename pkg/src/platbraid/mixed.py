"""The mixed braid group B_{g,n}.

A mixed word has ``g`` fixed strands (the handles) and ``n`` moving strands.
Letters are ``("s", i, sign)`` for the crossing sigma_i of moving strands
``i, i+1`` and ``("a", r, sign)`` for the loop generator alpha_r, the first
moving strand looping around fixed strand ``r``.

Embedding into B_{g+n} sends alpha_r to the band word

    s_g s_{g-1} ... s_{r+1} s_r^2 S_{r+1} ... S_g

so the loop passes behind fixed strands ``r+1 .. g`` and encircles fixed
strand ``r`` with two positive crossings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import braid as bc
from .braid import BraidWord

SIGMA = "s"
ALPHA = "a"

FAMILIES = ("far", "braid", "alpha_far", "alpha_twist", "alpha_conj")


@dataclass(frozen=True)
class MixedBraidWord:
    handle_count: int
    moving_count: int
    letters: tuple = field(default=())

    def __post_init__(self):
        g, n = self.handle_count, self.moving_count
        if g < 0 or n < 1:
            raise ValueError("need g >= 0 and n >= 1")
        letters = tuple((kind, int(i), int(s)) for kind, i, s in self.letters)
        for kind, i, s in letters:
            if s not in (1, -1):
                raise ValueError(f"bad sign {s}")
            if kind == SIGMA:
                if not 1 <= i <= n - 1:
                    raise ValueError(f"sigma index {i} out of range for n={n}")
            elif kind == ALPHA:
                if not 1 <= i <= g:
                    raise ValueError(f"alpha index {i} out of range for g={g}")
            else:
                raise ValueError(f"unknown letter kind {kind!r}")
        object.__setattr__(self, "letters", letters)

    @property
    def g(self) -> int:
        return self.handle_count

    @property
    def n(self) -> int:
        return self.moving_count

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "MixedBraidWord") -> "MixedBraidWord":
        return compose(self, other)

    def inverse(self) -> "MixedBraidWord":
        return MixedBraidWord(self.g, self.n, tuple((k, i, -s) for k, i, s in reversed(self.letters)))

    def with_moving_count(self, n: int) -> "MixedBraidWord":
        return MixedBraidWord(self.g, n, self.letters)

    def __str__(self) -> str:
        return format_mixed(self)


def tokens(letters: Iterable) -> str:
    out = []
    for kind, i, s in letters:
        ch = kind if s > 0 else kind.upper()
        out.append(f"{ch}{i}")
    return " ".join(out)


def parse_tokens(text: str) -> tuple:
    letters = []
    for tok in text.split():
        head, num = tok[:1], tok[1:]
        if head not in ("s", "S", "a", "A") or not num.isdigit():
            raise ValueError(f"bad token {tok!r}")
        letters.append((head.lower(), int(num), 1 if head.islower() else -1))
    return tuple(letters)


def mixed(g: int, n: int, text: str = "") -> MixedBraidWord:
    return MixedBraidWord(g, n, parse_tokens(text))


def format_mixed(word: MixedBraidWord) -> str:
    return f"mixed g={word.g} n={word.n}\n{tokens(word.letters)}".rstrip() + "\n"


def reduce(word: MixedBraidWord) -> MixedBraidWord:
    out: list = []
    for kind, i, s in word.letters:
        if out and out[-1] == (kind, i, -s):
            out.pop()
        else:
            out.append((kind, i, s))
    return MixedBraidWord(word.g, word.n, tuple(out))


def compose(a: MixedBraidWord, b: MixedBraidWord) -> MixedBraidWord:
    if (a.g, a.n) != (b.g, b.n):
        raise ValueError(f"shape mismatch: {(a.g, a.n)} vs {(b.g, b.n)}")
    return reduce(MixedBraidWord(a.g, a.n, a.letters + b.letters))


def product(g: int, n: int, parts: Iterable[MixedBraidWord]) -> MixedBraidWord:
    letters: tuple = ()
    for p in parts:
        if (p.g, p.n) != (g, n):
            raise ValueError("shape mismatch in product")
        letters += p.letters
    return reduce(MixedBraidWord(g, n, letters))


def band_letters(g: int, r: int, s: int) -> list:
    """Artin letters of alpha_r^s inside B_{g+n}."""
    down = [(j, 1) for j in range(g, r, -1)]
    up = [(j, -1) for j in range(r + 1, g + 1)]
    return down + [(r, s), (r, s)] + up


def embed(word: MixedBraidWord) -> BraidWord:
    g = word.g
    letters = []
    for kind, i, s in word.letters:
        if kind == SIGMA:
            letters.append((g + i, s))
        else:
            letters.extend(band_letters(g, i, s))
    return bc.reduce(BraidWord(g + word.n, tuple(letters)))


def mixed_words_equal(a: MixedBraidWord, b: MixedBraidWord, cap: int | None = None) -> bool:
    if (a.g, a.n) != (b.g, b.n):
        raise ValueError("shape mismatch")
    if alpha_exponent_vector(a) != alpha_exponent_vector(b):
        return False
    return bc.words_equal(embed(a), embed(b), cap)


def alpha_exponent_vector(word: MixedBraidWord) -> tuple:
    vec = [0] * word.g
    for kind, i, s in word.letters:
        if kind == ALPHA:
            vec[i - 1] += s
    return tuple(vec)


@dataclass(frozen=True)
class RelationInstance:
    left: MixedBraidWord
    right: MixedBraidWord
    family: str
    indices: tuple

    @property
    def key(self) -> str:
        return f"{self.family}:" + ",".join(map(str, self.indices))


def relation_instances(g: int, n: int) -> list:
    rel = []

    def add(family, indices, left, right):
        rel.append(RelationInstance(mixed(g, n, left), mixed(g, n, right), family, indices))

    for k in range(1, n):
        for j in range(k + 2, n):
            add("far", (k, j), f"s{k} s{j}", f"s{j} s{k}")
    for k in range(1, n - 1):
        add("braid", (k,), f"s{k} s{k+1} s{k}", f"s{k+1} s{k} s{k+1}")
    for r in range(1, g + 1):
        for k in range(2, n):
            add("alpha_far", (r, k), f"a{r} s{k}", f"s{k} a{r}")
    if n >= 2:
        for r in range(1, g + 1):
            add("alpha_twist", (r,), f"a{r} s1 a{r} s1", f"s1 a{r} s1 a{r}")
        for r in range(1, g + 1):
            for s in range(1, r):
                add("alpha_conj", (r, s), f"a{r} s1 a{s} S1", f"s1 a{s} S1 a{r}")
    return rel


def loop_word(g: int, n: int, k: int, r: int, e: int) -> MixedBraidWord:
    """Moving strand ``k`` loops once around fixed strand ``r``.

    The strand travels left in front of moving strands ``1 .. k-1``, then
    performs alpha_r^e, then returns.
    """
    there = [(SIGMA, j, -1) for j in range(k - 1, 0, -1)]
    back = [(SIGMA, j, 1) for j in range(1, k)]
    return MixedBraidWord(g, n, tuple(there + [(ALPHA, r, e)] + back))


def from_artin(word: BraidWord, g: int) -> MixedBraidWord:
    """Rewrite an algebraic braid of B_{g+n} as a word in sigma_i, alpha_r.

    The fixed strands must start and end at positions ``1 .. g`` and never
    cross one another.  Intermediate layouts are measured against a
    reference motion in which moving strands pass behind every fixed strand;
    a moving strand passing in front of fixed strand ``r`` therefore
    contributes a loop around ``r``.
    """
    n = word.strand_count - g
    if n < 1:
        raise ValueError("no moving strands")
    fixed = [p <= g for p in range(1, word.strand_count + 1)]
    fixed_id = [p if p <= g else 0 for p in range(1, word.strand_count + 1)]
    out: list = []
    for pos, (j, s) in enumerate(word.letters):
        lf, rf = fixed[j - 1], fixed[j]
        if lf and rf:
            raise ValueError(f"letter {pos} crosses two fixed strands")
        if not lf and not rf:
            k = sum(1 for f in fixed[: j - 1] if not f) + 1
            out.append((SIGMA, k, s))
            continue
        if lf:
            # fixed strand on the left; the moving strand moves left and is
            # in front exactly when the right strand is over, i.e. s = -1
            k = sum(1 for f in fixed[:j] if not f) + 1
            r = fixed_id[j - 1]
            if s < 0:
                out.extend(loop_word(g, n, k, r, -1).letters)
        else:
            k = sum(1 for f in fixed[: j - 1] if not f) + 1
            r = fixed_id[j]
            if s > 0:
                out.extend(loop_word(g, n, k, r, 1).letters)
        fixed[j - 1], fixed[j] = fixed[j], fixed[j - 1]
        fixed_id[j - 1], fixed_id[j] = fixed_id[j], fixed_id[j - 1]
    if fixed_id[:g] != list(range(1, g + 1)):
        raise ValueError("fixed strands do not end at positions 1..g")
    return reduce(MixedBraidWord(g, n, tuple(out)))
