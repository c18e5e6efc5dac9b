"""Artin braid words and the free-group word-problem oracle.

A braid word on ``m`` strands is a tuple of letters ``(i, s)`` with
``1 <= i <= m - 1`` and ``s`` in ``{+1, -1}``.  Words are read top to
bottom; ``(i, +1)`` is the strand in position ``i`` crossing over the strand
in position ``i + 1``.

Equality in B_m is decided exactly through Artin's faithful action on the
free group F_m = <x_1, ..., x_m>.  The letter ``(i, +1)`` acts by

    x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i,

and a word acts by applying its letters in reading order, so the action of
``a * b`` is "the action of ``a``, then the action of ``b``".
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_ORACLE_CAP = 1_000_000

# A free word is a tuple of nonzero ints: +j is x_j, -j is x_j^-1.
FreeWord = tuple


class BudgetExhausted(RuntimeError):
    """Raised when free-group images outgrow the configured length cap."""


def oracle_cap() -> int:
    value = os.environ.get("PLATBRAID_ORACLE_CAP")
    if value is None:
        return DEFAULT_ORACLE_CAP
    cap = int(value)
    if cap <= 0:
        raise ValueError("PLATBRAID_ORACLE_CAP must be positive")
    return cap


# ---------------------------------------------------------------------------
# free words


def free_reduce(letters: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def free_mul(u: FreeWord, v: FreeWord) -> FreeWord:
    """Product of two reduced free words, reduced at the junction only."""
    k = 0
    n = min(len(u), len(v))
    while k < n and u[len(u) - 1 - k] == -v[k]:
        k += 1
    if k == 0:
        return u + v
    return u[: len(u) - k] + v[k:]


def free_inverse(u: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(u))


def exponent_sums(u: FreeWord, rank: int) -> list[int]:
    sums = [0] * (rank + 1)
    for x in u:
        sums[abs(x)] += 1 if x > 0 else -1
    return sums[1:]


# ---------------------------------------------------------------------------
# automorphisms


@dataclass(frozen=True)
class FreeGroupAutomorphism:
    """An endomorphism of F_rank given by the images of the generators."""

    rank: int
    images: tuple

    @classmethod
    def identity(cls, rank: int) -> "FreeGroupAutomorphism":
        return cls(rank, tuple((j,) for j in range(1, rank + 1)))

    def apply(self, word: FreeWord, cap: int | None = None) -> FreeWord:
        """Image of a free word: substitute and reduce."""
        out: list[int] = []
        images = self.images
        limit = oracle_cap() if cap is None else cap
        for x in word:
            piece = images[x - 1] if x > 0 else free_inverse(images[-x - 1])
            for y in piece:
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
            if len(out) > limit:
                raise BudgetExhausted(f"free word exceeded {limit} letters")
        return tuple(out)

    def then(self, other: "FreeGroupAutomorphism", cap: int | None = None) -> "FreeGroupAutomorphism":
        """The map ``x -> other(self(x))``."""
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        limit = oracle_cap() if cap is None else cap
        images = []
        total = 0
        for img in self.images:
            new = other.apply(img, limit)
            total += len(new)
            if total > limit:
                raise BudgetExhausted(f"images exceeded {limit} letters in total")
            images.append(new)
        return FreeGroupAutomorphism(self.rank, tuple(images))

    def total_length(self) -> int:
        return sum(len(img) for img in self.images)

    def is_identity(self) -> bool:
        return all(img == (j + 1,) for j, img in enumerate(self.images))

    def induced_permutation(self) -> "Permutation":
        """Read strand tracing off the abelianized images.

        The image of x_j is a conjugate of a single generator x_k; the map
        j -> k is the permutation of the braid.
        """
        images = []
        for img in self.images:
            sums = exponent_sums(img, self.rank)
            support = [k + 1 for k, e in enumerate(sums) if e != 0]
            if len(support) != 1 or abs(sums[support[0] - 1]) != 1:
                raise ValueError("automorphism is not induced by a braid")
            images.append(support[0])
        return Permutation(tuple(images))


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """``images[t - 1]`` is the bottom position of the strand starting at top position ``t``."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, t: int) -> int:
        return self.images[t - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for t, b in enumerate(self.images, start=1):
            inv[b - 1] = t
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(b == t for t, b in enumerate(self.images, start=1))


# ---------------------------------------------------------------------------
# braid words


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple = field(default=())

    def __post_init__(self):
        if self.strand_count < 1:
            raise ValueError("strand_count must be positive")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.strand_count - 1:
                raise ValueError(f"generator index {i} out of range for m={self.strand_count}")
            if s not in (1, -1):
                raise ValueError(f"bad sign {s}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, tuple((i, -s) for i, s in reversed(self.letters)))

    def __str__(self) -> str:
        return format_braid(self)


def letters_from_string(text: str) -> tuple:
    """Parse ``s1 S2 s1`` into letters.  Used by tests and constructors."""
    out = []
    for tok in text.split():
        if tok[0] not in "sS" or not tok[1:].isdigit():
            raise ValueError(f"bad braid token {tok!r}")
        out.append((int(tok[1:]), 1 if tok[0] == "s" else -1))
    return tuple(out)


def braid(m: int, text: str = "") -> BraidWord:
    return BraidWord(m, letters_from_string(text))


def reduce(word: BraidWord) -> BraidWord:
    out: list = []
    for i, s in word.letters:
        if out and out[-1] == (i, -s):
            out.pop()
        else:
            out.append((i, s))
    return BraidWord(word.strand_count, tuple(out))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strand_count != b.strand_count:
        raise ValueError(f"strand-count mismatch: {a.strand_count} vs {b.strand_count}")
    return reduce(BraidWord(a.strand_count, a.letters + b.letters))


def permutation(word: BraidWord) -> Permutation:
    m = word.strand_count
    at = list(range(1, m + 1))  # at[p-1] = top position of the strand now at p
    for i, _ in word.letters:
        at[i - 1], at[i] = at[i], at[i - 1]
    images = [0] * m
    for p, t in enumerate(at, start=1):
        images[t - 1] = p
    return Permutation(tuple(images))


def _push_letter_left(images: list, i: int, s: int, cap: int) -> int:
    """Prepend letter (i, s) to the word whose action is ``images``.

    For the action of ``L w`` we need ``phi_w(phi_L(x_j))``; only the images
    of x_i and x_{i+1} change, so each letter costs O(|image|).
    """
    a, b = images[i - 1], images[i]
    if s > 0:
        new_a = free_mul(free_mul(a, b), free_inverse(a))
        new_b = a
    else:
        new_a = b
        new_b = free_mul(free_mul(free_inverse(b), a), b)
    images[i - 1], images[i] = new_a, new_b
    return len(new_a) + len(new_b) - len(a) - len(b)


def artin_action(word: BraidWord, cap: int | None = None) -> FreeGroupAutomorphism:
    limit = oracle_cap() if cap is None else cap
    m = word.strand_count
    images = [(j,) for j in range(1, m + 1)]
    total = m
    for i, s in reversed(word.letters):
        total += _push_letter_left(images, i, s, limit)
        if total > limit:
            raise BudgetExhausted(f"free-group images exceeded {limit} letters")
    return FreeGroupAutomorphism(m, tuple(images))


def letter_action(m: int, i: int, s: int) -> FreeGroupAutomorphism:
    return artin_action(BraidWord(m, ((i, s),)))


def words_equal(a: BraidWord, b: BraidWord, cap: int | None = None) -> bool:
    if a.strand_count != b.strand_count:
        raise ValueError("strand-count mismatch")
    if permutation(a) != permutation(b):
        return False
    return artin_action(a, cap).images == artin_action(b, cap).images


def is_trivial(word: BraidWord, cap: int | None = None) -> bool:
    return artin_action(reduce(word), cap).is_identity()


def delete_strands(word: BraidWord, keep: Iterable[int]) -> BraidWord:
    """Sub-braid on the strands starting at the given top positions."""
    keep = set(keep)
    m = word.strand_count
    if not keep or not keep <= set(range(1, m + 1)):
        raise ValueError("keep must be a nonempty subset of the top positions")
    at = list(range(1, m + 1))
    out = []
    for i, s in word.letters:
        left, right = at[i - 1], at[i]
        if left in keep and right in keep:
            rank = sum(1 for t in at[: i - 1] if t in keep) + 1
            out.append((rank, s))
        at[i - 1], at[i] = right, left
    return BraidWord(len(keep), tuple(out))


def format_braid(word: BraidWord) -> str:
    body = " ".join(("s" if s > 0 else "S") + str(i) for i, s in word.letters)
    return f"braid m={word.strand_count}\n{body}".rstrip() + "\n"


def artin_relations(m: int) -> list:
    """All defining relations of B_m as pairs of words."""
    rels = []
    for i in range(1, m - 1):
        rels.append((braid(m, f"s{i} s{i+1} s{i}"), braid(m, f"s{i+1} s{i} s{i+1}")))
    for i in range(1, m):
        for j in range(i + 2, m):
            rels.append((braid(m, f"s{i} s{j}"), braid(m, f"s{j} s{i}")))
    return rels


def power(m: int, i: int, e: int) -> BraidWord:
    s = 1 if e > 0 else -1
    return BraidWord(m, ((i, s),) * abs(e))


def concat(m: int, parts: Sequence[BraidWord]) -> BraidWord:
    letters: tuple = ()
    for p in parts:
        letters += p.letters
    return reduce(BraidWord(m, letters))
