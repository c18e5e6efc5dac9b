"""Plat closures of mixed braids and their winding-class invariants."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .mixed import ALPHA, SIGMA, MixedBraidWord

OVER, UNDER = "o", "u"


@dataclass(frozen=True)
class ClosureLabels:
    top: tuple
    bottom: tuple

    def __post_init__(self):
        top, bottom = tuple(self.top), tuple(self.bottom)
        if len(top) != len(bottom):
            raise ValueError("top and bottom label lists differ in length")
        for lab in top + bottom:
            if lab not in (OVER, UNDER):
                raise ValueError(f"label must be 'o' or 'u', got {lab!r}")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @classmethod
    def uniform(cls, n: int, label: str = OVER) -> "ClosureLabels":
        return cls((label,) * n, (label,) * n)


@dataclass(frozen=True)
class PlatPresentation:
    """An algebraic mixed plat: a word in B_{g,2n} closed by plat arcs."""

    word: MixedBraidWord

    def __post_init__(self):
        if self.word.n % 2:
            raise ValueError("plat needs an even number of moving strands; pad first")

    @property
    def g(self) -> int:
        return self.word.g

    @property
    def bridges(self) -> int:
        return self.word.n // 2

    kind = "algebraic"


@dataclass(frozen=True)
class PlatInvariantBundle:
    component_count: int
    winding_classes: tuple = field(default=())

    def __post_init__(self):
        classes = tuple(sorted(canonical_class(v) for v in self.winding_classes))
        if len(classes) != self.component_count:
            raise ValueError("one winding class per component")
        object.__setattr__(self, "winding_classes", classes)

    def __str__(self) -> str:
        return format_bundle(self)


def canonical_class(vec) -> tuple:
    vec = tuple(int(x) for x in vec)
    for x in vec:
        if x:
            return vec if x > 0 else tuple(-y for y in vec)
    return vec


def format_bundle(bundle: PlatInvariantBundle) -> str:
    classes = ",".join("(" + ",".join(map(str, v)) + ")" for v in bundle.winding_classes)
    return f"components={bundle.component_count}; classes=[{classes}]"


_BUNDLE = re.compile(r"^components=(\d+); classes=\[(.*)\]$")


def parse_bundle(text: str) -> PlatInvariantBundle:
    match = _BUNDLE.match(text.strip())
    if not match:
        raise ValueError(f"malformed bundle {text!r}")
    body = match.group(2)
    vecs = []
    for part in re.findall(r"\(([^()]*)\)", body):
        vecs.append(tuple(int(x) for x in part.split(",")) if part else ())
    return PlatInvariantBundle(int(match.group(1)), tuple(vecs))


def pad_to_even(word: MixedBraidWord) -> MixedBraidWord:
    if word.n % 2:
        return word.with_moving_count(word.n + 1)
    return word


def _strand_data(word: MixedBraidWord):
    """Bottom position and per-handle winding of each moving strand, by top position."""
    n, g = word.n, word.g
    at = list(range(1, n + 1))  # at[p-1] = top position of strand at moving position p
    wind = [[0] * g for _ in range(n)]
    for kind, i, s in word.letters:
        if kind == SIGMA:
            at[i - 1], at[i] = at[i], at[i - 1]
        else:
            wind[at[0] - 1][i - 1] += s
    bottom = [0] * n
    for p, t in enumerate(at, start=1):
        bottom[t - 1] = p
    return bottom, wind


def _partner(p: int) -> int:
    return p + 1 if p % 2 else p - 1


def _cycles(word: MixedBraidWord):
    """Components as lists of (top position, direction) strand traversals."""
    bottom, wind = _strand_data(word)
    top_of = {b: t for t, b in enumerate(bottom, start=1)}
    seen = set()
    cycles = []
    for start in range(1, word.n + 1):
        if start in seen:
            continue
        cycle = []
        t = start
        while t not in seen:
            # down strand t, bottom arc, up the partner strand, top arc
            seen.add(t)
            cycle.append((t, 1))
            b = _partner(bottom[t - 1])
            u = top_of[b]
            seen.add(u)
            cycle.append((u, -1))
            t = _partner(u)
        cycles.append(cycle)
    return cycles, wind


def _require_algebraic(plat):
    if not isinstance(plat, PlatPresentation):
        raise TypeError("closure_components needs an algebraic plat; part it first")


def closure_components(plat: PlatPresentation) -> list:
    """Partition of the moving strands (by top position) into link components."""
    _require_algebraic(plat)
    cycles, _ = _cycles(plat.word)
    return [sorted(t for t, _ in cyc) for cyc in cycles]


def invariants(plat) -> PlatInvariantBundle:
    if not isinstance(plat, PlatPresentation):
        from .morse import GeometricPlat, part_to_algebraic

        if isinstance(plat, GeometricPlat):
            plat = part_to_algebraic(plat)
        else:
            raise TypeError(f"cannot compute invariants of {type(plat).__name__}")
    cycles, wind = _cycles(plat.word)
    classes = []
    for cyc in cycles:
        vec = [0] * plat.g
        for t, d in cyc:
            for r in range(plat.g):
                vec[r] += d * wind[t - 1][r]
        classes.append(tuple(vec))
    return PlatInvariantBundle(len(cycles), tuple(classes))


def distinguish(a, b) -> str:
    if a.g != b.g:
        raise ValueError("plats live in handlebodies of different genus")
    return "distinguished" if invariants(a) != invariants(b) else "indistinguishable_by_bundle"


def plat(word: MixedBraidWord) -> PlatPresentation:
    return PlatPresentation(pad_to_even(word))
