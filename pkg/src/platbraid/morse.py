"""Morse-event diagrams, with braiding into geometric plats and parting into algebraic ones.

A diagram in D_g x I is a list of events read top to bottom.  Positions
count every live strand left to right, fixed ones included; before the
first event the live strands are the g fixed strands.

* ``Cup(p)``: a local maximum, two new moving strands at ``p, p+1``.
* ``Cap(p)``: a local minimum joining the moving strands at ``p, p+1``.
* ``Cross(p, s)``: the strands at ``p, p+1`` swap; ``s = +1`` when the left
  one passes over.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Union

from . import braid as bc
from . import mixed as mx
from .braid import BraidWord
from .plat import OVER, UNDER, ClosureLabels, PlatPresentation


@dataclass(frozen=True)
class Cup:
    position: int


@dataclass(frozen=True)
class Cap:
    position: int


@dataclass(frozen=True)
class Cross:
    position: int
    sign: int


Event = Union[Cup, Cap, Cross]


class MorseError(ValueError):
    def __init__(self, slice_index: int, reason: str):
        super().__init__(f"slice {slice_index}: {reason}")
        self.slice_index = slice_index
        self.reason = reason


@dataclass(frozen=True)
class MixedMorseDiagram:
    handle_count: int
    events: tuple = field(default=())

    def __post_init__(self):
        if self.handle_count < 0:
            raise ValueError("handle_count must be nonnegative")
        object.__setattr__(self, "events", tuple(self.events))

    @property
    def g(self) -> int:
        return self.handle_count

    @property
    def cup_count(self) -> int:
        return sum(isinstance(e, Cup) for e in self.events)


def _check(d: MixedMorseDiagram) -> None:
    live = [True] * d.g  # True marks a fixed strand
    for idx, ev in enumerate(d.events):
        w = len(live)
        if isinstance(ev, Cup):
            if not 1 <= ev.position <= w + 1:
                raise MorseError(idx, f"cup position {ev.position} outside 1..{w + 1}")
            live[ev.position - 1:ev.position - 1] = [False, False]
        elif isinstance(ev, Cap):
            p = ev.position
            if not 1 <= p <= w - 1:
                raise MorseError(idx, f"cap position {p} outside 1..{w - 1}")
            if live[p - 1] or live[p]:
                raise MorseError(idx, "cap would destroy a fixed strand")
            del live[p - 1:p + 1]
        elif isinstance(ev, Cross):
            p = ev.position
            if ev.sign not in (1, -1):
                raise MorseError(idx, f"bad crossing sign {ev.sign}")
            if not 1 <= p <= w - 1:
                raise MorseError(idx, f"crossing position {p} outside 1..{w - 1}")
            if live[p - 1] and live[p]:
                raise MorseError(idx, "crossing of two fixed strands")
            live[p - 1], live[p] = live[p], live[p - 1]
        else:
            raise MorseError(idx, f"unknown event {ev!r}")
    if len(live) != d.g:
        raise MorseError(len(d.events), f"{len(live) - d.g} moving strands never capped")


def validate_morse(d: MixedMorseDiagram) -> list:
    """Empty list when valid, else a one-item report naming the first bad slice."""
    try:
        _check(d)
    except MorseError as exc:
        return [str(exc)]
    return []


# ---------------------------------------------------------------------------
# geometric plats


@dataclass(frozen=True)
class GeometricPlat:
    """A braid on g + 2n strands with fixed strands at arbitrary positions.

    ``fixed_top`` lists the top positions of the fixed strands; moving top
    endpoints are paired consecutively (skipping fixed strands), likewise at
    the bottom.  Labels say whether each closing arc passes over or under
    the fixed strands lying between its endpoints.
    """

    g: int
    word: BraidWord
    fixed_top: tuple
    labels: ClosureLabels

    def __post_init__(self):
        fixed = tuple(sorted(self.fixed_top))
        object.__setattr__(self, "fixed_top", fixed)
        m = self.word.strand_count
        moving = m - self.g
        if len(fixed) != self.g or len(set(fixed)) != self.g or not all(1 <= p <= m for p in fixed):
            raise ValueError("fixed_top must list g distinct positions")
        if moving < 2 or moving % 2:
            raise ValueError("need a positive even number of moving strands")
        if len(self.labels.top) != moving // 2:
            raise ValueError("one label per closing arc")
        _fixed_layout(self.word, fixed)  # raises on fixed-fixed crossings
        if self.g and not bc.is_trivial(bc.delete_strands(self.word, fixed)):
            raise ValueError("fixed subbraid is not the identity")

    @property
    def bridges(self) -> int:
        return (self.word.strand_count - self.g) // 2

    @property
    def fixed_bottom(self) -> tuple:
        return _fixed_layout(self.word, self.fixed_top)

    kind = "geometric"


def _fixed_layout(word: BraidWord, fixed_top) -> tuple:
    fixed = [p in set(fixed_top) for p in range(1, word.strand_count + 1)]
    for pos, (i, _) in enumerate(word.letters):
        if fixed[i - 1] and fixed[i]:
            raise ValueError(f"letter {pos} crosses two fixed strands")
        fixed[i - 1], fixed[i] = fixed[i], fixed[i - 1]
    return tuple(p for p, f in enumerate(fixed, start=1) if f)


def _parting_letters(g: int, n2: int, fixed_target, labels) -> list:
    """Artin letters carrying the standard layout to ``fixed_target``.

    Reading down, the moving endpoints start right of all fixed strands and
    travel left one at a time into their slots.  The first endpoint of an
    arc passes in front of the fixed strands its arc straddles when the arc
    is labelled over; every other passage is behind the fixed strand.
    """
    m = g + n2
    target = set(fixed_target)
    slots = [p for p in range(1, m + 1) if p not in target]
    letters = []
    for k in range(n2):
        first = k % 2 == 0
        over = first and labels[k // 2] == OVER
        for j in range(g + k, slots[k] - 1, -1):
            # fixed strand at j, endpoint k at j + 1; after this endpoint is
            # home the strand sits at j + 1, straddled iff left of slot k + 1
            in_front = over and j <= slots[k + 1] - 2
            letters.append((j, -1 if in_front else 1))
    return letters


def part_to_algebraic(p: GeometricPlat) -> PlatPresentation:
    g = p.g
    n2 = p.word.strand_count - g
    top = _parting_letters(g, n2, p.fixed_top, p.labels.top)
    bottom = _parting_letters(g, n2, p.fixed_bottom, p.labels.bottom)
    whole = BraidWord(p.word.strand_count, tuple(top) + p.word.letters
                      + tuple((i, -s) for i, s in reversed(bottom)))
    return PlatPresentation(mx.from_artin(bc.reduce(whole), g))


# ---------------------------------------------------------------------------
# braiding: cups to the top, caps to the bottom


def _policy_sign(policy, origin: int) -> tuple:
    """(label, sign) used when threading the extremum from event ``origin``.

    The threaded pair moves left across one strand; passing in front means
    the right strand is over, which is a negative crossing.
    """
    label = policy[origin] if not isinstance(policy, str) else policy
    label = {"over": OVER, "under": UNDER}.get(label, label)
    if label not in (OVER, UNDER):
        raise ValueError(f"bad label policy entry {label!r}")
    return label, (-1 if label == OVER else 1)


def _lift_cups(events: list, policy) -> tuple:
    """Move every cup above all crossings and caps.

    ``events`` holds (event, origin) pairs.  Returns the cup block, a list of
    (position, origin) with no cup nested inside an earlier pair, and the
    remaining events in order.
    """
    block: list = []
    rest = list(events)
    while True:
        idx = next((k for k, (e, _) in enumerate(rest) if isinstance(e, Cup)), None)
        if idx is None:
            return block, rest
        p = rest[idx][0].position
        origin = rest[idx][1]
        _, t = _policy_sign(policy, origin)
        below: list = []
        for ev, og in reversed(rest[:idx]):
            if isinstance(ev, Cross):
                q = ev.position
                if p <= q:
                    below[:0] = [(Cross(q + 2, ev.sign), og)]
                elif p >= q + 2:
                    below[:0] = [(Cross(q, ev.sign), og)]
                else:
                    # the new pair sits between the crossed strands: start it
                    # right of both and carry it back across one of them
                    p = q + 2
                    below[:0] = [(Cross(q, ev.sign), og), (Cross(q + 1, t), origin),
                                 (Cross(q + 2, t), origin)]
            else:
                q = ev.position
                if p <= q:
                    below[:0] = [(Cap(q + 2), og)]
                else:
                    p += 2
                    below[:0] = [(Cap(q), og)]
        rest = below + rest[idx + 1:]
        # un-nest: a cup just inside an earlier pair is started to its right
        if _inside_pair(block, p):
            rest[:0] = [(Cross(p, t), origin), (Cross(p + 1, t), origin)]
            p += 1
        block.append((p, origin))


def _inside_pair(block: list, p: int) -> bool:
    """Whether a cup at ``p`` would split an existing adjacent pair."""
    partners = []
    for q, _ in block:
        partners = [x + 2 if x >= q else x for x in partners]
        partners.append(q)
    return (p - 1) in partners


def _layout_after_cups(g: int, block: list) -> list:
    live = [True] * g
    for p, _ in block:
        live[p - 1:p - 1] = [False, False]
    return live


def _mirror(events: list) -> list:
    out = []
    for ev, og in reversed(events):
        if isinstance(ev, Cross):
            out.append((Cross(ev.position, -ev.sign), og))
        elif isinstance(ev, Cap):
            out.append((Cup(ev.position), og))
        else:
            out.append((Cap(ev.position), og))
    return out


def _normalize_policy(policy, count: int):
    if isinstance(policy, str):
        return policy
    policy = list(policy)
    if len(policy) != count:
        raise ValueError(f"per-event policy needs {count} entries, got {len(policy)}")
    return policy


def braid_to_plat(d: MixedMorseDiagram, label_policy="over") -> GeometricPlat:
    _check(d)
    policy = _normalize_policy(label_policy, len(d.events))
    g = d.g
    if d.cup_count == 0:
        label = _policy_sign(policy, 0)[0] if isinstance(policy, str) else OVER
        word = BraidWord(g + 2, ())
        return GeometricPlat(g, word, tuple(range(1, g + 1)), ClosureLabels((label,), (label,)))
    tagged = [(e, k) for k, e in enumerate(d.events)]
    cups, rest = _lift_cups(tagged, policy)
    caps_m, middle_m = _lift_cups(_mirror(rest), policy)
    middle = _mirror(middle_m)
    assert all(isinstance(e, Cross) for e, _ in middle)
    top_live = _layout_after_cups(g, cups)
    m = len(top_live)
    word = BraidWord(m, tuple((e.position, e.sign) for e, _ in middle))
    fixed_top = tuple(p for p, f in enumerate(top_live, start=1) if f)
    top_labels = tuple(_policy_sign(policy, og)[0] for _, og in _pairs_left_to_right(cups))
    bottom_labels = tuple(_policy_sign(policy, og)[0] for _, og in _pairs_left_to_right(caps_m))
    return GeometricPlat(g, word, fixed_top, ClosureLabels(top_labels, bottom_labels))


def _pairs_left_to_right(block: list) -> list:
    """Cup block entries ordered by the final position of their pair."""
    placed: list = []  # (position, origin)
    for q, og in block:
        placed = [(x + 2 if x >= q else x, o) for x, o in placed]
        placed.append((q, og))
    return sorted(placed)


def full_pipeline(d: MixedMorseDiagram, label_policy="over") -> PlatPresentation:
    return part_to_algebraic(braid_to_plat(d, label_policy))


# ---------------------------------------------------------------------------
# random diagrams


def random_morse(g: int, max_events: int, seed, max_moving: int = 6) -> MixedMorseDiagram:
    """A random valid diagram with at most ``max_events`` events."""
    rng = random.Random(seed)
    while True:
        events: list = []
        live = [True] * g
        for _ in range(rng.randint(0, max_events)):
            moving = len(live) - g
            caps = [p for p in range(1, len(live)) if not live[p - 1] and not live[p]]
            crosses = [p for p in range(1, len(live)) if not (live[p - 1] and live[p])]
            choices = (["cup"] if moving < max_moving else []) + (["cap"] if caps else [])
            choices += ["cross"] * 3 if moving else []
            kind = rng.choice(choices)
            if kind == "cup":
                p = rng.randint(1, len(live) + 1)
                events.append(Cup(p))
                live[p - 1:p - 1] = [False, False]
            elif kind == "cap":
                p = rng.choice(caps)
                events.append(Cap(p))
                del live[p - 1:p + 1]
            else:
                p = rng.choice(crosses)
                events.append(Cross(p, rng.choice((1, -1))))
                live[p - 1], live[p] = live[p], live[p - 1]
        events += _close(live, rng)
        if len(events) <= max_events:
            d = MixedMorseDiagram(g, tuple(events))
            _check(d)
            return d


def _close(live: list, rng) -> list:
    """Events closing all moving strands: push them right of the fixed ones, cap."""
    events = []
    changed = True
    while changed:
        changed = False
        for p in range(1, len(live)):
            if not live[p - 1] and live[p]:
                events.append(Cross(p, rng.choice((1, -1))))
                live[p - 1], live[p] = live[p], live[p - 1]
                changed = True
    while len(live) > sum(live):
        p = len(live) - 1
        events.append(Cap(p))
        del live[p - 1:p + 1]
    return events
