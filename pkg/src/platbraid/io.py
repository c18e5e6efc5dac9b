"""Text formats for braids, mixed words, geometric plats and Morse diagrams.

Every file starts with a header line; ``#`` starts a comment::

    braid m=3            Artin word, tokens s1 S2 ...
    mixed g=2 n=4        mixed word, tokens s1 S1 a2 A1 ...
    plat g=1 n=2 fixed=2 geometric plat: Artin word on g+n strands
    morse g=1            one event per line: cup 2 / cap 2 / x 1 +

Plat files may carry ``top: o u`` and ``bottom: u u`` label lines.
"""

from __future__ import annotations

import re

from .braid import BraidWord
from .mixed import MixedBraidWord, parse_tokens, tokens
from .morse import Cap, Cross, Cup, GeometricPlat, MixedMorseDiagram
from .plat import ClosureLabels, OVER, PlatPresentation


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


_HEADER = re.compile(r"^(braid|mixed|plat|morse)((?:\s+\w+=[\w,]*)*)\s*$")


def _lines(text: str) -> list:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((no, body))
    return out


def _fields(no: int, rest: str, need: tuple, optional: tuple = ()) -> dict:
    found = {}
    for part in rest.split():
        key, _, value = part.partition("=")
        if key not in need + optional:
            raise ParseError(no, f"unknown header field {key!r}")
        found[key] = value
    for key in need:
        if key not in found:
            raise ParseError(no, f"header needs {key}=")
    return found


def _int(no: int, value: str, name: str) -> int:
    if not re.fullmatch(r"\d+", value):
        raise ParseError(no, f"{name} must be a nonnegative integer, got {value!r}")
    return int(value)


def _artin_tokens(no: int, body: str) -> list:
    out = []
    for tok in body.split():
        if not re.fullmatch(r"[sS]\d+", tok):
            raise ParseError(no, f"bad token {tok!r}")
        out.append((int(tok[1:]), 1 if tok[0] == "s" else -1))
    return out


def _labels(no: int, body: str) -> tuple:
    labs = body.split()
    for lab in labs:
        if lab not in ("o", "u"):
            raise ParseError(no, f"bad label {lab!r}")
    return tuple(labs)


def parse(text: str):
    """Parse any supported file into a BraidWord, PlatPresentation, GeometricPlat or diagram."""
    lines = _lines(text)
    if not lines:
        raise ParseError(1, "empty input")
    no, head = lines[0]
    match = _HEADER.match(head)
    if not match:
        raise ParseError(no, f"unrecognized header {head!r}")
    kind, rest = match.group(1), match.group(2)
    body = lines[1:]
    if kind == "braid":
        f = _fields(no, rest, ("m",))
        letters = [x for n, ln in body for x in _artin_tokens(n, ln)]
        return _build(no, lambda: BraidWord(_int(no, f["m"], "m"), tuple(letters)))
    if kind == "mixed":
        f = _fields(no, rest, ("g", "n"))
        letters = []
        for n, ln in body:
            if ln.startswith(("top:", "bottom:")):
                _labels(n, ln.split(":", 1)[1])  # labels are irrelevant for algebraic plats
                continue
            try:
                letters.extend(parse_tokens(ln))
            except ValueError as exc:
                raise ParseError(n, str(exc)) from None
        g, n2 = _int(no, f["g"], "g"), _int(no, f["n"], "n")
        word = _build(no, lambda: MixedBraidWord(g, n2, tuple(letters)))
        return _build(no, lambda: PlatPresentation(word)) if n2 % 2 == 0 else word
    if kind == "plat":
        return _parse_plat(no, rest, body)
    return _parse_morse(no, rest, body)


def _build(no: int, make):
    try:
        return make()
    except ValueError as exc:
        raise ParseError(no, str(exc)) from None


def _parse_plat(no: int, rest: str, body: list) -> GeometricPlat:
    f = _fields(no, rest, ("g", "n"), ("fixed",))
    g, n2 = _int(no, f["g"], "g"), _int(no, f["n"], "n")
    if "fixed" in f and f["fixed"]:
        fixed = tuple(_int(no, x, "fixed") for x in f["fixed"].split(","))
    else:
        fixed = tuple(range(1, g + 1))
    letters, top, bottom = [], None, None
    for n, ln in body:
        if ln.startswith("top:"):
            top = _labels(n, ln[4:])
        elif ln.startswith("bottom:"):
            bottom = _labels(n, ln[7:])
        else:
            letters.extend(_artin_tokens(n, ln))
    arcs = n2 // 2
    top = top if top is not None else (OVER,) * arcs
    bottom = bottom if bottom is not None else (OVER,) * arcs
    return _build(no, lambda: GeometricPlat(g, BraidWord(g + n2, tuple(letters)), fixed,
                                            ClosureLabels(top, bottom)))


def _parse_morse(no: int, rest: str, body: list) -> MixedMorseDiagram:
    f = _fields(no, rest, ("g",))
    events = []
    for n, ln in body:
        parts = ln.split()
        if parts[0] in ("cup", "cap") and len(parts) == 2:
            pos = _int(n, parts[1], "position")
            events.append(Cup(pos) if parts[0] == "cup" else Cap(pos))
        elif parts[0] == "x" and len(parts) == 3 and parts[2] in "+-":
            events.append(Cross(_int(n, parts[1], "position"), 1 if parts[2] == "+" else -1))
        else:
            raise ParseError(n, f"bad event {ln!r}")
    return MixedMorseDiagram(_int(no, f["g"], "g"), tuple(events))


# ---------------------------------------------------------------------------
# printing


def _wrap(toks: str, width: int = 24) -> str:
    items = toks.split()
    rows = [" ".join(items[k:k + width]) for k in range(0, len(items), width)]
    return "".join(r + "\n" for r in rows)


def format_braid(word: BraidWord) -> str:
    body = " ".join(("s" if s > 0 else "S") + str(i) for i, s in word.letters)
    return f"braid m={word.strand_count}\n" + _wrap(body)


def format_mixed(word) -> str:
    if isinstance(word, PlatPresentation):
        word = word.word
    return f"mixed g={word.g} n={word.n}\n" + _wrap(tokens(word.letters))


def format_geometric(p: GeometricPlat) -> str:
    n2 = p.word.strand_count - p.g
    fixed = ",".join(map(str, p.fixed_top))
    body = " ".join(("s" if s > 0 else "S") + str(i) for i, s in p.word.letters)
    return (f"plat g={p.g} n={n2} fixed={fixed}\n" + _wrap(body)
            + "top: " + " ".join(p.labels.top) + "\n"
            + "bottom: " + " ".join(p.labels.bottom) + "\n")


def format_morse(d: MixedMorseDiagram) -> str:
    out = [f"morse g={d.g}"]
    for ev in d.events:
        if isinstance(ev, Cup):
            out.append(f"cup {ev.position}")
        elif isinstance(ev, Cap):
            out.append(f"cap {ev.position}")
        else:
            out.append(f"x {ev.position} {'+' if ev.sign > 0 else '-'}")
    return "\n".join(out) + "\n"


def format_any(obj) -> str:
    if isinstance(obj, BraidWord):
        return format_braid(obj)
    if isinstance(obj, (MixedBraidWord, PlatPresentation)):
        return format_mixed(obj)
    if isinstance(obj, GeometricPlat):
        return format_geometric(obj)
    if isinstance(obj, MixedMorseDiagram):
        return format_morse(obj)
    raise TypeError(f"cannot format {type(obj).__name__}")
