"""Named example inputs with expected invariant bundles.

Corpus files are ordinary input files with extra comment lines::

    # name: trefoil
    # expect: components=1; classes=[()]
    # notes: free text
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import io
from .morse import GeometricPlat, MixedMorseDiagram, full_pipeline
from .plat import PlatInvariantBundle, invariants, parse_bundle


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    text: str
    expected: PlatInvariantBundle | None = None
    notes: str = ""

    @property
    def payload(self):
        return io.parse(self.text)

    def bundle(self) -> PlatInvariantBundle:
        return bundle_of(self.payload)

    def check(self) -> bool:
        return self.expected is None or self.bundle() == self.expected


def bundle_of(obj, label_policy="over") -> PlatInvariantBundle:
    if isinstance(obj, MixedMorseDiagram):
        return invariants(full_pipeline(obj, label_policy))
    return invariants(obj)


def parse_entry(text: str, default_name: str = "") -> CorpusEntry:
    name, expected, notes = default_name, None, []
    for raw in text.splitlines():
        line = raw.strip()
        if not line.startswith("#"):
            continue
        key, _, value = line[1:].strip().partition(":")
        if key == "name":
            name = value.strip()
        elif key == "expect":
            expected = parse_bundle(value.strip())
        elif key == "notes":
            notes.append(value.strip())
    entry = CorpusEntry(name, text, expected, " ".join(notes))
    entry.payload  # parse errors surface here
    return entry


def load_dir(path) -> list:
    return [parse_entry(p.read_text(), p.stem) for p in sorted(Path(path).glob("*.txt"))]


# Two labelings of one geometric plat: the first top arc straddles fixed
# strand 1, the second straddles fixed strand 2.
FIG6_WORD = "s3 s3 S4 S4"


def fig6_plats() -> tuple:
    """The same geometric mixed braid closed with two different top labels."""
    base = "plat g=2 n=4 fixed=2,5\n" + FIG6_WORD + "\nbottom: u u\n"
    a = io.parse(base + "top: o u\n")
    b = io.parse(base + "top: u u\n")
    assert isinstance(a, GeometricPlat) and isinstance(b, GeometricPlat)
    return a, b


BUILTIN = {
    "trefoil": ("mixed g=0 n=4\ns2 s2 s2\n", "components=1; classes=[()]"),
    "hopf": ("mixed g=0 n=4\ns2 s2\n", "components=2; classes=[(),()]"),
    "identity_g2": ("mixed g=2 n=4\n", "components=2; classes=[(0,0),(0,0)]"),
    "loop": ("mixed g=1 n=2\na1\n", "components=1; classes=[(1)]"),
    "loop_pair": ("mixed g=2 n=2\na1 A2\n", "components=1; classes=[(1,-1)]"),
    "handle_unknot": ("morse g=1\ncup 2\nx 1 +\nx 1 +\ncap 2\n", "components=1; classes=[(1)]"),
    "handle_and_split": ("morse g=1\ncup 2\nx 1 +\nx 1 +\ncap 2\ncup 1\ncap 1\n",
                         "components=2; classes=[(0),(1)]"),
    "split_unknot_g2": ("morse g=2\ncup 3\ncap 3\n", "components=1; classes=[(0,0)]"),
    "fig6_over": ("plat g=2 n=4 fixed=2,5\n" + FIG6_WORD + "\ntop: o u\nbottom: u u\n",
                  "components=2; classes=[(0,1),(1,0)]"),
    "fig6_under": ("plat g=2 n=4 fixed=2,5\n" + FIG6_WORD + "\ntop: u u\nbottom: u u\n",
                   "components=2; classes=[(0,0),(0,1)]"),
}


def builtin_entries() -> list:
    return [CorpusEntry(name, text, parse_bundle(exp)) for name, (text, exp) in BUILTIN.items()]
