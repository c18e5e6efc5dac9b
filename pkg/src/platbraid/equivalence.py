"""Plat equivalence moves, stabilization and a bounded double-coset search."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import braid as bc
from . import hilden as hd
from . import mixed as mx
from .mixed import SIGMA, MixedBraidWord
from .plat import PlatPresentation, format_bundle, invariants

H_KINDS = ("h_sigma", "h_lambda", "h_mu", "h_tau")
KINDS = H_KINDS + ("st_n", "st_n_inverse", "st_k", "rel", "free")


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class MoveSpec:
    kind: str
    index: int | None = None
    side: str | None = None
    inverse: bool = False
    family: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise MoveError(f"unknown move kind {self.kind!r}")
        if self.kind in H_KINDS and self.side not in ("left", "right"):
            raise MoveError(f"{self.kind} needs side left or right")
        if self.kind in ("h_mu", "h_tau", "st_k", "rel", "free") and self.index is None:
            raise MoveError(f"{self.kind} needs an index")
        if self.kind == "rel" and self.family not in mx.FAMILIES:
            raise MoveError(f"unknown relation family {self.family!r}")

    def __str__(self) -> str:
        if self.kind in H_KINDS:
            head = self.kind if self.index is None else f"{self.kind} {self.index}"
            return f"{head} {self.side}" + (" inv" if self.inverse else "")
        if self.kind == "st_k":
            return f"st_k {self.index}"
        if self.kind == "rel":
            return f"rel {self.family} {self.index}"
        if self.kind == "free":
            return f"free {self.index}"
        return self.kind


def parse_move(line: str) -> MoveSpec:
    parts = line.split()
    if not parts:
        raise MoveError("empty move line")
    kind, args = parts[0], parts[1:]
    try:
        if kind in ("h_sigma", "h_lambda"):
            return MoveSpec(kind, side=args[0], inverse=args[1:] == ["inv"])
        if kind in ("h_mu", "h_tau"):
            return MoveSpec(kind, int(args[0]), side=args[1], inverse=args[2:] == ["inv"])
        if kind in ("st_n", "st_n_inverse"):
            return MoveSpec(kind)
        if kind == "st_k":
            return MoveSpec(kind, int(args[0]))
        if kind == "rel":
            return MoveSpec(kind, int(args[1]), family=args[0])
        if kind == "free":
            return MoveSpec(kind, int(args[0]))
    except (IndexError, ValueError) as exc:
        raise MoveError(f"malformed move line {line!r}") from exc
    raise MoveError(f"unknown move kind {kind!r}")


@dataclass(frozen=True)
class MoveScript:
    moves: tuple = ()

    def __str__(self) -> str:
        return "".join(f"{m}\n" for m in self.moves)

    @classmethod
    def parse(cls, text: str) -> "MoveScript":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        return cls(tuple(parse_move(ln) for ln in lines if ln))

    def replay(self, word: MixedBraidWord) -> MixedBraidWord:
        for move in self.moves:
            word = apply_move(word, move)
        return word


def _raw(word: MixedBraidWord, letters) -> MixedBraidWord:
    return MixedBraidWord(word.g, word.n, tuple(letters))


def h_generator(kind: str, g: int, n: int, index: int | None = None) -> MixedBraidWord:
    m = n // 2
    if kind == "h_sigma":
        return hd.generator_by_name("sigma1", g, m)
    if kind == "h_lambda":
        if m < 2:
            raise MoveError("h_lambda needs at least four moving strands")
        return hd.generator_by_name("lambda1", g, m)
    if kind == "h_mu":
        if not 1 <= index <= m - 1:
            raise MoveError(f"mu index {index} out of range 1..{m - 1}")
        return hd.generator_by_name(f"mu{index}", g, m)
    if not 1 <= index <= g:
        raise MoveError(f"tau handle index {index} out of range 1..{g}")
    return hd.tau(index, 1, g, m)


def _stabilize(word: MixedBraidWord) -> MixedBraidWord:
    n = word.n
    return MixedBraidWord(word.g, n + 2, word.letters + ((SIGMA, n, 1),))


def st_k_letters(k: int, n2: int) -> tuple:
    """sigma_{2k}^-1 ... sigma_{2n-1}^-1 sigma_{2n} sigma_{2n-1} ... sigma_{2k}."""
    down = tuple((SIGMA, i, -1) for i in range(2 * k, n2))
    up = tuple((SIGMA, i, 1) for i in range(n2 - 1, 2 * k - 1, -1))
    return down + ((SIGMA, n2, 1),) + up


def destabilize(word: MixedBraidWord, cap: int | None = None) -> MixedBraidWord:
    """Inverse of st_n, verified through the oracle."""
    g, n = word.g, word.n
    if n < 4 or n % 2:
        raise MoveError("st_n_inverse needs an even moving count of at least 4")
    cand = MixedBraidWord(g, n, word.letters + ((SIGMA, n - 2, -1),))
    emb = mx.embed(cand)
    perm = bc.permutation(emb)
    m = emb.strand_count
    if perm(m - 1) != m - 1 or perm(m) != m:
        raise MoveError("word does not end in sigma_2n: last strands are permuted")
    keep = range(1, m - 1)
    core = mx.from_artin(bc.delete_strands(emb, keep), g)
    lifted = MixedBraidWord(g, n, core.letters)
    try:
        ok = mx.mixed_words_equal(lifted, cand, cap)
    except bc.BudgetExhausted as exc:
        raise MoveError(f"destabilization check exhausted its budget: {exc}") from exc
    if not ok:
        raise MoveError("word does not end in sigma_2n up to braid equality")
    return core


def find_relation(word: MixedBraidWord, family: str, position: int):
    """First instance of ``family`` with a side matching ``word`` at ``position``."""
    letters = word.letters
    for inst in mx.relation_instances(word.g, word.n):
        if inst.family != family:
            continue
        for src, dst in ((inst.left, inst.right), (inst.right, inst.left)):
            k = len(src.letters)
            if letters[position:position + k] == src.letters:
                return src, dst
    return None


def apply_move(word: MixedBraidWord, move: MoveSpec) -> MixedBraidWord:
    if move.kind in H_KINDS:
        if word.n % 2:
            raise MoveError("h-moves act on plat words with an even moving count")
        gen = h_generator(move.kind, word.g, word.n, move.index)
        if move.inverse:
            gen = gen.inverse()
        letters = gen.letters + word.letters if move.side == "left" else word.letters + gen.letters
        return _raw(word, letters)
    if move.kind == "st_n":
        if word.n % 2:
            raise MoveError("st_n needs an even moving count")
        return _stabilize(word)
    if move.kind == "st_n_inverse":
        return destabilize(word)
    if move.kind == "st_k":
        n2 = word.n
        if word.n % 2 or not 1 <= move.index <= n2 // 2:
            raise MoveError(f"st_k index {move.index} out of range")
        return MixedBraidWord(word.g, n2 + 2, word.letters + st_k_letters(move.index, n2))
    if move.kind == "rel":
        found = find_relation(word, move.family, move.index)
        if found is None:
            raise MoveError(f"no {move.family} relation matches at position {move.index}")
        src, dst = found
        p = move.index
        return _raw(word, word.letters[:p] + dst.letters + word.letters[p + len(src.letters):])
    p = move.index
    letters = word.letters
    if not (0 <= p < len(letters) - 1) or letters[p + 1] != (letters[p][0], letters[p][1], -letters[p][2]):
        raise MoveError(f"no cancelling pair at position {p}")
    return _raw(word, letters[:p] + letters[p + 2:])


# ---------------------------------------------------------------------------
# st_k through st_n


@dataclass
class StkReport:
    word: MixedBraidWord
    reference: MixedBraidWord
    group_equal: bool
    bundle_equal: bool
    transcript: list = field(default_factory=list)


def _mu_ladder_right(g: int, n2: int, k: int) -> MixedBraidWord:
    """mu_k^-1 mu_{k+1}^-1 ... mu_{n-1}^-1: on the right it walks bottom pair k to pair n."""
    m = n2 // 2
    parts = [hd.generator_by_name(f"mu{i}", g, m).inverse() for i in range(k, m)]
    return mx.product(g, n2, parts) if parts else MixedBraidWord(g, n2, ())


def stk_via_stn(word: MixedBraidWord, k: int) -> StkReport:
    """Carry pair k to the far right with mu moves, stabilize there, carry it back."""
    g, n2 = word.g, word.n
    if n2 % 2 or not 1 <= k <= n2 // 2:
        raise MoveError(f"k={k} out of range for {n2} moving strands")
    lines = []
    ladder = _mu_ladder_right(g, n2, k)
    lines.append(f"ladder = {mx.tokens(ladder.letters) or '(empty)'}")
    moved = _stabilize(_raw(word, word.letters + ladder.letters))
    back = ladder.inverse().with_moving_count(n2 + 2)
    result = _raw(moved, moved.letters + back.letters)
    reference = apply_move(word, MoveSpec("st_k", k))
    lines.append(f"recipe = {mx.tokens(result.letters)}")
    lines.append(f"st_k   = {mx.tokens(reference.letters)}")
    group_equal = mx.mixed_words_equal(result, reference)
    lines.append(f"oracle: recipe == st_k as braids: {group_equal}")
    bundle_equal = invariants(PlatPresentation(result)) == invariants(PlatPresentation(reference))
    lines.append(f"bundles equal: {bundle_equal}")
    return StkReport(result, reference, group_equal, bundle_equal, lines)


# ---------------------------------------------------------------------------
# random equivalent plats


def _candidate_moves(word: MixedBraidWord, max_moving: int) -> list:
    g, n2 = word.g, word.n
    m = n2 // 2
    cands = []
    for side in ("left", "right"):
        for inv in (False, True):
            cands.append((4, MoveSpec("h_sigma", side=side, inverse=inv)))
            if m >= 2:
                cands.append((4, MoveSpec("h_lambda", side=side, inverse=inv)))
            for i in range(1, m):
                cands.append((4, MoveSpec("h_mu", i, side, inv)))
            for j in range(1, g + 1):
                cands.append((4, MoveSpec("h_tau", j, side, inv)))
    for p in range(len(word.letters)):
        for fam in mx.FAMILIES:
            if find_relation(word, fam, p) is not None:
                cands.append((3, MoveSpec("rel", p, family=fam)))
        if p + 1 < len(word.letters):
            a, b = word.letters[p], word.letters[p + 1]
            if b == (a[0], a[1], -a[2]):
                cands.append((6, MoveSpec("free", p)))
    if n2 + 2 <= max_moving:
        cands.append((2, MoveSpec("st_n")))
    if n2 >= 4 and word.letters and word.letters[-1] == (SIGMA, n2 - 2, 1):
        cands.append((12, MoveSpec("st_n_inverse")))
    return cands


def random_equivalent(plat: PlatPresentation, move_count: int, seed,
                      max_moving: int | None = None) -> tuple:
    """Apply ``move_count`` random plat moves; returns (plat, MoveScript)."""
    rng = random.Random(seed)
    word = plat.word
    limit = word.n + 2 if max_moving is None else max_moving
    done = []
    while len(done) < move_count:
        cands = _candidate_moves(word, limit)
        weights = [w for w, _ in cands]
        move = rng.choices([mv for _, mv in cands], weights)[0]
        try:
            new = apply_move(word, move)
        except MoveError:
            continue  # an oracle-checked destabilization can fail; pick again
        word = new
        done.append(move)
    return PlatPresentation(word), MoveScript(tuple(done))


# ---------------------------------------------------------------------------
# double-coset search

_PRIME = 33_554_393  # below 2^25, so products of residues summed over 16 terms fit int64
_T = 1_234_567


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 100_000
    max_word_length: int = 200
    extra_strands: int = 8
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_word_length < 1 or self.extra_strands < 0:
            raise ValueError("budget values must be positive")


@dataclass
class Witness:
    """Two replayable scripts taking ``a`` and ``b`` to one braid.

    ``left`` and ``right`` are the Hilden factors k1, k2 with
    k1 . a' . k2 = b' when every stabilization in the scripts comes first
    (plain padding); otherwise they are None and the scripts are the proof.
    """

    script_a: MoveScript
    script_b: MoveScript
    left: MixedBraidWord | None = None
    right: MixedBraidWord | None = None

    @property
    def stabilizations(self) -> tuple:
        return tuple(sum(m.kind == "st_n" for m in s.moves) for s in (self.script_a, self.script_b))


@dataclass
class EquivalenceVerdict:
    status: str
    witness: Witness | None = None
    bundles: tuple | None = None
    nodes: int = 0
    message: str = ""

    def __str__(self) -> str:
        return format_verdict(self)


def _burau_letter(m: int, i: int, s: int) -> np.ndarray:
    mat = np.eye(m, dtype=np.int64)
    t, p = _T, _PRIME
    if s > 0:
        mat[i - 1, i - 1], mat[i - 1, i], mat[i, i - 1], mat[i, i] = (1 - t) % p, t, 1, 0
    else:
        ti = pow(t, -1, p)
        mat[i - 1, i - 1], mat[i - 1, i], mat[i, i - 1], mat[i, i] = 0, 1, ti, (1 - ti) % p
    return mat


def burau_mod_p(word: bc.BraidWord) -> np.ndarray:
    """Unreduced Burau matrix at a fixed t, modulo a prime.

    The Burau matrix is the Fox Jacobian of the free-group action,
    abelianized; it is a homomorphism, so one multiplication per move
    updates a search key.  Keys only propose matches; the exact oracle
    confirms them.
    """
    m = word.strand_count
    out = np.eye(m, dtype=np.int64)
    for i, s in word.letters:
        out = (out @ _burau_letter(m, i, s)) % _PRIME
    return out


def stabilize_to(word: MixedBraidWord, n2: int) -> MixedBraidWord:
    while word.n < n2:
        word = _stabilize(word)
    return word


def _h_moves(g: int, n2: int) -> list:
    """(move, inverse move, row-side matrix, letter count) for each h-move."""
    out = []
    m = n2 // 2
    kinds = [("h_sigma", None)] + ([("h_lambda", None)] if m >= 2 else [])
    kinds += [("h_mu", i) for i in range(1, m)] + [("h_tau", j) for j in range(1, g + 1)]
    for kind, idx in kinds:
        base = h_generator(kind, g, n2, idx)
        for inv in (False, True):
            w = base.inverse() if inv else base
            mat = burau_mod_p(mx.embed(w))
            for side in ("left", "right"):
                mv = MoveSpec(kind, idx, side, inv)
                back = MoveSpec(kind, idx, side, not inv)
                out.append((mv, back, side, mat, len(w.letters)))
    return out


def _stab_matrix(mat: np.ndarray, g: int, n2: int) -> np.ndarray:
    m = mat.shape[0]
    big = np.eye(m + 2, dtype=np.int64)
    big[:m, :m] = mat
    return (big @ _burau_letter(m + 2, g + n2, 1)) % _PRIME


def _destabilizations(word: MixedBraidWord) -> list:
    """The word and its successive oracle-verified destabilizations, with scripts."""
    out = [(word, ())]
    script: tuple = ()
    while word.n >= 4 and word.letters and word.letters[-1] == (SIGMA, word.n - 2, 1):
        try:
            word = destabilize(word)
        except MoveError:
            break
        script += (MoveSpec("st_n_inverse"),)
        out.append((word, script))
    return out


def _search(a: MixedBraidWord, b: MixedBraidWord, high: int, budget: Budget, deadline):
    """Bidirectional BFS over h-moves and st_n from both plats."""
    g = a.g
    tables: dict = {}
    seen = [{}, {}]  # key -> (level, script, length)
    frontier = [[], []]
    used = 0
    for side, word in ((0, a), (1, b)):
        for base, script in _destabilizations(word):
            mat, level, length = burau_mod_p(mx.embed(base)), base.n, len(base.letters)
            while True:
                key = (level, mat.tobytes())
                if key not in seen[side]:
                    seen[side][key] = (level, script, length)
                    frontier[side].append((mat, level, script, length))
                    used += 1
                if level + 2 > high:
                    break
                mat, level = _stab_matrix(mat, g, level), level + 2
                script, length = script + (MoveSpec("st_n"),), length + 1

    def confirm(key):
        _, sa, _ = seen[0][key]
        _, sb, _ = seen[1][key]
        wa, wb = MoveScript(sa).replay(a), MoveScript(sb).replay(b)
        if wa.n == wb.n and mx.mixed_words_equal(wa, wb):
            return Witness(MoveScript(sa), MoveScript(sb))
        return None

    for key in list(seen[0]):
        if key in seen[1]:
            hit = confirm(key)
            if hit:
                return hit, used
    while frontier[0] or frontier[1]:
        side = 0 if frontier[0] and (not frontier[1] or len(frontier[0]) <= len(frontier[1])) else 1
        nxt = []
        for mat, level, script, length in frontier[side]:
            last = script[-1] if script else None
            steps = []
            if level not in tables:
                tables[level] = _h_moves(g, level)
            for mv, back, where, gm, k in tables[level]:
                if back == last or length + k > budget.max_word_length:
                    continue
                new = (gm @ mat) % _PRIME if where == "left" else (mat @ gm) % _PRIME
                steps.append((new, level, mv, length + k))
            if level + 2 <= high:
                steps.append((_stab_matrix(mat, g, level), level + 2, MoveSpec("st_n"), length + 1))
            for new, lev, mv, new_len in steps:
                key = (lev, new.tobytes())
                if key in seen[side]:
                    continue
                used += 1
                if used > budget.max_nodes or (deadline and time.monotonic() > deadline):
                    return None, used
                seen[side][key] = (lev, script + (mv,), new_len)
                nxt.append((new, lev, script + (mv,), new_len))
                if key in seen[1 - side]:
                    hit = confirm(key)
                    if hit:
                        return hit, used
        frontier[side] = nxt
    return None, used


def _coset_factors(word: MixedBraidWord, script: MoveScript):
    """Left and right Hilden products of a script whose st_n moves all come first."""
    moves = list(script.moves)
    if any(m.kind == "st_n_inverse" for m in moves):
        return None
    k = 0
    while k < len(moves) and moves[k].kind == "st_n":
        k += 1
    if any(m.kind == "st_n" for m in moves[k:]):
        return None
    n2 = word.n + 2 * k
    left: tuple = ()
    right: tuple = ()
    for mv in moves[k:]:
        gen = h_generator(mv.kind, word.g, n2, mv.index)
        gen = gen.inverse() if mv.inverse else gen
        if mv.side == "left":
            left = gen.letters + left
        else:
            right = right + gen.letters
    return MixedBraidWord(word.g, n2, left), MixedBraidWord(word.g, n2, right)


def decide_equivalence(a: PlatPresentation, b: PlatPresentation, budget: Budget | None = None) -> EquivalenceVerdict:
    budget = budget or Budget()
    if a.g != b.g:
        raise ValueError("plats live in handlebodies of different genus")
    ba, bb = invariants(a), invariants(b)
    if ba != bb:
        return EquivalenceVerdict("distinguished", None, (ba, bb), 0, "invariant bundles differ")
    deadline = time.monotonic() + budget.max_seconds if budget.max_seconds else None
    high = min(a.word.n, b.word.n) + budget.extra_strands
    if max(a.word.n, b.word.n) > high:
        return EquivalenceVerdict("unknown", None, (ba, bb), 0, "strand budget below the larger plat")
    witness, used = _search(a.word, b.word, high, budget, deadline)
    if witness is None:
        return EquivalenceVerdict("unknown", None, (ba, bb), used, "search budget exhausted")
    fa = _coset_factors(a.word, witness.script_a)
    fb = _coset_factors(b.word, witness.script_b)
    if fa and fb and fa[0].n == fb[0].n:
        # b' = lb^-1 la a' ra rb^-1
        witness.left = mx.product(a.g, fa[0].n, [fb[0].inverse(), fa[0]])
        witness.right = mx.product(a.g, fa[0].n, [fa[1], fb[1].inverse()])
    return EquivalenceVerdict("equivalent", witness, (ba, bb), used, "oracle-confirmed match")


def verify_witness(a: PlatPresentation, b: PlatPresentation, verdict: EquivalenceVerdict) -> bool:
    """Replay both scripts and compare through the exact oracle."""
    w = verdict.witness
    if verdict.status != "equivalent" or w is None:
        return False
    if any(m.kind not in H_KINDS + ("st_n", "st_n_inverse") for s in (w.script_a, w.script_b) for m in s.moves):
        return False
    wa, wb = w.script_a.replay(a.word), w.script_b.replay(b.word)
    if wa.n != wb.n or not mx.mixed_words_equal(wa, wb):
        return False
    if w.left is not None:
        sa, sb = w.stabilizations
        pa, pb = stabilize_to(a.word, a.word.n + 2 * sa), stabilize_to(b.word, b.word.n + 2 * sb)
        if not (hd.preserves_arcs(w.left, a.g) and hd.preserves_arcs(w.right, a.g)):
            return False
        joined = MixedBraidWord(a.g, pa.n, w.left.letters + pa.letters + w.right.letters)
        if pa.n != pb.n or not mx.mixed_words_equal(joined, pb):
            return False
    return True


def format_verdict(v: EquivalenceVerdict) -> str:
    lines = [f"status: {v.status}"]
    if v.bundles:
        lines.append(f"bundle a: {format_bundle(v.bundles[0])}")
        lines.append(f"bundle b: {format_bundle(v.bundles[1])}")
    if v.witness:
        w = v.witness
        for label, script in (("a", w.script_a), ("b", w.script_b)):
            moves = [str(m) for m in script.moves]
            lines.append(f"script {label}: " + ("; ".join(moves) or "(empty)"))
        if w.left is not None:
            lines.append("k1: " + (mx.tokens(w.left.letters) or "(empty)"))
            lines.append("k2: " + (mx.tokens(w.right.letters) or "(empty)"))
    lines.append(f"nodes: {v.nodes}")
    if v.message:
        lines.append(f"note: {v.message}")
    return "\n".join(lines) + "\n"
