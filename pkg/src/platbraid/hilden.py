"""Classical and mixed Hilden generators.

Words are on 2m moving strands.  Classical generators (g = 0) are returned
as :class:`BraidWord`; mixed generators as :class:`MixedBraidWord`.

Besides the constructors there is an exact membership test,
:func:`preserves_arcs`: a braid lies in the Hilden subgroup exactly when
its free-group action preserves the normal subgroup generated by the
products ``x_{2i-1} x_{2i}`` of loops around paired endpoints.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from . import braid as bc
from . import mixed as mx
from .braid import BraidWord
from .mixed import MixedBraidWord

FAMILIES = ("sigma_odd", "mu", "rho", "omega", "lambda1", "tau")


@dataclass(frozen=True)
class HildenGeneratorSpec:
    family: str
    indices: tuple
    g: int
    strands: int  # 2m

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.strands % 2:
            raise ValueError("Hilden generators live on an even number of strands")

    @property
    def m(self) -> int:
        return self.strands // 2

    @property
    def name(self) -> str:
        if self.family == "sigma_odd":
            return f"sigma{self.indices[0]}"
        if self.family == "lambda1":
            return "lambda1"
        if self.family == "mu":
            return f"mu{self.indices[0]}"
        return f"{self.family}{self.indices[0]},{self.indices[1]}"


def _seq(spec: list) -> tuple:
    return tuple((abs(x), 1 if x > 0 else -1) for x in spec)


def _word(m: int, letters: list) -> BraidWord:
    return bc.reduce(BraidWord(2 * m, _seq(letters)))


def _check_pair(i: int, j: int, m: int):
    if not (1 <= i <= m and 1 <= j <= m):
        raise ValueError(f"indices ({i}, {j}) out of range for m={m}")
    if i == j:
        raise ValueError("i and j must differ")


def sigma_odd(i: int, m: int) -> BraidWord:
    if not 1 <= i <= m:
        raise ValueError("index out of range")
    return _word(m, [2 * i - 1])


def mu(i: int, m: int) -> BraidWord:
    if not 1 <= i <= m - 1:
        raise ValueError(f"mu index {i} out of range for m={m}")
    return _word(m, [2 * i, 2 * i - 1, 2 * i + 1, 2 * i])


def lambda1(m: int) -> BraidWord:
    if m < 2:
        raise ValueError("lambda1 needs m >= 2")
    return _word(m, [2, 1, 1, 2])


def _rho_far_first(big: int, small: int) -> list:
    # (s_{2j} s_{2j-1}) ... (s_{2i-2} s_{2i-3}) s_{2i-2} (s_{2i-3} s_{2i-2}) S_{2i-3}
    # (S_{2i-4} S_{2i-3}) ... (S_{2j-1} S_{2j}),   with i = big, j = small
    i, j = big, small
    out = []
    for t in range(2 * j - 1, 2 * i - 2):
        out += [t + 1, t]
    out += [2 * i - 2, 2 * i - 3, 2 * i - 2, -(2 * i - 3)]
    for t in range(2 * i - 4, 2 * j - 2, -1):
        out += [-t, -(t + 1)]
    return out


def _rho_near_first(small: int, big: int) -> list:
    # (S_{2j-2} S_{2j-1}) ... (S_{2i} S_{2i+1}) S_{2i} (S_{2i+1} S_{2i}) S_{2i+1}
    # (s_{2i+2} s_{2i+1}) ... (s_{2j-1} s_{2j-2}),   with i = small, j = big
    i, j = small, big
    out = []
    for t in range(2 * j - 2, 2 * i - 1, -1):
        out += [-t, -(t + 1)]
    out += [-(2 * i), -(2 * i + 1), -(2 * i), -(2 * i + 1)]
    for t in range(2 * i + 1, 2 * j - 1):
        out += [t + 1, t]
    return out


def _omega_far_first(big: int, small: int) -> list:
    # (s_{2j} s_{2j-1}) ... (s_{2i-2} s_{2i-3}) (s_{2i-1} s_{2i-2}) s_{2i-1}
    # (s_{2i-2} s_{2i-1}) (s_{2i-3} s_{2i-2}) S_{2i-3} (S_{2i-4} S_{2i-3}) ... (S_{2j-1} S_{2j})
    i, j = big, small
    out = []
    for t in range(2 * j - 1, 2 * i - 1):
        out += [t + 1, t]
    out += [2 * i - 1, 2 * i - 2, 2 * i - 1, 2 * i - 3, 2 * i - 2, -(2 * i - 3)]
    for t in range(2 * i - 4, 2 * j - 2, -1):
        out += [-t, -(t + 1)]
    return out


def _omega_near_first(small: int, big: int) -> list:
    # (S_{2j-2} S_{2j-1}) (S_{2j-3} S_{2j-2}) ... (S_{2i} S_{2i-1}) (S_{2i+1} S_{2i}) s_{2i-1}
    # (S_{2i} S_{2i+1}) (S_{2i-1} S_{2i}) S_{2i+1} (s_{2i+2} s_{2i+1}) ... (s_{2j-1} s_{2j-2})
    i, j = small, big
    out = []
    for t in range(2 * j - 2, 2 * i, -1):
        out += [-t, -(t + 1)]
    out += [-(2 * i), -(2 * i - 1), -(2 * i + 1), -(2 * i), 2 * i - 1,
            -(2 * i), -(2 * i + 1), -(2 * i - 1), -(2 * i), -(2 * i + 1)]
    for t in range(2 * i + 1, 2 * j - 1):
        out += [t + 1, t]
    return out


def rho(i: int, j: int, m: int) -> BraidWord:
    """rho_{ij}; ``rho(1, 2, m)`` is lambda_1 = s2 s1 s1 s2.

    The two displayed case formulas are used literally; the first one
    (whose outer ladder climbs from s_{2j}) serves the lower-indexed first
    subscript, which is what makes rho_{1,2} equal to lambda_1.
    """
    _check_pair(i, j, m)
    if i < j:
        return _word(m, _rho_far_first(j, i))
    return _word(m, _rho_near_first(j, i))


def omega(i: int, j: int, m: int) -> BraidWord:
    """omega_{ij}, case assignment as in :func:`rho`."""
    _check_pair(i, j, m)
    if i < j:
        return _word(m, _omega_far_first(j, i))
    return _word(m, _omega_near_first(j, i))


def rho_literal(i: int, j: int, m: int) -> BraidWord:
    """rho_{ij} with the printed case conditions taken at face value."""
    _check_pair(i, j, m)
    if j < i:
        return _word(m, _rho_far_first(i, j))
    return _word(m, _rho_near_first(i, j))


def omega_literal(i: int, j: int, m: int) -> BraidWord:
    _check_pair(i, j, m)
    if j < i:
        return _word(m, _omega_far_first(i, j))
    return _word(m, _omega_near_first(i, j))


def minimal_generators(m: int) -> list:
    if m < 2:
        raise ValueError("minimal generating set is stated for m >= 2")
    return [sigma_odd(1, m), lambda1(m)] + [mu(i, m) for i in range(1, m)]


# ---------------------------------------------------------------------------
# mixed generators


def _lift(word: BraidWord, g: int) -> MixedBraidWord:
    return MixedBraidWord(g, word.strand_count, tuple(("s", i, s) for i, s in word.letters))


def mu_ladder(j: int, g: int, m: int) -> MixedBraidWord:
    """mu_{j-1} mu_{j-2} ... mu_1: carries pair ``j`` to the first pair."""
    parts = [_lift(mu(k, m), g) for k in range(j - 1, 0, -1)]
    return mx.product(g, 2 * m, parts)


def tau(i: int, j: int, g: int, m: int) -> MixedBraidWord:
    """tau_{i,2j-1}: the pair of moving strands 2j-1, 2j travels around fixed strand i."""
    if not (1 <= i <= g and 1 <= j <= m):
        raise ValueError(f"tau indices ({i}, {j}) out of range for g={g}, m={m}")
    core = mx.mixed(g, 2 * m, f"a{i} s1 a{i} s1")
    if j == 1:
        return core
    c = mu_ladder(j, g, m)
    return mx.product(g, 2 * m, [c, core, c.inverse()])


def mixed_generators(g: int, m: int, all_taus: bool = True) -> list:
    """Named mixed Hilden generators of K_{g,2m}."""
    n = 2 * m
    gens = [("sigma1", _lift(sigma_odd(1, m), g))]
    if m >= 2:
        gens.append(("lambda1", _lift(lambda1(m), g)))
        gens += [(f"mu{i}", _lift(mu(i, m), g)) for i in range(1, m)]
    for i in range(1, g + 1):
        for j in range(1, (m if all_taus else 1) + 1):
            gens.append((f"tau{i},{j}", tau(i, j, g, m)))
    assert all(w.n == n for _, w in gens)
    return gens


_NAME = re.compile(r"^(sigma1|lambda1|mu(\d+)|(rho|omega|tau)(\d+),(\d+))$")


def generator_by_name(name: str, g: int, m: int):
    """Resolve a CLI generator name; classical words are lifted to B_{g,2m}."""
    match = _NAME.match(name)
    if not match:
        raise ValueError(f"unknown generator name {name!r}")
    if name == "sigma1":
        return _lift(sigma_odd(1, m), g)
    if name == "lambda1":
        return _lift(lambda1(m), g)
    if match.group(2):
        return _lift(mu(int(match.group(2)), m), g)
    fam, a, b = match.group(3), int(match.group(4)), int(match.group(5))
    if fam == "tau":
        return tau(a, b, g, m)
    word = rho(a, b, m) if fam == "rho" else omega(a, b, m)
    return _lift(word, g)


def hilden_sample(g: int, strands: int, length: int, seed) -> MixedBraidWord:
    if strands % 2 or strands < 2:
        raise ValueError("need an even positive number of moving strands")
    if length < 0:
        raise ValueError("length must be nonnegative")
    m = strands // 2
    gens = [w for _, w in mixed_generators(g, m)]
    rng = random.Random(seed)
    parts = []
    for _ in range(length):
        w = rng.choice(gens)
        parts.append(w if rng.random() < 0.5 else w.inverse())
    return mx.product(g, strands, parts)


# ---------------------------------------------------------------------------
# membership


def _quotient(word: tuple, g: int) -> tuple:
    """Image in the free group on fixed loops and one loop per arc."""
    out: list = []
    for x in word:
        a = abs(x)
        if a <= g:
            y = x
        else:
            pair = (a - g + 1) // 2
            y = g + pair
            if (a - g) % 2 == 0:
                y = -y
            if x < 0:
                y = -y
        if out and out[-1] == -y:
            out.pop()
        else:
            out.append(y)
    return tuple(out)


def _arcs_kept(action: bc.FreeGroupAutomorphism, g: int, m: int) -> bool:
    for i in range(1, m + 1):
        a, b = g + 2 * i - 1, g + 2 * i
        img = bc.free_mul(action.images[a - 1], action.images[b - 1])
        if _quotient(img, g):
            return False
    return True


def preserves_arcs(word, g: int = 0, cap: int | None = None) -> bool:
    """Exact test that a (mixed) braid on 2m moving strands is a Hilden element."""
    if isinstance(word, MixedBraidWord):
        g = word.g
        word = mx.embed(word)
    moving = word.strand_count - g
    if moving % 2:
        raise ValueError("odd number of moving strands")
    m = moving // 2
    return (_arcs_kept(bc.artin_action(word, cap), g, m)
            and _arcs_kept(bc.artin_action(word.inverse(), cap), g, m))


# ---------------------------------------------------------------------------
# omega as a product of taus


@dataclass
class OmegaTauReport:
    holds: bool
    offset: tuple | None = None
    omega_indices: tuple | None = None
    twist: tuple | None = None
    inverted: bool = False
    message: str = ""
    transcript: list = None

    def __str__(self) -> str:
        return self.message


def _renumbered_omega(a: int, b: int, g: int, m: int):
    """omega_{ab} of K_{g+2m} as a mixed word, or None if it moves fixed strands."""
    big_m = (g + 2 * m) // 2
    if not (1 <= a <= big_m and 1 <= b <= big_m) or a == b:
        return None
    word = omega_literal(a, b, big_m)
    try:
        perm = bc.permutation(word)
        if any(perm(r) != r for r in range(1, g + 1)):
            return None
        if not bc.is_trivial(bc.delete_strands(word, range(1, g + 1))):
            return None
        return mx.from_artin(word, g)
    except ValueError:
        return None


def verify_omega_tau_identity(i: int, j: int, g: int, m: int) -> OmegaTauReport:
    """Check omega = tau_{i,2j-1} tau_{i+1,2j-1} after renumbering.

    The second-family omega has its first pair made of fixed strands
    ``i, i+1`` and its second pair the moving pair ``j``; in K_{g+2m} these
    are pairs ``(i+1)//2`` and ``g//2 + j``.  If the exact identity fails,
    pair-index offsets in {-1, 0, 1}^2 are tried, and finally the
    identity up to twisting the moving pair (sigma_{2j-1}^e on either side,
    which is itself a Hilden element) is searched.
    """
    lines = []
    if g % 2 or i % 2 == 0:
        return OmegaTauReport(False, message=f"needs g even and i odd (got g={g}, i={i})", transcript=lines)
    if not (1 <= i and i + 1 <= g and 1 <= j <= m):
        return OmegaTauReport(False, message=f"precondition violated: tau_{{{i + 1},{2 * j - 1}}} "
                              f"is out of range for g={g}, m={m}", transcript=lines)
    n = 2 * m
    rhs = mx.product(g, n, [tau(i, j, g, m), tau(i + 1, j, g, m)])
    base = ((i + 1) // 2, g // 2 + j)
    lines.append(f"rhs = tau_{{{i},{2 * j - 1}}} tau_{{{i + 1},{2 * j - 1}}} = {mx.tokens(rhs.letters)}")
    for da in (0, -1, 1):
        for db in (0, -1, 1):
            a, b = base[0] + da, base[1] + db
            lhs = _renumbered_omega(a, b, g, m)
            if lhs is None:
                lines.append(f"offset ({da},{db}): omega_{{{a},{b}}} not in B_{{{g},{n}}}")
                continue
            for inv in (False, True):
                cand = lhs.inverse() if inv else lhs
                eq = mx.mixed_words_equal(cand, rhs)
                lines.append(f"offset ({da},{db}) omega_{{{a},{b}}}{'^-1' if inv else ''} == rhs: {eq}")
                if eq:
                    return OmegaTauReport(True, (da, db), (a, b), None, inv,
                                          f"holds exactly at offset ({da},{db})", lines)
    twist_gen = 2 * j - 1
    for da in (0, -1, 1):
        for db in (0, -1, 1):
            a, b = base[0] + da, base[1] + db
            lhs = _renumbered_omega(a, b, g, m)
            if lhs is None:
                continue
            for inv in (False, True):
                cand = lhs.inverse() if inv else lhs
                for e1 in range(-2, 3):
                    for e2 in range(-2, 3):
                        t1 = MixedBraidWord(g, n, (("s", twist_gen, 1 if e1 > 0 else -1),) * abs(e1))
                        t2 = MixedBraidWord(g, n, (("s", twist_gen, 1 if e2 > 0 else -1),) * abs(e2))
                        if mx.mixed_words_equal(cand, mx.product(g, n, [t1, rhs, t2])):
                            lines.append(f"omega_{{{a},{b}}}{'^-1' if inv else ''} == "
                                         f"s{twist_gen}^{e1} rhs s{twist_gen}^{e2}: True")
                            return OmegaTauReport(
                                False, (da, db), (a, b), (e1, e2), inv,
                                f"exact identity fails at every offset; holds up to pair twists "
                                f"s{twist_gen}^{e1} . rhs . s{twist_gen}^{e2} at offset ({da},{db})",
                                lines)
    return OmegaTauReport(False, message="identity fails at every offset, also up to pair twists",
                          transcript=lines)
