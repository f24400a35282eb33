"""Executable characterizations of theta-richness and theta-episturmian structure.

Each checker works on the finite source of a :class:`FactorIndex`. A failing
check always carries a counterexample that can be re-verified by hand:
the offending factor(s) and their 0-based positions in the source.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .complexity import (
    CLOSED,
    EQUAL,
    closure_under_theta,
    palindromic_complexity,
    profile_from_index,
)
from .core import Antimorphism, FactorIndex, Word, _same_alphabet, build_factor_index, find_all
from .palindromic import PalindromeTree, richness_report, scan_prefixes

UPS = "ups"  # unioccurrent longest palindromic suffixes
ALTERNATION = "alternation"
V_THETA_V = "v_theta_v"
SUFFICIENT = "sufficient"
LETTER_ALTERNATION = "letter_alternation"
CRW_PALINDROME = "crw_palindrome"

PROPERTY_IDS = (UPS, ALTERNATION, V_THETA_V, SUFFICIENT, LETTER_ALTERNATION, CRW_PALINDROME)


@dataclass(frozen=True)
class CharacterizationResult:
    property_id: str
    holds: bool
    counterexample: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "property": self.property_id,
            "verdict": self.holds,
            "counterexample": self.counterexample,
        }


def _text(idx: FactorIndex, code: str) -> str:
    return idx.word(code).text()


def _palindrome_codes(theta: Antimorphism, code: str) -> list[str]:
    tree = PalindromeTree(theta)
    for ch in code:
        tree.append(ch)
    return sorted(tree.palindrome_codes(), key=lambda c: (len(c), c))


def check_return_words_palindromic(theta: Antimorphism, idx: FactorIndex) -> CharacterizationResult:
    """Every complete return word to a non-empty theta-palindromic factor is
    a theta-palindrome.

    Consecutive occurrences inside the window always bound a genuine
    complete return word, so a failure is never a boundary artifact.
    """
    _same_alphabet(theta.alphabet, idx.alphabet)
    code = idx.code
    for p in _palindrome_codes(theta, code):
        occ = idx.occurrences(p)
        for i, j in zip(occ, occ[1:]):
            r = code[i : j + len(p)]
            if not theta.is_palindrome_code(r):
                return CharacterizationResult(
                    CRW_PALINDROME,
                    False,
                    {"factor": _text(idx, p), "return_word": _text(idx, r), "positions": [i, j]},
                )
    return CharacterizationResult(CRW_PALINDROME, True)


def _alternation(theta: Antimorphism, idx: FactorIndex, f: str, pid: str) -> CharacterizationResult:
    g = theta.apply_code(f)
    events = sorted([(i, 0) for i in idx.occurrences(f)] + [(i, 1) for i in idx.occurrences(g)])
    for (i, a), (j, b) in zip(events, events[1:]):
        if a == b:
            return CharacterizationResult(
                pid,
                False,
                {
                    "factor": _text(idx, f if a == 0 else g),
                    "image": _text(idx, g if a == 0 else f),
                    "positions": [i, j],
                },
            )
    return CharacterizationResult(pid, True)


def check_alternation(theta: Antimorphism, idx: FactorIndex, f: Word) -> CharacterizationResult:
    """Occurrences of ``f`` and ``theta(f)`` strictly alternate in the source."""
    _same_alphabet(theta.alphabet, f.alphabet)
    if theta.is_palindrome_code(f.code):
        raise ValueError(f"{f.text()!r} is a theta-palindrome; alternation is undefined")
    return _alternation(theta, idx, f.code, ALTERNATION)


def check_letter_alternation(theta: Antimorphism, idx: FactorIndex) -> CharacterizationResult:
    """For every letter ``a != theta(a)``, occurrences of ``a`` and
    ``theta(a)`` alternate."""
    done = set()
    for a in idx.alphabet.letters():
        if theta.is_palindrome_code(a.code) or a.code in done:
            continue
        done.update((a.code, theta.apply_code(a.code)))
        res = _alternation(theta, idx, a.code, LETTER_ALTERNATION)
        if not res.holds:
            return res
    return CharacterizationResult(LETTER_ALTERNATION, True)


def _v_theta_v_violation(theta: Antimorphism, idx: FactorIndex, v: str) -> Optional[dict]:
    """First factor starting with ``v`` (or ``theta(v)``), ending with the
    other, with no further occurrence of either, that is not a
    theta-palindrome."""
    code = idx.code
    g = theta.apply_code(v)
    n = len(v)
    if g == v:
        occ = idx.occurrences(v)
        pairs = zip(occ, occ[1:])
    else:
        events = sorted([(i, 0) for i in idx.occurrences(v)] + [(i, 1) for i in idx.occurrences(g)])
        pairs = ((i, j) for (i, a), (j, b) in zip(events, events[1:]) if a != b)
    for i, j in pairs:
        r = code[i : j + n]
        if not theta.is_palindrome_code(r):
            return {"v": _text(idx, code[i : i + n]), "factor": _text(idx, r), "positions": [i, j]}
    return None


def check_v_thetaV_factors(theta: Antimorphism, idx: FactorIndex) -> CharacterizationResult:
    """For every non-empty factor ``v``, each factor beginning with ``v``,
    ending with ``theta(v)`` and containing no other occurrence of ``v`` or
    ``theta(v)`` is a theta-palindrome; and non-palindromic letters
    alternate with their images.

    ``v`` ranges over all factors up to ``idx.max_len`` and over every
    theta-palindromic factor of the source regardless of length.
    """
    _same_alphabet(theta.alphabet, idx.alphabet)
    letters = check_letter_alternation(theta, idx)
    if not letters.holds:
        return CharacterizationResult(V_THETA_V, False, {"letter_alternation": letters.counterexample})
    seen: set[str] = set()
    candidates = [c for n in range(1, idx.max_len + 1) for c in idx.codes(n)]
    candidates += [p for p in _palindrome_codes(theta, idx.code) if len(p) > idx.max_len]
    for v in candidates:
        if v in seen:
            continue
        seen.update((v, theta.apply_code(v)))
        bad = _v_theta_v_violation(theta, idx, v)
        if bad is not None:
            return CharacterizationResult(V_THETA_V, False, bad)
    return CharacterizationResult(V_THETA_V, True)


def check_letter_bridges(theta: Antimorphism, idx: FactorIndex) -> CharacterizationResult:
    """Factors beginning with a letter ``a != theta(a)`` and ending with
    ``theta(a)``, with no other ``a`` or ``theta(a)``, are theta-palindromes."""
    for a in idx.alphabet.letters():
        if theta.is_palindrome_code(a.code):
            continue
        bad = _v_theta_v_violation(theta, idx, a.code)
        if bad is not None:
            return CharacterizationResult(V_THETA_V, False, bad)
    return CharacterizationResult(V_THETA_V, True)


def check_sufficient(theta: Antimorphism, idx: FactorIndex) -> CharacterizationResult:
    """Premises of the sufficient condition for richness: palindromic
    complete returns to palindromes, letter alternation, and palindromic
    letter bridges. ``holds`` means all three premises hold."""
    for res in (
        check_return_words_palindromic(theta, idx),
        check_letter_alternation(theta, idx),
        check_letter_bridges(theta, idx),
    ):
        if not res.holds:
            return CharacterizationResult(
                SUFFICIENT, False, {"premise": res.property_id, **(res.counterexample or {})}
            )
    return CharacterizationResult(SUFFICIENT, True)


def check_ups(theta: Antimorphism, w: Word) -> CharacterizationResult:
    """The longest theta-palindromic suffix of each prefix is unioccurrent in
    that prefix, except where the last letter enlarges gamma.

    Unioccurrence is tested by searching the prefix minus its last letter,
    independently of the palindrome count.
    """
    scan = scan_prefixes(theta, w)
    code = w.code
    for m in range(1, len(code) + 1):
        if scan.gamma_grew[m - 1]:
            continue
        s_len = scan.lps_len[m - 1]
        s = code[m - s_len : m]
        if code.find(s, 0, m - 1) != -1:
            first = code.find(s, 0, m - 1)
            return CharacterizationResult(
                UPS,
                False,
                {"prefix": w[:m].text(), "suffix": w[m - s_len : m].text(), "positions": [first, m - s_len]},
            )
    return CharacterizationResult(UPS, True)


@dataclass(frozen=True)
class CrossCheck:
    """Richness verdicts from independent routes on one window."""

    window_length: int
    closed: str
    values: dict[str, bool]
    violations: tuple[str, ...]
    partial: bool  # window not shown closed under theta; equality route skipped

    @property
    def consistent(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "window_length": self.window_length,
            "closure": self.closed,
            "values": dict(self.values),
            "violations": list(self.violations),
            "partial": self.partial,
        }


def cross_check_characterizations(
    theta: Antimorphism, w: Word, N: int = 20, max_len: int = 20
) -> CrossCheck:
    """Evaluate every richness characterization on ``w`` and report any
    broken implication.

    Checked: count-richness <=> unioccurrence, count-richness <=>
    v/theta(v) property, sufficient premises => richness, and, when the
    window is closed under theta, richness <=> equality for ``1 <= n <= N``.
    """
    max_len = min(max(max_len, N + 1), len(w))
    idx = build_factor_index(w, max_len)
    rich = richness_report(theta, w).is_rich
    closure = closure_under_theta(theta, idx, max_len)
    values = {
        "rich_count": rich,
        UPS: check_ups(theta, w).holds,
        V_THETA_V: check_v_thetaV_factors(theta, idx).holds,
        SUFFICIENT: check_sufficient(theta, idx).holds,
        CRW_PALINDROME: check_return_words_palindromic(theta, idx).holds,
        LETTER_ALTERNATION: check_letter_alternation(theta, idx).holds,
    }
    partial = closure.verdict != CLOSED
    if not partial and N + 1 <= max_len:
        prof = profile_from_index(theta, idx, N)
        values["equality"] = all(r.status == EQUAL for r in prof.rows[1:])
    violations = []
    if values[UPS] != rich:
        violations.append("rich_count <=> ups")
    if values[V_THETA_V] != rich:
        violations.append("rich_count <=> v_theta_v")
    if values[SUFFICIENT] and not rich:
        violations.append("sufficient => rich_count")
    if "equality" in values and values["equality"] != rich:
        violations.append("rich_count <=> equality")
    return CrossCheck(len(w), closure.verdict, values, tuple(violations), partial)


# ---------------------------------------------------------------------------
# Theta-episturmian structure
# ---------------------------------------------------------------------------


def _extensions(code: str, f: str) -> tuple[set[str], set[str]]:
    left, right = set(), set()
    n = len(f)
    for i in find_all(code, f):
        if i > 0:
            left.add(code[i - 1])
        if i + n < len(code):
            right.add(code[i + n])
    return left, right


def _returns(code: str, f: str, upto: Optional[int] = None) -> dict[str, set[str]]:
    """Complete return words to ``f`` grouped by the letter after ``f``."""
    occ = list(range(len(code) + 1)) if not f else find_all(code, f)
    if upto is not None:
        occ = [i for i in occ if i + len(f) <= upto]
    out: dict[str, set[str]] = {}
    for i, j in zip(occ, occ[1:]):
        r = code[i : j + len(f)]
        out.setdefault(r[len(f)], set()).add(r)
    return out


@dataclass(frozen=True)
class Bispecial:
    k: int
    code: str
    returns: dict[str, str]  # letter a -> r_{k,a}
    ambiguous: tuple[str, ...]  # letters with more than one observed return
    settled: bool  # first half of the window already shows every return

    def to_dict(self, idx_word) -> dict:
        return {
            "k": self.k,
            "length": len(self.code),
            "word": idx_word(self.code),
            "returns": {idx_word(a): idx_word(r) for a, r in sorted(self.returns.items())},
            "settled": self.settled,
        }


@dataclass(frozen=True)
class EpisturmianProfile:
    is_theta_episturmian_on_window: bool
    left_special_counts: tuple[int, ...]  # per length 0..idx.max_len-1
    first_double_left_special: Optional[tuple[int, tuple[str, ...]]]
    closure: str
    bispecials: tuple[Bispecial, ...]
    z: tuple[Optional[str], ...]  # z_k for consecutive bispecials
    k_a: dict[str, Optional[int]]  # observed k_a per non-palindromic letter code
    k_a_determined: dict[str, bool]
    window_length: int
    alphabet: object = field(repr=False, default=None)

    @property
    def lengths(self) -> list[int]:
        return [len(b.code) for b in self.bispecials]

    def to_dict(self) -> dict:
        a = self.alphabet

        def name(code: str) -> str:
            return "".join(a.name_of(ch) for ch in code)

        return {
            "is_theta_episturmian_on_window": self.is_theta_episturmian_on_window,
            "window_length": self.window_length,
            "closure": self.closure,
            "left_special_counts": list(self.left_special_counts),
            "first_double_left_special": None
            if self.first_double_left_special is None
            else {
                "length": self.first_double_left_special[0],
                "factors": [name(c) for c in self.first_double_left_special[1]],
            },
            "bispecials": [b.to_dict(name) for b in self.bispecials],
            "z": [None if z is None else name(z) for z in self.z],
            "k_a": {name(c): v for c, v in sorted(self.k_a.items())},
            "k_a_determined": {name(c): v for c, v in sorted(self.k_a_determined.items())},
        }


def _left_special_chain(idx: FactorIndex, start: str, max_n: int) -> list[str]:
    """Extend a left special factor one letter at a time while some
    extension stays left special (unique per length on episturmian input)."""
    chain = [start]
    code = idx.code
    cur = start
    while len(cur) < max_n:
        _, right = _extensions(code, cur)
        nxt = [cur + x for x in sorted(right) if len(_extensions(code, cur + x)[0]) >= 2]
        if len(nxt) != 1:
            break
        cur = nxt[0]
        chain.append(cur)
    return chain


def episturmian_profile(
    theta: Antimorphism, idx: FactorIndex, max_bispecial_len: Optional[int] = None
) -> EpisturmianProfile:
    """Window-observed bispecial sequence, extension letters, complete
    return words and ``k_a``.

    Lengths ``< idx.max_len`` are checked exhaustively for a second left
    special factor; beyond that, the unique left special branch is followed
    by scanning the source, up to ``max_bispecial_len`` (default: a tenth of
    the window).
    """
    _same_alphabet(theta.alphabet, idx.alphabet)
    code = idx.code
    counts = []
    double = None
    for n in range(idx.max_len):
        ls = [c for c in idx.codes(n) if idx.is_left_special(c)]
        counts.append(len(ls))
        if len(ls) > 1 and double is None:
            double = (n, tuple(ls))
    closure = closure_under_theta(theta, idx, idx.max_len).verdict
    episturmian = double is None and closure == CLOSED
    if max_bispecial_len is None:
        max_bispecial_len = max(idx.max_len, len(code) // 10)

    bis_codes: list[str] = []
    if episturmian and counts and counts[0] == 1:
        for c in _left_special_chain(idx, "", max_bispecial_len):
            left, right = _extensions(code, c)
            if len(left) >= 2 and len(right) >= 2:
                bis_codes.append(c)
    half = len(code) // 2
    bispecials = []
    for k, b in enumerate(bis_codes):
        full = _returns(code, b)
        early = _returns(code, b, upto=half)
        returns = {a: min(rs) for a, rs in full.items()}
        ambiguous = tuple(sorted(a for a, rs in full.items() if len(rs) > 1))
        settled = {a: rs for a, rs in early.items()} == full
        bispecials.append(Bispecial(k, b, returns, ambiguous, settled))
    z = tuple(
        nxt.code[len(cur.code)] if nxt.code.startswith(cur.code) else None
        for cur, nxt in zip(bispecials, bispecials[1:])
    )

    k_a: dict[str, Optional[int]] = {}
    determined: dict[str, bool] = {}
    for a in idx.alphabet.letters():
        x = a.code
        if theta.is_palindrome_code(x):
            continue
        y = theta.apply_code(x)
        best, fail_after = None, False
        for b in bispecials:
            if not b.settled:
                break
            ra, rb = b.returns.get(x), b.returns.get(y)
            cond = (
                ra is not None
                and rb is not None
                and not theta.is_palindrome_code(ra)
                and not theta.is_palindrome_code(rb)
            )
            if cond:
                best, fail_after = b.k, False
            elif best is not None:
                fail_after = True
        k_a[x] = best
        determined[x] = fail_after
    return EpisturmianProfile(
        episturmian,
        tuple(counts),
        double,
        closure,
        tuple(bispecials),
        z,
        k_a,
        determined,
        len(code),
        idx.alphabet,
    )


@dataclass(frozen=True)
class CriterionResult:
    """Episturmian richness criterion evaluated with both candidate constants."""

    rich: bool  # P(1) + P(2) == dC(1) + 2
    lhs: int
    rhs_plus2: int
    rhs_plus1: int
    holds_plus1: bool
    k0: Optional[int]
    sweep: tuple[tuple[int, str], ...]

    def to_dict(self) -> dict:
        return {
            "rich": self.rich,
            "P1_plus_P2": self.lhs,
            "dC1_plus_2": self.rhs_plus2,
            "dC1_plus_1": self.rhs_plus1,
            "holds_with_plus_1": self.holds_plus1,
            "k0": self.k0,
            "sweep": [{"n": n, "status": s} for n, s in self.sweep],
        }


def episturmian_richness_criterion(
    theta: Antimorphism, idx: FactorIndex, profile: Optional[EpisturmianProfile] = None
) -> CriterionResult:
    """Decide richness of a theta-episturmian word from ``P(1) + P(2)``.

    The word is rich iff ``P(1) + P(2) = dC(1) + 2``. A variant with
    constant ``+ 1`` circulates; it is evaluated alongside as
    ``holds_plus1`` and disagrees with the builtin rich words.
    """
    if profile is None:
        profile = episturmian_profile(theta, idx)
    if not profile.is_theta_episturmian_on_window:
        raise ValueError("criterion needs a word that is theta-episturmian on the window")
    if idx.max_len < 3:
        raise ValueError("criterion needs factors up to length 3")
    P1 = palindromic_complexity(theta, idx, 1)
    P2 = palindromic_complexity(theta, idx, 2)
    dC1 = idx.count(2) - idx.count(1)
    lhs = P1 + P2
    prof = profile_from_index(theta, idx, idx.max_len - 1)
    sweep = tuple((r.n, r.status) for r in prof.rows[1:])
    k0 = None
    for b in profile.bispecials:
        n = len(b.code)
        if 1 <= n <= prof.N and prof[n].status == EQUAL:
            k0 = b.k
            break
    return CriterionResult(lhs == dC1 + 2, lhs, dC1 + 2, dC1 + 1, lhs == dC1 + 1, k0, sweep)


@dataclass(frozen=True)
class StructureReport:
    holds: bool
    checked: tuple[tuple[int, str, str], ...]  # (k, letter, clause)
    failures: tuple[dict, ...]

    def to_dict(self) -> dict:
        return {"holds": self.holds, "checked": len(self.checked), "failures": list(self.failures)}


def prop51_structure_check(
    theta: Antimorphism,
    idx: FactorIndex,
    profile: Optional[EpisturmianProfile] = None,
    max_k: Optional[int] = None,
) -> StructureReport:
    """Structure of complete return words to the bispecial factors.

    For each settled bispecial ``w_k`` and letter ``a``:

    * ``a`` theta-fixed: ``r_{k,a}`` is a theta-palindrome;
    * ``k <= k_a``: ``r_{k,a} = w_k a w_k`` and ``a`` occurs neither in
      ``w_k`` nor in any other return word to ``w_k``;
    * ``k > k_a``: ``r_{k,a}`` and ``r_{k,theta(a)}`` are not both present;
    * ``k > k_a`` with ``r_{k,a}`` palindromic: ``r_{k+1,a}`` is absent or
      palindromic.
    """
    if profile is None:
        profile = episturmian_profile(theta, idx)
    if not profile.is_theta_episturmian_on_window:
        raise ValueError("structure check needs a word that is theta-episturmian on the window")
    a_name = idx.alphabet.name_of
    checked, failures = [], []
    bis = [b for b in profile.bispecials if b.settled and (max_k is None or b.k <= max_k)]

    def fail(k, a, clause, detail):
        failures.append({"k": k, "letter": a_name(a), "clause": clause, "detail": detail})

    by_k = {b.k: b for b in bis}
    for b in bis:
        k, w = b.k, b.code
        for a, r in sorted(b.returns.items()):
            if a in b.ambiguous:
                fail(k, a, "unique_return", "more than one return word starts with w_k a")
            if theta.is_palindrome_code(a):
                checked.append((k, a, "fixed_letter_palindrome"))
                if not theta.is_palindrome_code(r):
                    fail(k, a, "fixed_letter_palindrome", _text(idx, r))
                continue
            ka = profile.k_a.get(a)
            if ka is not None and k <= ka:
                checked.append((k, a, "wk_a_wk"))
                if r != w + a + w:
                    fail(k, a, "wk_a_wk", _text(idx, r))
                if a in w:
                    fail(k, a, "letter_absent", f"{a_name(a)} occurs in w_k")
                others = [s for c, s in b.returns.items() if c != a and a in s]
                if others:
                    fail(k, a, "letter_absent", _text(idx, others[0]))
            elif ka is not None:
                checked.append((k, a, "at_most_one"))
                if theta.apply_code(a) in b.returns:
                    fail(k, a, "at_most_one", "both r_{k,a} and r_{k,theta(a)} observed")
                if theta.is_palindrome_code(r) and k + 1 in by_k:
                    checked.append((k, a, "persistence"))
                    nxt = by_k[k + 1].returns.get(a)
                    if nxt is not None and not theta.is_palindrome_code(nxt):
                        fail(k, a, "persistence", _text(idx, nxt))
    return StructureReport(not failures, tuple(checked), tuple(failures))
