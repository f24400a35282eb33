"""Property-by-property verification over generated words.

Each check yields :class:`Row` objects: one per (property, word, n) or per
(property, word) for global properties.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .characterize import (
    cross_check_characterizations,
    episturmian_profile,
    episturmian_richness_criterion,
    prop51_structure_check,
)
from .complexity import (
    CLOSED,
    EQUAL,
    STRICT,
    VIOLATED,
    closure_under_theta,
    delta_from_right_specials,
    profile_from_index,
    verify_thm11_sweep,
)
from .core import Antimorphism, Word, build_factor_index
from .generators import CorpusEntry, builtin_corpus
from .palindromic import richness_report
from .rauzy import cor33_check

PROPERTIES: dict[str, str] = {
    "closure": "language of the window is closed under theta",
    "inequality": "P(n) + P(n+1) <= dC(n) + 2 for every n",
    "periodic-regime": "P(n) + P(n+1) = 2 wherever no factor of length n is special",
    "strict-at-zero": "theta other than reversal: P(1) < #A and strict inequality at n = 0",
    "delta-sum": "dC(n) equals the sum of outdegree - 1 over right special factors",
    "equality-iff-rich": "equality for all n >= 1 iff every prefix is theta-rich",
    "graph-condition": "super reduced graph is a tree with theta-fixed loops iff equality holds",
    "characterizations": "count, unioccurrence, v/theta(v) and sufficient-condition routes agree",
    "bound": "theta-palindromic factors never exceed |w| + 1 - #gamma(w)",
    "episturmian-criterion": "theta-episturmian words: rich iff P(1) + P(2) = dC(1) + 2",
    "return-structure": "complete return words to bispecials have the predicted shape",
    "k_a-finite": "k_a is determined for every non-palindromic letter (aperiodic episturmian words)",
}


@dataclass(frozen=True)
class Row:
    property: str
    word: str
    n: Optional[int]
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "word": self.word,
            "n": self.n,
            "passed": self.passed,
            "detail": self.detail,
        }

    def line(self) -> str:
        where = self.word if self.n is None else f"{self.word} n={self.n}"
        mark = "PASS" if self.passed else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{mark}  {self.property:<22} {where}{tail}"


@dataclass(frozen=True)
class Target:
    name: str
    theta: Antimorphism
    word: Word
    aperiodic: bool = True


def corpus_targets(window: int, names: Optional[Iterable[str]] = None) -> list[Target]:
    wanted = set(names) if names else None
    out = []
    for e in builtin_corpus():
        if wanted is not None and e.name not in wanted:
            continue
        out.append(Target(e.name, e.theta, e.make().prefix(window), e.aperiodic))
    if wanted is not None:
        unknown = wanted - {t.name for t in out}
        if unknown:
            raise KeyError(f"unknown corpus words: {sorted(unknown)}")
    return out


def verify_target(t: Target, N: int = 30, chars_window: int = 800) -> Iterator[Row]:
    """All checks for one word. ``N`` bounds the n-sweep; ``chars_window``
    bounds the prefix used for the (costlier) characterization routes."""
    theta, w, name = t.theta, t.word, t.name
    N = min(N, len(w) - 2)
    idx = build_factor_index(w, N + 1)
    closure = closure_under_theta(theta, idx, N + 1)
    closed = closure.verdict == CLOSED
    yield Row("closure", name, None, closed, closure.verdict)

    report = richness_report(theta, w)
    yield Row("bound", name, None, report.pal_count <= report.bound,
              f"{report.pal_count} <= {report.bound}")

    prof = profile_from_index(theta, idx, N, source=name)
    sweep = verify_thm11_sweep(theta, idx, range(N + 1))
    for r in sweep:
        if closed:
            yield Row("inequality", name, r.n, r.status != VIOLATED, f"{r.lhs} vs {r.rhs}")
        if r.no_special:
            yield Row("periodic-regime", name, r.n, bool(r.lemma_ok), f"lhs={r.lhs}")
    for n in range(N + 1):
        direct = delta_from_right_specials(idx, n)
        yield Row("delta-sum", name, n, direct == prof[n].dC, f"{direct} vs {prof[n].dC}")

    letters_seen = {ch for ch in w.code}
    if not theta.is_reversal and len(letters_seen) == len(theta.alphabet):
        P1 = prof[0].lhs - prof[0].P
        ok = P1 < len(theta.alphabet) and prof[0].status == STRICT
        yield Row("strict-at-zero", name, 0, ok, f"P(1)={P1}, status={prof[0].status}")

    if closed:
        eq = prof.equal_from(1)
        yield Row("equality-iff-rich", name, None, eq == report.is_rich,
                  f"equality={eq}, rich={report.is_rich}")
        for n in range(1, N + 1):
            v = cor33_check(theta, idx, n, prof)
            if v.provisional:
                continue
            yield Row("graph-condition", name, n, v.consistent,
                      f"predicted={v.equality_predicted}, observed={v.equality_observed}")

    cc = cross_check_characterizations(theta, w[: min(len(w), chars_window)], N=min(N, 20))
    yield Row("characterizations", name, None, cc.consistent,
              ", ".join(cc.violations) or f"rich={cc.values['rich_count']}")

    if closed:
        eidx = build_factor_index(w, min(N + 1, 31))
        ep = episturmian_profile(theta, eidx)
        if ep.is_theta_episturmian_on_window:
            crit = episturmian_richness_criterion(theta, eidx, ep)
            yield Row("episturmian-criterion", name, None, crit.rich == report.is_rich,
                      f"P1+P2={crit.lhs}, dC1+2={crit.rhs_plus2}, dC1+1={crit.rhs_plus1}, "
                      f"rich={report.is_rich}")
            st = prop51_structure_check(theta, eidx, ep)
            yield Row("return-structure", name, None, st.holds,
                      f"{len(st.checked)} clauses checked" if st.holds else str(st.failures[0]))
            if t.aperiodic and ep.k_a:
                ok = all(v is not None for v in ep.k_a.values()) and all(ep.k_a_determined.values())
                shown = {theta.alphabet.name_of(c): v for c, v in sorted(ep.k_a.items())}
                yield Row("k_a-finite", name, None, ok, f"k_a={shown}")


def run_suite(
    targets: Iterable[Target],
    N: int = 30,
    only: Optional[Iterable[str]] = None,
    chars_window: int = 800,
) -> list[Row]:
    keep = set(only) if only else None
    rows = []
    for t in targets:
        for row in verify_target(t, N, chars_window):
            if keep is None or row.property in keep:
                rows.append(row)
    return rows


def mutate(w: Word, position: int) -> Word:
    """Replace the letter at ``position`` by the next letter of the alphabet."""
    if not 0 <= position < len(w):
        raise ValueError(f"mutation position {position} outside 0..{len(w) - 1}")
    k = len(w.alphabet)
    ch = w.code[position]
    from .core import CODE_BASE

    new = chr(CODE_BASE + (ord(ch) - CODE_BASE + 1) % k)
    return Word(w.alphabet, w.code[:position] + new + w.code[position + 1 :])
