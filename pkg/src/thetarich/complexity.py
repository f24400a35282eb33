"""Factor complexity, theta-palindromic complexity and the inequality sweep.

All quantities are measured on a finite window (a prefix of an infinite
word, or a complete finite word). ``window_length`` is recorded so that
reports can be reproduced.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional

from .core import Antimorphism, FactorIndex, Word, _same_alphabet, build_factor_index

EQUAL, STRICT, VIOLATED = "equal", "strict", "violated"
CLOSED, NOT_CLOSED, INCONCLUSIVE = "closed-on-window", "not-closed", "inconclusive"

PROFILE_COLUMNS = ("n", "C", "dC", "P", "lhs", "rhs", "status")


def classify(lhs: int, rhs: int) -> str:
    if lhs == rhs:
        return EQUAL
    return STRICT if lhs < rhs else VIOLATED


def factor_complexity(idx: FactorIndex, n: int) -> int:
    return idx.count(n)


def palindromic_complexity(theta: Antimorphism, idx: FactorIndex, n: int) -> int:
    _same_alphabet(theta.alphabet, idx.alphabet)
    return sum(1 for c in idx.codes(n) if theta.is_palindrome_code(c))


@dataclass(frozen=True)
class ProfileRow:
    n: int
    C: int
    dC: int
    P: int
    lhs: int
    rhs: int
    status: str

    def as_tuple(self) -> tuple:
        return (self.n, self.C, self.dC, self.P, self.lhs, self.rhs, self.status)


@dataclass(frozen=True)
class ComplexityProfile:
    """Rows ``n = 0..N`` comparing ``P(n) + P(n+1)`` with ``dC(n) + 2``."""

    rows: tuple[ProfileRow, ...]
    window_length: int
    source: str = ""

    def __getitem__(self, n: int) -> ProfileRow:
        row = self.rows[n]
        assert row.n == n
        return row

    @property
    def N(self) -> int:
        return len(self.rows) - 1

    def statuses(self) -> list[str]:
        return [r.status for r in self.rows]

    def equal_from(self, start: int = 1) -> bool:
        return all(r.status == EQUAL for r in self.rows[start:])

    def to_dict(self) -> dict:
        return {
            "window_length": self.window_length,
            "source": self.source,
            "columns": list(PROFILE_COLUMNS),
            "rows": [dict(zip(PROFILE_COLUMNS, r.as_tuple())) for r in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(PROFILE_COLUMNS)
        for r in self.rows:
            writer.writerow(r.as_tuple())
        return buf.getvalue()


def profile_from_index(
    theta: Antimorphism, idx: FactorIndex, N: int, source: str = ""
) -> ComplexityProfile:
    if N + 1 > idx.max_len:
        raise ValueError(f"window too short: need factors of length {N + 1}, index has {idx.max_len}")
    C = [idx.count(n) for n in range(N + 2)]
    P = [palindromic_complexity(theta, idx, n) for n in range(N + 2)]
    rows = []
    for n in range(N + 1):
        dC = C[n + 1] - C[n]
        lhs, rhs = P[n] + P[n + 1], dC + 2
        rows.append(ProfileRow(n, C[n], dC, P[n], lhs, rhs, classify(lhs, rhs)))
    return ComplexityProfile(tuple(rows), len(idx.source), source)


def complexity_profile(
    theta: Antimorphism, w: Word, N: int, source: str = ""
) -> ComplexityProfile:
    """Complexity table for ``n = 0..N`` on the window ``w``.

    Requires ``N + 1 <= |w|``.
    """
    _same_alphabet(theta.alphabet, w.alphabet)
    if N < 0 or N + 1 > len(w):
        raise ValueError(f"window too short: |w| = {len(w)} cannot cover n = 0..{N}")
    return profile_from_index(theta, build_factor_index(w, N + 1), N, source)


@dataclass(frozen=True)
class ClosureStatus:
    verdict: str
    per_length: dict[int, int] = field(default_factory=dict)  # n -> missing images
    counterexample: Optional[Word] = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "missing_per_length": {str(n): k for n, k in sorted(self.per_length.items())},
            "counterexample": None if self.counterexample is None else self.counterexample.text(),
        }


def closure_under_theta(
    theta: Antimorphism,
    w: Word | FactorIndex,
    N: int,
    mode: Literal["window", "complete"] = "window",
) -> ClosureStatus:
    """Check that ``theta(f)`` is a factor for every factor ``f`` with
    ``|f| <= N``.

    In ``complete`` mode ``w`` is the whole word and a missing image refutes
    closure. In ``window`` mode ``w`` is a prefix of an infinite word, so a
    missing image only makes the verdict inconclusive.
    """
    if mode not in ("window", "complete"):
        raise ValueError(f"unknown closure mode {mode!r}")
    idx = w if isinstance(w, FactorIndex) else build_factor_index(w, N)
    _same_alphabet(theta.alphabet, idx.alphabet)
    N = min(N, idx.max_len)
    missing: dict[int, int] = {}
    first: Optional[str] = None
    for n in range(N + 1):
        k = 0
        for c in idx.codes(n):
            if theta.apply_code(c) not in idx:
                k += 1
                if first is None:
                    first = c
        missing[n] = k
    if first is None:
        return ClosureStatus(CLOSED, missing)
    verdict = NOT_CLOSED if mode == "complete" else INCONCLUSIVE
    return ClosureStatus(verdict, missing, idx.word(first))


@dataclass(frozen=True)
class SpecialFactors:
    left: frozenset[Word]
    right: frozenset[Word]
    bispecial: frozenset[Word]

    def __iter__(self):
        return iter((self.left, self.right, self.bispecial))


def special_factors(idx: FactorIndex, n: int) -> SpecialFactors:
    """Left, right and bispecial factors of length ``n`` observed on the window."""
    if n > idx.max_len - 1:
        raise ValueError(f"n = {n} needs an index with max_len >= {n + 1}")
    left = frozenset(idx.word(c) for c in idx.codes(n) if idx.is_left_special(c))
    right = frozenset(idx.word(c) for c in idx.codes(n) if idx.is_right_special(c))
    return SpecialFactors(left, right, left & right)


def delta_from_right_specials(idx: FactorIndex, n: int) -> int:
    """First difference of complexity as the sum over right special factors
    of ``outdegree - 1``."""
    return sum(
        len(idx.right_extensions(c)) - 1 for c in idx.codes(n) if idx.is_right_special(c)
    )


@dataclass(frozen=True)
class SweepRow:
    n: int
    lhs: int
    rhs: int
    status: str
    no_special: bool  # no special factor of length n on the window
    lemma_ok: Optional[bool]  # lhs == 2 when no_special, else None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "status": self.status,
            "no_special": self.no_special,
            "lemma_ok": self.lemma_ok,
        }


def verify_thm11_sweep(
    theta: Antimorphism, w: Word | FactorIndex, n_range: Iterable[int]
) -> list[SweepRow]:
    """Evaluate ``P(n) + P(n+1)`` against ``dC(n) + 2`` for each ``n``.

    Where no factor of length ``n`` is special the word is in its periodic
    regime and the left side must equal exactly 2; ``lemma_ok`` records
    that check.
    """
    ns = sorted(set(n_range))
    if not ns:
        return []
    top = ns[-1] + 1
    idx = w if isinstance(w, FactorIndex) else build_factor_index(w, top)
    if top > idx.max_len:
        raise ValueError(f"window too short for n up to {ns[-1]}")
    out = []
    for n in ns:
        P0 = palindromic_complexity(theta, idx, n)
        P1 = palindromic_complexity(theta, idx, n + 1)
        dC = idx.count(n + 1) - idx.count(n)
        lhs, rhs = P0 + P1, dC + 2
        no_special = not idx.special_codes(n)
        out.append(
            SweepRow(n, lhs, rhs, classify(lhs, rhs), no_special, (lhs == 2) if no_special else None)
        )
    return out


def sufficient_window(N: int, period: Optional[int] = None) -> int:
    """Window length used for claims about factors up to length ``N``.

    Periodic words need one period plus ``N``; aperiodic generators get the
    generous ``max(50 N, 1000)`` margin.
    """
    if period is not None:
        return period + N + 1
    return max(50 * N, 1000)
