"""Theta-palindromic factors, the gamma correction and richness of finite words."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    Antimorphism,
    Word,
    _same_alphabet,
    find_all,
)

GammaSet = frozenset  # of frozenset({a, theta(a)}) letter-name pairs


def gamma(theta: Antimorphism, w: Word) -> frozenset[frozenset[str]]:
    """Pairs ``{a, theta(a)}`` with ``a != theta(a)`` such that ``a`` or
    ``theta(a)`` occurs in ``w``."""
    _same_alphabet(theta.alphabet, w.alphabet)
    pairs = set()
    for name in set(w.letters):
        image = theta.letter(name)
        if image != name:
            pairs.add(frozenset((name, image)))
    return frozenset(pairs)


class PalindromeTree:
    """Eertree for theta-palindromes, fed one letter at a time.

    Every theta-palindromic suffix of ``wx`` longer than one letter has the
    form ``theta(x) s x`` with ``s`` a theta-palindromic suffix of ``w``, so
    the classic suffix-link walk carries over; the imaginary root only
    yields the one-letter palindrome ``x`` when ``x`` is theta-fixed.

    After each :meth:`append`, ``lps_len`` is the length of the longest
    theta-palindromic suffix and ``created`` tells whether it is new.
    """

    IMAG, EMPTY = 0, 1

    def __init__(self, theta: Antimorphism):
        self.theta = theta
        self._fixed = theta.fixed_chars()
        self.code = ""
        # parallel node arrays; node 0 has length -1, node 1 is the empty word
        self.length = [-1, 0]
        self.link = [0, 0]
        self.edges: list[dict[str, int]] = [{}, {}]
        self.end = [-1, -1]  # end position (exclusive) of first occurrence
        self.last = self.EMPTY
        self.created = False

    def __len__(self) -> int:
        """Number of distinct non-empty theta-palindromes seen."""
        return len(self.length) - 2

    @property
    def lps_len(self) -> int:
        return self.length[self.last]

    def _find(self, node: int, i: int, x: str, mirror: str) -> int:
        while True:
            if node == self.IMAG:
                return self.IMAG if x in self._fixed else -1
            j = i - self.length[node] - 1
            if j >= 0 and self.code[j] == mirror:
                return node
            node = self.link[node]

    def append(self, x: str) -> bool:
        i = len(self.code)
        self.code += x
        mirror = self.theta.char(x)
        cur = self._find(self.last, i, x, mirror)
        if cur < 0:
            self.last = self.EMPTY
            self.created = False
            return False
        nxt = self.edges[cur].get(x)
        if nxt is not None:
            self.last = nxt
            self.created = False
            return False
        new_len = self.length[cur] + 2
        if new_len == 1:
            suffix = self.EMPTY
        else:
            anc = self._find(self.link[cur], i, x, mirror) if cur != self.IMAG else -1
            suffix = self.edges[anc][x] if anc >= 0 else self.EMPTY
        node = len(self.length)
        self.length.append(new_len)
        self.link.append(suffix)
        self.edges.append({})
        self.end.append(i + 1)
        self.edges[cur][x] = node
        self.last = node
        self.created = True
        return True

    def palindrome_codes(self) -> list[str]:
        """Codes of all distinct non-empty theta-palindromes seen."""
        return [self.code[e - n : e] for n, e in zip(self.length[2:], self.end[2:])]


def theta_palindromic_factors(theta: Antimorphism, w: Word) -> set[Word]:
    """All distinct theta-palindromic factors of ``w``, the empty word included."""
    _same_alphabet(theta.alphabet, w.alphabet)
    tree = PalindromeTree(theta)
    for ch in w.code:
        tree.append(ch)
    out = {Word._trusted(w.alphabet, "")}
    out.update(Word._trusted(w.alphabet, c) for c in tree.palindrome_codes())
    return out


def longest_theta_palindromic_suffix(theta: Antimorphism, w: Word) -> Word:
    """Longest suffix ``s`` of ``w`` with ``s == theta(s)``; possibly empty."""
    _same_alphabet(theta.alphabet, w.alphabet)
    code = w.code
    for start in range(len(code) + 1):
        if theta.is_palindrome_code(code[start:]):
            return Word._trusted(w.alphabet, code[start:])
    raise AssertionError("unreachable: the empty suffix is a theta-palindrome")


@dataclass(frozen=True)
class RichnessWitness:
    """Shortest prefix whose longest theta-palindromic suffix repeats."""

    prefix: Word
    suffix: Word
    suffix_occurrences: int

    def to_dict(self) -> dict:
        return {
            "prefix": self.prefix.text(),
            "suffix": self.suffix.text(),
            "suffix_occurrences": self.suffix_occurrences,
        }


@dataclass(frozen=True)
class RichnessReport:
    """Theta-palindromic saturation of a finite word.

    ``defect`` is ``bound - pal_count``, a convenience measure of how far the
    word is from the maximal count; it is not the classical palindromic
    defect.
    """

    word: Word
    pal_count: int
    bound: int
    defect: int
    is_rich: bool
    witness: Optional[RichnessWitness]

    def to_dict(self) -> dict:
        return {
            "word": self.word.text(),
            "pal_count": self.pal_count,
            "bound": self.bound,
            "defect": self.defect,
            "is_rich": self.is_rich,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


@dataclass(frozen=True)
class PrefixScan:
    """Per-prefix data from one pass of :class:`PalindromeTree`.

    Index ``m`` of each list refers to the prefix of length ``m + 1``.
    """

    lps_len: list[int]
    created: list[bool]
    gamma_grew: list[bool]
    pal_count: int
    gamma_size: int

    def bad_steps(self) -> list[int]:
        """Prefix lengths whose last letter broke richness."""
        return [
            m + 1
            for m, (new, grew) in enumerate(zip(self.created, self.gamma_grew))
            if not new and not grew
        ]

    def first_bad(self) -> Optional[int]:
        for m, (new, grew) in enumerate(zip(self.created, self.gamma_grew)):
            if not new and not grew:
                return m + 1
        return None


def scan_prefixes(theta: Antimorphism, w: Word) -> PrefixScan:
    _same_alphabet(theta.alphabet, w.alphabet)
    tree = PalindromeTree(theta)
    fixed = theta.fixed_chars()
    seen_pairs: set[frozenset[str]] = set()
    lps, created, grew = [], [], []
    for ch in w.code:
        g = False
        if ch not in fixed:
            pair = frozenset((ch, theta.char(ch)))
            if pair not in seen_pairs:
                seen_pairs.add(pair)
                g = True
        created.append(tree.append(ch))
        lps.append(tree.lps_len)
        grew.append(g)
    return PrefixScan(lps, created, grew, len(tree) + 1, len(seen_pairs))


def richness_report(theta: Antimorphism, w: Word) -> RichnessReport:
    """Count theta-palindromic factors against ``|w| + 1 - #gamma(w)``.

    Appending a letter adds at most one new theta-palindrome (the longest
    theta-palindromic suffix), and adds none when gamma grows; a prefix step
    with neither is exactly a unit of defect.
    """
    scan = scan_prefixes(theta, w)
    bound = len(w) + 1 - scan.gamma_size
    defect = bound - scan.pal_count
    witness = None
    m = scan.first_bad()
    if m is not None:
        prefix = w[:m]
        suffix = prefix[m - scan.lps_len[m - 1] :]
        witness = RichnessWitness(prefix, suffix, len(find_all(prefix.code, suffix.code)))
    return RichnessReport(w, scan.pal_count, bound, defect, defect == 0, witness)


def is_theta_rich(theta: Antimorphism, w: Word) -> bool:
    return richness_report(theta, w).is_rich


def rich_prefix_length(theta: Antimorphism, w: Word) -> int:
    """Length of the longest theta-rich prefix of ``w``."""
    m = scan_prefixes(theta, w).first_bad()
    return len(w) if m is None else m - 1


def theta_palindromic_closure(theta: Antimorphism, w: Word) -> Word:
    """Shortest theta-palindrome with prefix ``w``: ``p s theta(p)`` where
    ``s`` is the longest theta-palindromic suffix of ``w = p s``."""
    s = longest_theta_palindromic_suffix(theta, w)
    p = w.code[: len(w) - len(s)]
    return Word._trusted(w.alphabet, w.code + theta.apply_code(p))
