"""Alphabets, involutory antimorphisms, words and the factor index.

Letters are opaque symbols with display names ("a'" is a single letter).
Internally every word is stored as a ``str`` code in which letter ``i`` is
the character ``chr(CODE_BASE + i)``; slicing, hashing and searching then
run at native string speed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

CODE_BASE = 0xE000


class AlphabetError(ValueError):
    """Raised when a word or map mixes letters from different alphabets."""


class ParseError(ValueError):
    """Raised on unparsable word, theta or word-spec text.

    ``token`` holds the offending piece of input.
    """

    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token


class Alphabet:
    """Ordered, finite set of named letters."""

    __slots__ = ("names", "_index", "_by_length")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("alphabet must contain at least one letter")
        for name in names:
            if not name or any(ch.isspace() for ch in name):
                raise ValueError(f"invalid letter name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate letter names in {names!r}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}
        # longest match first when tokenizing
        self._by_length = sorted(names, key=len, reverse=True)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({' '.join(self.names)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"unknown letter {name!r}", name) from None

    def char(self, name: str) -> str:
        return chr(CODE_BASE + self.index(name))

    def name_of(self, ch: str) -> str:
        return self.names[ord(ch) - CODE_BASE]

    def tokenize(self, text: str) -> list[str]:
        """Split ``text`` into letter names, greedily taking the longest
        matching name at each position. Whitespace separates tokens and is
        otherwise ignored."""
        out = []
        for chunk in text.split():
            pos = 0
            while pos < len(chunk):
                for name in self._by_length:
                    if chunk.startswith(name, pos):
                        out.append(name)
                        pos += len(name)
                        break
                else:
                    bad = chunk[pos:]
                    raise ParseError(f"cannot tokenize {bad!r} over {self!r}", bad)
        return out

    def parse(self, text: str) -> "Word":
        return Word(self, "".join(self.char(t) for t in self.tokenize(text)))

    def word(self, letters: Sequence[str]) -> "Word":
        """Build a word from an explicit sequence of letter names."""
        return Word(self, "".join(self.char(t) for t in letters))

    def letters(self) -> list["Word"]:
        return [Word(self, chr(CODE_BASE + i)) for i in range(len(self))]

    def all_words(self, length: int) -> Iterator["Word"]:
        """Every word of the given length, in lexicographic letter order."""
        from itertools import product

        chars = [chr(CODE_BASE + i) for i in range(len(self))]
        for combo in product(chars, repeat=length):
            yield Word(self, "".join(combo))


class Word:
    """Immutable finite word over an :class:`Alphabet`."""

    __slots__ = ("alphabet", "code")

    def __init__(self, alphabet: Alphabet, code: str = ""):
        top = CODE_BASE + len(alphabet)
        for ch in code:
            if not CODE_BASE <= ord(ch) < top:
                raise AlphabetError(f"letter code {ord(ch) - CODE_BASE} not in {alphabet!r}")
        self.alphabet = alphabet
        self.code = code

    @classmethod
    def _trusted(cls, alphabet: Alphabet, code: str) -> "Word":
        w = cls.__new__(cls)
        w.alphabet = alphabet
        w.code = code
        return w

    def __len__(self) -> int:
        return len(self.code)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word._trusted(self.alphabet, self.code[key])
        return self.alphabet.name_of(self.code[key])

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        _same_alphabet(self.alphabet, other.alphabet)
        return Word._trusted(self.alphabet, self.code + other.code)

    def __mul__(self, k: int) -> "Word":
        return Word._trusted(self.alphabet, self.code * k)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self.code == other.code
            and self.alphabet == other.alphabet
        )

    def __lt__(self, other: "Word") -> bool:
        return self.code < other.code

    def __hash__(self) -> int:
        return hash(self.code)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Word({self.text()!r})"

    def text(self, sep: str = "") -> str:
        return sep.join(self.alphabet.name_of(ch) for ch in self.code)

    @property
    def letters(self) -> list[str]:
        return [self.alphabet.name_of(ch) for ch in self.code]

    def startswith(self, prefix: "Word") -> bool:
        return self.code.startswith(prefix.code)

    def endswith(self, suffix: "Word") -> bool:
        return self.code.endswith(suffix.code)


def _same_alphabet(a: Alphabet, b: Alphabet) -> None:
    if a != b:
        raise AlphabetError(f"alphabet mismatch: {a!r} vs {b!r}")


class Antimorphism:
    """Involutory antimorphism: reversal composed with a letter involution.

    ``mapping`` sends letter names to letter names and must cover the whole
    alphabet. Non-involutions are rejected at construction.
    """

    __slots__ = ("alphabet", "perm", "_table")

    def __init__(self, alphabet: Alphabet, mapping: dict[str, str]):
        missing = [a for a in alphabet if a not in mapping]
        if missing:
            raise ValueError(f"antimorphism leaves letters unmapped: {missing}")
        extra = [a for a in mapping if a not in alphabet]
        if extra:
            raise ValueError(f"antimorphism maps unknown letters: {extra}")
        perm = tuple(alphabet.index(mapping[a]) for a in alphabet)
        for i, j in enumerate(perm):
            if perm[j] != i:
                raise ValueError(
                    f"not an involution: {alphabet.names[i]} -> {alphabet.names[j]}"
                    f" -> {alphabet.names[perm[j]]}"
                )
        self.alphabet = alphabet
        self.perm = perm
        self._table = {CODE_BASE + i: CODE_BASE + j for i, j in enumerate(perm)}

    @classmethod
    def reversal(cls, alphabet: Alphabet) -> "Antimorphism":
        return cls(alphabet, {a: a for a in alphabet})

    @classmethod
    def from_pairs(cls, alphabet: Alphabet, pairs: Iterable[tuple[str, str]]) -> "Antimorphism":
        mapping = {}
        for a, b in pairs:
            mapping[a] = b
            mapping[b] = a
        return cls(alphabet, mapping)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Antimorphism)
            and self.alphabet == other.alphabet
            and self.perm == other.perm
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.perm))

    def __repr__(self) -> str:
        return f"Antimorphism({self.spec()!r})"

    @property
    def is_reversal(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    def letter(self, name: str) -> str:
        return self.alphabet.names[self.perm[self.alphabet.index(name)]]

    def is_fixed(self, name: str) -> bool:
        return self.letter(name) == name

    def fixed_chars(self) -> frozenset[str]:
        return frozenset(chr(CODE_BASE + i) for i, j in enumerate(self.perm) if i == j)

    def char(self, ch: str) -> str:
        return chr(self._table[ord(ch)])

    def apply_code(self, code: str) -> str:
        return code[::-1].translate(self._table)

    def is_palindrome_code(self, code: str) -> bool:
        return code == code[::-1].translate(self._table)

    def __call__(self, w: Word) -> Word:
        return apply_theta(self, w)

    def spec(self) -> str:
        """Canonical text form, e.g. ``"a<->a' c"``."""
        parts, seen = [], set()
        for i, j in enumerate(self.perm):
            if i in seen:
                continue
            seen.update((i, j))
            a, b = self.alphabet.names[i], self.alphabet.names[j]
            parts.append(a if i == j else f"{a}<->{b}")
        return " ".join(parts)


def apply_theta(theta: Antimorphism, w: Word) -> Word:
    """Reverse ``w`` and apply the letter involution of ``theta``."""
    _same_alphabet(theta.alphabet, w.alphabet)
    return Word._trusted(w.alphabet, theta.apply_code(w.code))


def is_theta_palindrome(theta: Antimorphism, w: Word) -> bool:
    _same_alphabet(theta.alphabet, w.alphabet)
    return theta.is_palindrome_code(w.code)


def find_all(haystack: str, needle: str) -> list[int]:
    """All (possibly overlapping) start positions of ``needle``."""
    if not needle:
        return list(range(len(haystack) + 1))
    out = []
    i = haystack.find(needle)
    while i != -1:
        out.append(i)
        i = haystack.find(needle, i + 1)
    return out


@dataclass(frozen=True, eq=False)
class FactorIndex:
    """Factors of ``source`` up to length ``max_len`` with occurrence lists.

    Special flags are *observed* on this finite window: a factor is right
    special when at least two distinct right extensions occur in the source.
    """

    source: Word
    max_len: int
    _occ: tuple[dict[str, list[int]], ...] = field(repr=False)
    _right: tuple[dict[str, frozenset[str]], ...] = field(repr=False)
    _left: tuple[dict[str, frozenset[str]], ...] = field(repr=False)

    @property
    def alphabet(self) -> Alphabet:
        return self.source.alphabet

    @property
    def code(self) -> str:
        return self.source.code

    def _check_len(self, n: int) -> None:
        if not 0 <= n <= self.max_len:
            raise ValueError(f"length {n} outside indexed range 0..{self.max_len}")

    def codes(self, n: int) -> list[str]:
        """Sorted factor codes of length ``n``."""
        self._check_len(n)
        return sorted(self._occ[n])

    def factors(self, n: int) -> list[Word]:
        return [Word._trusted(self.alphabet, c) for c in self.codes(n)]

    def count(self, n: int) -> int:
        self._check_len(n)
        return len(self._occ[n])

    def __contains__(self, f: Word | str) -> bool:
        code = f.code if isinstance(f, Word) else f
        if len(code) <= self.max_len:
            return code in self._occ[len(code)]
        return code in self.code

    def occurrences(self, f: Word | str) -> list[int]:
        """Sorted 0-based start positions of ``f``; works beyond ``max_len``
        by scanning the source."""
        code = f.code if isinstance(f, Word) else f
        if len(code) <= self.max_len:
            return list(self._occ[len(code)].get(code, ()))
        return find_all(self.code, code)

    def right_extensions(self, f: Word | str) -> frozenset[str]:
        code = f.code if isinstance(f, Word) else f
        if len(code) >= self.max_len:
            raise ValueError(f"extensions need factors of length {len(code) + 1} > max_len")
        return self._right[len(code)].get(code, frozenset())

    def left_extensions(self, f: Word | str) -> frozenset[str]:
        code = f.code if isinstance(f, Word) else f
        if len(code) >= self.max_len:
            raise ValueError(f"extensions need factors of length {len(code) + 1} > max_len")
        return self._left[len(code)].get(code, frozenset())

    def is_right_special(self, f: Word | str) -> bool:
        return len(self.right_extensions(f)) >= 2

    def is_left_special(self, f: Word | str) -> bool:
        return len(self.left_extensions(f)) >= 2

    def is_special(self, f: Word | str) -> bool:
        return self.is_left_special(f) or self.is_right_special(f)

    def is_bispecial(self, f: Word | str) -> bool:
        return self.is_left_special(f) and self.is_right_special(f)

    def special_codes(self, n: int) -> list[str]:
        """Sorted codes of length ``n`` that are left or right special."""
        return [c for c in self.codes(n) if self.is_special(c)]

    def word(self, code: str) -> Word:
        return Word._trusted(self.alphabet, code)


def build_factor_index(w: Word, max_len: int) -> FactorIndex:
    """Index every factor of ``w`` of length at most ``max_len`` (clamped
    to ``|w|``)."""
    code = w.code
    size = len(code)
    max_len = max(0, min(max_len, size))
    occ: list[dict[str, list[int]]] = [{"": list(range(size + 1))}]
    for n in range(1, max_len + 1):
        table: dict[str, list[int]] = {}
        for i in range(size - n + 1):
            table.setdefault(code[i : i + n], []).append(i)
        occ.append(table)
    right: list[dict[str, frozenset[str]]] = []
    left: list[dict[str, frozenset[str]]] = []
    for n in range(max_len):
        r: dict[str, set[str]] = {}
        l: dict[str, set[str]] = {}
        for g in occ[n + 1]:
            r.setdefault(g[:-1], set()).add(g[-1])
            l.setdefault(g[1:], set()).add(g[0])
        right.append({k: frozenset(v) for k, v in r.items()})
        left.append({k: frozenset(v) for k, v in l.items()})
    return FactorIndex(w, max_len, tuple(occ), tuple(right), tuple(left))


def complete_return_words(idx: FactorIndex, f: Word) -> list[Word]:
    """Factors spanning each pair of consecutive occurrences of ``f``,
    ordered by the first occurrence. Empty when ``f`` occurs fewer than
    twice."""
    _same_alphabet(idx.alphabet, f.alphabet)
    occ = idx.occurrences(f)
    n = len(f)
    code = idx.code
    return [Word._trusted(idx.alphabet, code[i : j + n]) for i, j in zip(occ, occ[1:])]


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

_SWAP = re.compile(r"^(\S+?)<->(\S+)$")


def parse_theta(text: str, alphabet: Alphabet | None = None) -> Antimorphism:
    """Parse ``"a<->a' c"`` style theta specs.

    Cycles are space separated; ``x<->y`` is a swap, ``x`` or ``x<->x`` a
    fixed letter. Without an explicit alphabet, the letters are taken in
    order of first appearance. With one, every letter must be listed.
    """
    pairs: list[tuple[str, str]] = []
    order: list[str] = []
    for tok in text.split():
        m = _SWAP.match(tok)
        if m:
            a, b = m.group(1), m.group(2)
        elif "<" in tok or ">" in tok:
            raise ParseError(f"malformed theta cycle {tok!r}", tok)
        else:
            a = b = tok
        for x in dict.fromkeys((a, b)):
            if x in order:
                raise ParseError(f"letter {x!r} listed twice in theta spec", x)
            order.append(x)
        pairs.append((a, b))
    if not pairs:
        raise ParseError("empty theta spec", text)
    if alphabet is None:
        alphabet = Alphabet(order)
    else:
        for x in order:
            if x not in alphabet:
                raise ParseError(f"theta mentions unknown letter {x!r}", x)
        unlisted = [a for a in alphabet if a not in order]
        if unlisted:
            raise ParseError(f"theta spec does not list letter {unlisted[0]!r}", unlisted[0])
    return Antimorphism.from_pairs(alphabet, pairs)


@dataclass(frozen=True)
class WordSpec:
    alphabet: Alphabet
    theta: Antimorphism
    word: Word


def parse_word_spec(text: str) -> WordSpec:
    """Parse the three-line word-spec format::

        alphabet: a a' c
        theta: a<->a' c<->c
        word: c c a a'

    ``#`` starts a comment. ``alphabet`` is optional (taken from ``theta``).
    """
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in ("alphabet", "theta", "word"):
            raise ParseError(f"line {lineno}: expected 'alphabet:', 'theta:' or 'word:'", line)
        if key in fields:
            raise ParseError(f"line {lineno}: duplicate {key!r}", key)
        fields[key] = value.strip()
    if "theta" not in fields:
        raise ParseError("word spec needs a 'theta:' line", "theta")
    alphabet = Alphabet(fields["alphabet"].split()) if "alphabet" in fields else None
    theta = parse_theta(fields["theta"], alphabet)
    word = theta.alphabet.parse(fields.get("word", ""))
    return WordSpec(theta.alphabet, theta, word)
