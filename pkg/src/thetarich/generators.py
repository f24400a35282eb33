"""Periodic, Sturmian, morphic and theta-standard words as prefix generators.

Every generator is deterministic and prefix-coherent: ``prefix(m)`` is the
first ``m`` letters of ``prefix(n)`` whenever ``m <= n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import cycle, islice
from typing import Callable, Iterator, Optional, Sequence

from .core import Alphabet, Antimorphism, ParseError, Word, _same_alphabet, parse_theta
from .palindromic import theta_palindromic_closure


class BudgetExceeded(RuntimeError):
    """An iterative construction hit its step budget before covering the
    requested prefix."""


class WordGenerator:
    """Lazily extended infinite word.

    ``extend`` receives the current code and returns a longer code that has
    it as a prefix. The longest code produced so far is memoized; since each
    extension is a deterministic function of the previous one, the memo does
    not affect results.
    """

    def __init__(
        self,
        kind: str,
        alphabet: Alphabet,
        extend: Callable[[str], str],
        params: Optional[dict] = None,
        spec: str = "",
        period: Optional[int] = None,
    ):
        self.kind = kind
        self.alphabet = alphabet
        self.params = dict(params or {})
        self.spec = spec or kind
        self.period = period
        self._extend = extend
        self._code = ""

    def __repr__(self) -> str:
        return f"WordGenerator({self.spec!r})"

    def _grow(self, n: int) -> str:
        code = self._code
        while len(code) < n:
            longer = self._extend(code)
            if len(longer) <= len(code) or not longer.startswith(code):
                raise RuntimeError(f"{self.spec}: extension step is not prefix-coherent")
            code = longer
        if len(code) > len(self._code):
            self._code = code
        return code

    def prefix_code(self, n: int) -> str:
        return self._grow(n)[:n]

    def prefix(self, n: int) -> Word:
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        return Word._trusted(self.alphabet, self.prefix_code(n))


def periodic_word(v: Word, spec: str = "") -> WordGenerator:
    """``v v v ...``"""
    if len(v) == 0:
        raise ValueError("periodic word needs a non-empty period")
    code = v.code

    def extend(cur: str) -> str:
        return cur + code if cur else code * 2

    return WordGenerator(
        "periodic", v.alphabet, extend, {"period": v.text()}, spec or f"periodic:{v.text()}", len(v)
    )


BINARY = Alphabet(["0", "1"])


def _directive_iter(directive: Sequence[int]) -> Iterator[int]:
    """A finite directive is repeated periodically."""
    if not directive:
        raise ValueError("directive must be non-empty")
    for d in directive:
        if int(d) < 1:
            raise ValueError(f"directive entries must be positive, got {d}")
    return cycle(int(d) for d in directive)


def standard_words(directive: Sequence[int], depth: int) -> list[str]:
    """Standard words ``s_-1 = 1, s_0 = 0, s_k = s_{k-1}^{d_k} s_{k-2}``,
    returned as plain ``'0'/'1'`` strings ``[s_-1, s_0, ..., s_depth]``."""
    seq = ["1", "0"]
    for d in islice(_directive_iter(directive), depth):
        seq.append(seq[-1] * d + seq[-2])
    return seq


def sturmian_standard(directive: Sequence[int], depth: Optional[int] = None) -> WordGenerator:
    """Characteristic Sturmian word over ``{0, 1}`` with the given directive.

    The directive is cycled when finite; all ones give the Fibonacci word.
    ``depth`` caps the recursion (``None`` means grow on demand).
    """
    directive = tuple(int(d) for d in directive)
    it = _directive_iter(directive)
    state = {"prev": "1", "cur": "0", "steps": 0}
    zero, one = BINARY.char("0"), BINARY.char("1")
    table = str.maketrans({"0": zero, "1": one})

    def extend(code: str) -> str:
        while True:
            if depth is not None and state["steps"] >= depth:
                raise BudgetExceeded(f"sturmian depth {depth} exhausted")
            d = next(it)
            state["prev"], state["cur"] = state["cur"], state["cur"] * d + state["prev"]
            state["steps"] += 1
            out = state["cur"].translate(table)
            if len(out) > len(code):
                return out

    spec = "sturmian:" + ",".join(map(str, directive))
    return WordGenerator("sturmian_standard", BINARY, extend, {"directive": list(directive)}, spec)


def fibonacci() -> WordGenerator:
    return sturmian_standard((1,))


@dataclass(frozen=True)
class Morphism:
    """Non-erasing morphism given by letter images."""

    source: Alphabet
    target: Alphabet
    images: dict[str, Word] = field(hash=False)

    def __post_init__(self):
        for a in self.source:
            if a not in self.images:
                raise ValueError(f"morphism has no image for {a!r}")
            img = self.images[a]
            _same_alphabet(self.target, img.alphabet)
            if len(img) == 0:
                raise ValueError(f"morphism is erasing on {a!r}")

    @classmethod
    def parse(cls, source: Alphabet, target: Alphabet, images: dict[str, str]) -> "Morphism":
        return cls(source, target, {a: target.parse(t) for a, t in images.items()})

    def table(self) -> dict[int, str]:
        return {ord(self.source.char(a)): self.images[a].code for a in self.source}

    def __call__(self, w: Word) -> Word:
        _same_alphabet(self.source, w.alphabet)
        return Word._trusted(self.target, w.code.translate(self.table()))

    def spec(self) -> str:
        return ",".join(f"{a}->{self.images[a].text()}" for a in self.source)


def morphic_image(m: Morphism, base: WordGenerator, spec: str = "") -> WordGenerator:
    """Image of an infinite word under a non-erasing morphism."""
    _same_alphabet(m.source, base.alphabet)
    table = m.table()

    def extend(code: str) -> str:
        n = max(2 * len(code), 16)
        return base.prefix_code(n).translate(table)

    return WordGenerator(
        "morphic_image",
        m.target,
        extend,
        {"morphism": m.spec(), "base": base.spec},
        spec or f"morphic:{m.spec()}@{base.spec}",
    )


DEFAULT_STEP_BUDGET = 64


def psi_steps(theta: Antimorphism, seed: Word, directive: Word, steps: int) -> list[Word]:
    """``[Psi(eps), Psi(t_0), Psi(t_0 t_1), ...]`` with ``steps`` closure steps,
    where ``Psi(eps) = seed`` and ``Psi(u x) = (Psi(u) x)^+``."""
    _same_alphabet(theta.alphabet, seed.alphabet)
    _same_alphabet(theta.alphabet, directive.alphabet)
    if len(directive) == 0 and steps:
        raise ValueError("empty directive")
    out = [seed]
    cur = seed
    for k in range(steps):
        x = directive.code[k % len(directive)]
        cur = theta_palindromic_closure(theta, Word._trusted(seed.alphabet, cur.code + x))
        out.append(cur)
    return out


def theta_standard_with_seed(
    theta: Antimorphism,
    seed: Word,
    directive: Word,
    step_budget: int = DEFAULT_STEP_BUDGET,
    spec: str = "",
) -> WordGenerator:
    """Limit of iterated right theta-palindromic closure driven by
    ``directive`` (cycled when finite), starting from ``seed``.

    Raises :class:`BudgetExceeded` if ``step_budget`` closure steps do not
    reach the requested length.
    """
    _same_alphabet(theta.alphabet, seed.alphabet)
    _same_alphabet(theta.alphabet, directive.alphabet)
    if len(directive) == 0:
        raise ValueError("empty directive")
    letters = directive.code
    alphabet = theta.alphabet
    state = {"k": 0, "cur": seed.code}

    def extend(code: str) -> str:
        while True:
            if state["k"] >= step_budget:
                raise BudgetExceeded(
                    f"theta-standard word: {step_budget} closure steps give only "
                    f"{len(state['cur'])} letters"
                )
            x = letters[state["k"] % len(letters)]
            state["k"] += 1
            state["cur"] = theta_palindromic_closure(
                theta, Word._trusted(alphabet, state["cur"] + x)
            ).code
            if len(state["cur"]) > len(code):
                return state["cur"]

    spec = spec or f"theta-standard:seed={seed.text()},directive={directive.text()}"
    return WordGenerator(
        "theta_standard_with_seed",
        alphabet,
        extend,
        {"theta": theta.spec(), "seed": seed.text(), "directive": directive.text()},
        spec,
    )


def unioccurrence_threshold(theta: Antimorphism, w: Word) -> int:
    """Largest prefix length of ``w`` having no unioccurrent
    theta-palindromic suffix (0 if every non-empty prefix has one).

    The longest theta-palindromic suffix of a prefix is unioccurrent exactly
    when it is a new palindrome, so one palindromic-tree pass suffices.
    """
    from .palindromic import scan_prefixes

    scan = scan_prefixes(theta, w)
    worst = 0
    for m, new in enumerate(scan.created, 1):
        if not new:
            worst = m
    return worst


# ---------------------------------------------------------------------------
# Builtin corpus
# ---------------------------------------------------------------------------

THETA_AAC = "a<->a' c"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    theta: Antimorphism
    make: Callable[[], WordGenerator] = field(compare=False)
    description: str = ""
    aperiodic: bool = True

    @property
    def generator(self) -> WordGenerator:
        return self.make()

    def __iter__(self):
        return iter((self.name, self.theta, self.make()))


def _aac() -> Antimorphism:
    return parse_theta(THETA_AAC)


def _pi(images: dict[str, str]) -> Morphism:
    return Morphism.parse(BINARY, _aac().alphabet, images)


def _pi_of_fibonacci(name: str, images: dict[str, str]) -> Callable[[], WordGenerator]:
    def make() -> WordGenerator:
        return morphic_image(_pi(images), fibonacci(), spec=f"morphic:{name}")

    return make


EX51 = {"0": "aa'", "1": "aa'c"}
EX52 = {"0": "a'cacc", "1": "a'cac"}
EX53 = {"0": "aa'", "1": "acca'"}

_EXTRAS: list[CorpusEntry] = []


def register_corpus_entry(entry: CorpusEntry) -> None:
    """Add a word to :func:`builtin_corpus` (names must be unique)."""
    if any(e.name == entry.name for e in builtin_corpus()):
        raise ValueError(f"corpus name {entry.name!r} already taken")
    _EXTRAS.append(entry)


def builtin_corpus() -> list[CorpusEntry]:
    aac = _aac()
    A = aac.alphabet
    entries = [
        CorpusEntry("ex5.1", aac, _pi_of_fibonacci("ex5.1", EX51),
                    "pi(Fibonacci), pi: 0->aa', 1->aa'c; theta-episturmian and theta-rich"),
        CorpusEntry("ex5.2", aac, _pi_of_fibonacci("ex5.2", EX52),
                    "pi(Fibonacci), pi: 0->a'cacc, 1->a'cac; theta-episturmian, not theta-rich"),
        CorpusEntry("ex5.3", aac, _pi_of_fibonacci("ex5.3", EX53),
                    "pi(Fibonacci), pi: 0->aa', 1->acca'; theta-rich, not theta-episturmian"),
        CorpusEntry("ex5.4", aac, lambda: periodic_word(A.parse("caca'")),
                    "(caca')^omega; periodic, not theta-rich", aperiodic=False),
        CorpusEntry("ex5.5", aac, lambda: periodic_word(A.parse("ccaa'")),
                    "(ccaa')^omega; periodic and theta-rich", aperiodic=False),
        CorpusEntry("fibonacci", Antimorphism.reversal(BINARY), fibonacci,
                    "Fibonacci word with plain reversal"),
        CorpusEntry("sturmian-1-2", Antimorphism.reversal(BINARY),
                    lambda: sturmian_standard((1, 2)),
                    "characteristic Sturmian word with directive (1,2)^omega, reversal"),
        CorpusEntry("theta-std-ac", aac,
                    lambda: theta_standard_with_seed(aac, A.parse(""), A.parse("ac"),
                                                     spec="theta-standard:seed=,directive=ac"),
                    "theta-standard word, empty seed, directive (ac)^omega"),
    ]
    return entries + list(_EXTRAS)


def corpus_entry(name: str) -> CorpusEntry:
    for e in builtin_corpus():
        if e.name == name:
            return e
    raise KeyError(name)


# ---------------------------------------------------------------------------
# Generator spec strings
# ---------------------------------------------------------------------------


def parse_generator(spec: str, theta: Optional[Antimorphism] = None) -> tuple[WordGenerator, Optional[Antimorphism]]:
    """Build a generator from a spec string.

    Grammar::

        periodic:<word>                        period over theta's alphabet
        sturmian:<d1>,<d2>,...                 directive, cycled
        morphic:<corpus name>                  e.g. morphic:ex5.1
        corpus:<corpus name>                   any builtin word
        theta-standard:seed=<word>,directive=<word>

    Returns the generator and the theta it should be analyzed with (the
    corpus theta for ``morphic``/``corpus``, otherwise the one passed in).
    """
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ParseError(f"generator spec {spec!r} lacks 'kind:'", spec)
    kind = kind.strip()
    arg = arg.strip()
    if kind in ("morphic", "corpus"):
        try:
            entry = corpus_entry(arg)
        except KeyError:
            raise ParseError(f"unknown corpus word {arg!r}", arg) from None
        if kind == "morphic" and entry.make().kind != "morphic_image":
            raise ParseError(f"{arg!r} is not a morphic corpus word", arg)
        return entry.make(), entry.theta
    if kind == "sturmian":
        parts = [p for p in arg.replace("...", "").split(",") if p.strip()]
        try:
            directive = [int(p) for p in parts]
        except ValueError:
            bad = next(p for p in parts if not p.strip().isdigit())
            raise ParseError(f"bad directive entry {bad!r}", bad) from None
        if not directive or min(directive) < 1:
            raise ParseError(f"directive must be positive integers: {arg!r}", arg)
        return sturmian_standard(directive), theta or Antimorphism.reversal(BINARY)
    if theta is None:
        raise ParseError(f"generator {kind!r} needs a theta spec", kind)
    if kind == "periodic":
        return periodic_word(theta.alphabet.parse(arg), spec=spec), theta
    if kind == "theta-standard":
        fields = {}
        for part in arg.split(","):
            key, eq, value = part.partition("=")
            if not eq or key.strip() not in ("seed", "directive"):
                raise ParseError(f"bad theta-standard field {part!r}", part)
            fields[key.strip()] = value.strip()
        if "directive" not in fields:
            raise ParseError("theta-standard needs directive=", arg)
        seed = theta.alphabet.parse(fields.get("seed", ""))
        directive = theta.alphabet.parse(fields["directive"])
        return theta_standard_with_seed(theta, seed, directive, spec=spec), theta
    raise ParseError(f"unknown generator kind {kind!r}", kind)
