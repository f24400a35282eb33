import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    LETTERS3,
    SWAP2,
    THETA_AAC,
    THETA_SWAP,
    complete_returns,
    exhaustive,
    factors,
    is_pal,
    occurrences,
    theta_of,
)
from thetarich.core import (
    Alphabet,
    AlphabetError,
    Antimorphism,
    ParseError,
    Word,
    apply_theta,
    build_factor_index,
    complete_return_words,
    find_all,
    is_theta_palindrome,
    parse_theta,
    parse_word_spec,
)

AAC = parse_theta("a<->a' c")
SWAP = parse_theta("a<->a'")


def words(letters, max_size=12):
    return st.lists(st.sampled_from(letters), max_size=max_size).map(tuple)


class TestAlphabet:
    def test_greedy_tokenizing_prefers_longest_name(self):
        A = Alphabet(["a", "a'", "c"])
        assert A.tokenize("aa'ca") == ["a", "a'", "c", "a"]
        assert A.tokenize("a a' c") == ["a", "a'", "c"]

    def test_unknown_token_is_named(self):
        A = Alphabet(["a", "a'"])
        with pytest.raises(ParseError) as err:
            A.parse("aa'b")
        assert err.value.token == "b"

    def test_rejects_duplicates_and_blank_names(self):
        with pytest.raises(ValueError):
            Alphabet(["a", "a"])
        with pytest.raises(ValueError):
            Alphabet(["a b"])
        with pytest.raises(ValueError):
            Alphabet([])

    def test_all_words_counts(self):
        A = Alphabet(["x", "y", "z"])
        assert sum(1 for _ in A.all_words(4)) == 81
        assert [w.text() for w in A.all_words(1)] == ["x", "y", "z"]


class TestWord:
    def test_slicing_and_concat(self):
        w = AAC.alphabet.parse("caa'c")
        assert w[1:3].text() == "aa'"
        assert w[2] == "a'"
        assert (w[:1] + w[3:]).text() == "cc"
        assert len(w * 3) == 12

    def test_mixing_alphabets_fails(self):
        with pytest.raises(AlphabetError):
            AAC.alphabet.parse("a") + SWAP.alphabet.parse("a")

    def test_invalid_code_rejected(self):
        with pytest.raises(AlphabetError):
            Word(SWAP.alphabet, chr(0xE000 + 5))


class TestAntimorphism:
    def test_involution_required(self):
        A = Alphabet(["x", "y", "z"])
        with pytest.raises(ValueError):
            Antimorphism(A, {"x": "y", "y": "z", "z": "x"})

    def test_reversal_is_reversal(self):
        R = Antimorphism.reversal(Alphabet(["0", "1"]))
        assert R.is_reversal
        assert not AAC.is_reversal
        assert R.spec() == "0 1"

    def test_examples(self):
        A = AAC.alphabet
        assert apply_theta(AAC, A.parse("aa'c")).text() == "caa'"
        assert is_theta_palindrome(AAC, A.parse("caa'c"))
        assert not is_theta_palindrome(AAC, A.parse("aa"))
        assert is_theta_palindrome(AAC, A.parse(""))
        assert not is_theta_palindrome(AAC, A.parse("a"))
        assert is_theta_palindrome(AAC, A.parse("c"))

    @given(words(LETTERS3))
    def test_matches_oracle_and_is_involutive(self, t):
        w = AAC.alphabet.word(t)
        assert apply_theta(AAC, w).letters == list(theta_of(THETA_AAC, t))
        assert apply_theta(AAC, apply_theta(AAC, w)) == w
        assert is_theta_palindrome(AAC, w) == is_pal(THETA_AAC, t)

    @given(words(LETTERS3, 6), words(LETTERS3, 6))
    def test_antimorphism_law(self, u, v):
        U, V = AAC.alphabet.word(u), AAC.alphabet.word(v)
        assert apply_theta(AAC, U + V) == apply_theta(AAC, V) + apply_theta(AAC, U)


class TestParseTheta:
    def test_order_defines_alphabet(self):
        th = parse_theta("a<->a' c")
        assert th.alphabet.names == ("a", "a'", "c")
        assert th.letter("a") == "a'" and th.letter("c") == "c"

    def test_explicit_fixed_point_forms(self):
        assert parse_theta("c<->c a<->b").letter("c") == "c"

    def test_round_trip(self):
        for spec in ("a<->a' c", "0 1", "x<->y z<->w u"):
            assert parse_theta(spec).spec() == spec

    @pytest.mark.parametrize(
        "text, token",
        [("a<->", "a<->"), ("a<->b a", "a"), ("", ""), ("a<>b", "a<>b")],
    )
    def test_errors_name_the_token(self, text, token):
        with pytest.raises(ParseError) as err:
            parse_theta(text)
        assert err.value.token == token

    def test_with_alphabet_unlisted_letters_rejected(self):
        A = Alphabet(["a", "a'", "c"])
        with pytest.raises(ParseError) as err:
            parse_theta("a<->a'", A)
        assert err.value.token == "c"
        with pytest.raises(ParseError) as err:
            parse_theta("a<->a' c q", A)
        assert err.value.token == "q"


class TestWordSpec:
    def test_full_spec(self):
        spec = parse_word_spec("# demo\nalphabet: a a' c\ntheta: a<->a' c<->c\nword: c c a a'\n")
        assert spec.word.text() == "ccaa'"
        assert spec.theta.letter("a'") == "a"

    def test_alphabet_optional(self):
        spec = parse_word_spec("theta: 0 1\nword: 0110\n")
        assert spec.theta.is_reversal and len(spec.word) == 4

    def test_bad_line(self):
        with pytest.raises(ParseError) as err:
            parse_word_spec("theta: 0 1\nwrd: 01\n")
        assert err.value.token == "wrd: 01"

    def test_missing_theta(self):
        with pytest.raises(ParseError):
            parse_word_spec("word: 01\n")


class TestFactorIndex:
    @given(words(LETTERS3, 14), st.integers(0, 6))
    @settings(max_examples=200)
    def test_counts_and_specials_against_brute_force(self, t, max_len):
        w = AAC.alphabet.word(t)
        idx = build_factor_index(w, max_len)
        assert idx.max_len == min(max_len, len(t))
        fs = factors(t)
        for n in range(idx.max_len + 1):
            expected = sorted(f for f in fs if len(f) == n)
            assert sorted(tuple(f.letters) for f in idx.factors(n)) == expected
            for f in expected:
                if n + 1 > idx.max_len:
                    continue
                right = {g[-1] for g in fs if len(g) == n + 1 and g[:-1] == f}
                left = {g[0] for g in fs if len(g) == n + 1 and g[1:] == f}
                code = AAC.alphabet.word(f)
                assert idx.is_right_special(code) == (len(right) >= 2)
                assert idx.is_left_special(code) == (len(left) >= 2)

    def test_occurrences_beyond_max_len(self):
        w = AAC.alphabet.parse("caa'caa'c")
        idx = build_factor_index(w, 2)
        assert idx.occurrences(AAC.alphabet.parse("caa'c")) == [0, 3]

    def test_find_all_overlapping(self):
        assert find_all("aaaa", "aa") == [0, 1, 2]
        assert find_all("ab", "") == [0, 1, 2]


def test_complete_return_words_exhaustive():
    """Every factor of every word of length <= 8 over {a, a', c}."""
    A = AAC.alphabet
    for t in exhaustive(LETTERS3, 8):
        w = A.word(t)
        idx = build_factor_index(w, 0)
        for f in factors(t):
            if not f:
                continue
            got = [tuple(r.letters) for r in complete_return_words(idx, A.word(f))]
            assert got == complete_returns(t, f)


def test_occurrences_match_oracle_swap_alphabet():
    A = SWAP.alphabet
    for t in exhaustive(SWAP2, 10):
        w = A.word(t)
        idx = build_factor_index(w, 3)
        for f in ((), ("a",), ("a", "a'"), ("a'", "a", "a'"), ("a", "a", "a", "a")):
            assert idx.occurrences(A.word(f)) == occurrences(t, f)
