from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    LETTERS3,
    SWAP2,
    THETA_AAC,
    THETA_SWAP,
    bound,
    exhaustive,
    first_nonrich_prefix,
    is_rich,
    lps,
    occurrences,
    pal_factors,
)
from thetarich.core import Antimorphism, Alphabet, parse_theta
from thetarich.palindromic import (
    PalindromeTree,
    gamma,
    is_theta_rich,
    longest_theta_palindromic_suffix,
    rich_prefix_length,
    richness_report,
    scan_prefixes,
    theta_palindromic_closure,
    theta_palindromic_factors,
)

AAC = parse_theta("a<->a' c")
SWAP = parse_theta("a<->a'")


def check_against_oracle(theta, th, t):
    A = theta.alphabet
    w = A.word(t)
    pals = {tuple(p.letters) for p in theta_palindromic_factors(theta, w)}
    assert pals == pal_factors(th, t)
    assert tuple(longest_theta_palindromic_suffix(theta, w).letters) == lps(th, t)
    rep = richness_report(theta, w)
    assert rep.pal_count == len(pals)
    assert rep.bound == bound(th, t)
    assert rep.is_rich == is_rich(th, t)
    first = first_nonrich_prefix(th, t)
    if first is None:
        assert rep.witness is None
    else:
        assert len(rep.witness.prefix) == first
        s = lps(th, t[:first])
        assert tuple(rep.witness.suffix.letters) == s
        assert rep.witness.suffix_occurrences == len(occurrences(t[:first], s)) >= 2
    return rep


def test_exhaustive_swap_alphabet_up_to_10():
    for t in exhaustive(SWAP2, 10):
        check_against_oracle(SWAP, THETA_SWAP, t)


def test_exhaustive_three_letters_up_to_8():
    for t in exhaustive(LETTERS3, 8):
        check_against_oracle(AAC, THETA_AAC, t)


@given(st.lists(st.sampled_from(LETTERS3), max_size=40).map(tuple))
@settings(max_examples=300)
def test_random_longer_words(t):
    check_against_oracle(AAC, THETA_AAC, t)


@given(st.lists(st.sampled_from(["x", "y", "z", "u"]), max_size=30).map(tuple))
@settings(max_examples=200)
def test_plain_reversal(t):
    theta = Antimorphism.reversal(Alphabet(["x", "y", "z", "u"]))
    check_against_oracle(theta, {x: x for x in "xyzu"}, t)


class TestExamples:
    def test_caca_prime_is_not_rich(self):
        w = AAC.alphabet.parse("caca'")
        rep = richness_report(AAC, w)
        assert (rep.pal_count, rep.bound, rep.is_rich) == (3, 4, False)
        assert rep.witness.prefix.text() == "cac"
        assert rep.witness.suffix.text() == "c"
        assert rep.witness.suffix_occurrences == 2

    def test_ccaa_prime_is_rich(self):
        assert is_theta_rich(AAC, AAC.alphabet.parse("ccaa'" * 5))

    def test_gamma(self):
        w = AAC.alphabet.parse("a'c")
        assert gamma(AAC, w) == frozenset({frozenset({"a", "a'"})})
        assert gamma(AAC, AAC.alphabet.parse("cc")) == frozenset()

    def test_empty_word(self):
        rep = richness_report(AAC, AAC.alphabet.parse(""))
        assert rep.is_rich and rep.pal_count == 1 and rep.witness is None

    def test_rich_prefix_length(self):
        assert rich_prefix_length(AAC, AAC.alphabet.parse("caca'caca'")) == 2
        assert rich_prefix_length(AAC, AAC.alphabet.parse("ccaa'" * 3)) == 12


class TestClosure:
    def test_examples(self):
        A = AAC.alphabet
        assert theta_palindromic_closure(AAC, A.parse("ca")).text() == "caa'c"
        assert theta_palindromic_closure(AAC, A.parse("caa'c")).text() == "caa'c"
        assert theta_palindromic_closure(AAC, A.parse("")).text() == ""
        assert theta_palindromic_closure(AAC, A.parse("a")).text() == "aa'"

    @given(st.lists(st.sampled_from(LETTERS3), max_size=15).map(tuple))
    def test_closure_is_palindrome_with_prefix(self, t):
        w = AAC.alphabet.word(t)
        c = theta_palindromic_closure(AAC, w)
        assert c.startswith(w)
        assert c == AAC(c)
        assert len(c) <= 2 * len(w)


def test_tree_reports_one_new_palindrome_at_most():
    tree = PalindromeTree(AAC)
    for name in "c a a' c c a a' c a".split():
        before = len(tree)
        created = tree.append(AAC.alphabet.char(name))
        assert len(tree) - before == int(created)


@given(st.lists(st.sampled_from(LETTERS3), max_size=30).map(tuple))
def test_defect_equals_bad_steps(t):
    w = AAC.alphabet.word(t)
    rep = richness_report(AAC, w)
    assert rep.defect == len(scan_prefixes(AAC, w).bad_steps())
