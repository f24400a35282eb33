import pytest

from oracles import LETTERS3, SWAP2, THETA_AAC, THETA_SWAP, exhaustive, is_pal, is_rich
from thetarich.characterize import (
    ALTERNATION,
    CRW_PALINDROME,
    V_THETA_V,
    check_alternation,
    check_letter_alternation,
    check_return_words_palindromic,
    check_sufficient,
    check_ups,
    check_v_thetaV_factors,
    cross_check_characterizations,
    episturmian_profile,
    episturmian_richness_criterion,
    prop51_structure_check,
)
from thetarich.complexity import profile_from_index
from thetarich.core import build_factor_index, parse_theta
from thetarich.generators import builtin_corpus, corpus_entry

AAC = parse_theta("a<->a' c")
SWAP = parse_theta("a<->a'")


def window(name, n, max_len):
    e = corpus_entry(name)
    w = e.make().prefix(n)
    return e.theta, w, build_factor_index(w, max_len)


@pytest.mark.parametrize(
    "theta, th, letters, size",
    [(SWAP, THETA_SWAP, SWAP2, 10), (AAC, THETA_AAC, LETTERS3, 8)],
    ids=["swap-10", "aac-8"],
)
def test_routes_agree_with_oracle_exhaustively(theta, th, letters, size):
    for t in exhaustive(letters, size):
        w = theta.alphabet.word(t)
        idx = build_factor_index(w, len(t))
        rich = is_rich(th, t)
        assert check_ups(theta, w).holds == rich, t
        assert check_v_thetaV_factors(theta, idx).holds == rich, t
        if check_sufficient(theta, idx).holds:
            assert rich, t


class TestReturnWordsPalindromic:
    def test_ccaa_holds(self):
        theta, w, idx = window("ex5.5", 200, 10)
        assert check_return_words_palindromic(theta, idx).holds

    def test_caca_fails_with_cac(self):
        theta, w, idx = window("ex5.4", 200, 10)
        res = check_return_words_palindromic(theta, idx)
        assert not res.holds and res.property_id == CRW_PALINDROME
        assert res.counterexample["return_word"] == "cac"
        assert not is_pal(THETA_AAC, ("c", "a", "c"))

    def test_single_fixed_letter(self):
        assert check_return_words_palindromic(AAC, build_factor_index(AAC.alphabet.parse("c"), 1))


class TestAlternation:
    def test_example51_letters_alternate(self):
        theta, w, idx = window("ex5.1", 2000, 5)
        assert check_alternation(theta, idx, w.alphabet.parse("a")).holds
        assert check_letter_alternation(theta, idx).holds

    def test_caca_ca_scan(self):
        theta, w, idx = window("ex5.4", 200, 5)
        res = check_alternation(theta, idx, w.alphabet.parse("ca"))
        occ = sorted([(i, 0) for i in idx.occurrences(w.alphabet.parse("ca"))]
                     + [(i, 1) for i in idx.occurrences(w.alphabet.parse("a'c"))])
        expected = all(x[1] != y[1] for x, y in zip(occ, occ[1:]))
        assert res.holds == expected

    def test_aab_fails(self):
        th = parse_theta("a<->b")
        idx = build_factor_index(th.alphabet.parse("aab"), 3)
        res = check_alternation(th, idx, th.alphabet.parse("a"))
        assert not res.holds and res.property_id == ALTERNATION
        assert res.counterexample["positions"] == [0, 1]

    def test_palindrome_rejected(self):
        idx = build_factor_index(AAC.alphabet.parse("caa'c"), 3)
        with pytest.raises(ValueError):
            check_alternation(AAC, idx, AAC.alphabet.parse("aa'"))


class TestVThetaV:
    def test_ccaa_holds(self):
        theta, w, idx = window("ex5.5", 200, 12)
        assert check_v_thetaV_factors(theta, idx).holds

    def test_example52_fails_with_witness(self):
        theta, w, idx = window("ex5.2", 2000, 20)
        res = check_v_thetaV_factors(theta, idx)
        assert not res.holds and res.property_id == V_THETA_V
        cx = res.counterexample
        factor = w.alphabet.parse(cx["factor"])
        assert not theta.is_palindrome_code(factor.code)
        i, j = cx["positions"]
        assert w[i : j + len(w.alphabet.parse(cx["v"]))] == factor

    def test_single_letter(self):
        assert check_v_thetaV_factors(AAC, build_factor_index(AAC.alphabet.parse("c"), 1)).holds


class TestCrossCheck:
    def test_ccaa_all_true(self):
        theta, w, _ = window("ex5.5", 400, 1)
        cc = cross_check_characterizations(theta, w)
        assert cc.consistent and all(cc.values.values())

    def test_caca_all_false(self):
        theta, w, _ = window("ex5.4", 400, 1)
        cc = cross_check_characterizations(theta, w)
        assert cc.consistent
        for key in ("rich_count", "ups", "v_theta_v", "sufficient", "equality"):
            assert cc.values[key] is False

    @pytest.mark.parametrize("entry", builtin_corpus(), ids=lambda e: e.name)
    def test_corpus(self, entry):
        cc = cross_check_characterizations(entry.theta, entry.make().prefix(1000))
        assert cc.consistent, cc.violations
        assert not cc.partial


class TestEpisturmian:
    def test_example51(self):
        theta, w, idx = window("ex5.1", 3000, 31)
        ep = episturmian_profile(theta, idx)
        assert ep.is_theta_episturmian_on_window
        assert all(c <= 1 for c in ep.left_special_counts)
        assert ep.lengths[:6] == [0, 2, 4, 9, 16, 28]
        assert all(v is not None for v in ep.k_a.values())
        assert all(ep.k_a_determined.values())
        assert ep.lengths == sorted(set(ep.lengths))

    def test_example53_not_episturmian(self):
        theta, w, idx = window("ex5.3", 2000, 21)
        ep = episturmian_profile(theta, idx)
        assert not ep.is_theta_episturmian_on_window
        n, lefts = ep.first_double_left_special
        assert n == 1 and sorted(idx.word(c).text() for c in lefts) == ["a'", "c"]

    def test_periodic_has_finitely_many_bispecials(self):
        theta, w, idx = window("ex5.5", 400, 21)
        ep = episturmian_profile(theta, idx)
        assert ep.lengths == [0, 1]

    @pytest.mark.parametrize("name", ["ex5.1", "ex5.2", "theta-std-ac"])
    def test_complexity_growth_drops(self, name):
        theta, w, idx = window(name, 3000, 31)
        ep = episturmian_profile(theta, idx)
        prof = profile_from_index(theta, build_factor_index(w, 61), 60)
        drops = [n for n in ep.lengths if n <= 60 and prof[n].dC < len(theta.alphabet) - 1]
        assert drops

    def test_to_dict_readable(self):
        theta, w, idx = window("ex5.1", 1000, 11)
        d = episturmian_profile(theta, idx).to_dict()
        assert d["bispecials"][1]["word"] == "aa'"
        assert set(d["k_a"]) == {"a", "a'"}


class TestCriterion:
    def test_example51(self):
        theta, w, idx = window("ex5.1", 3000, 31)
        crit = episturmian_richness_criterion(theta, idx)
        assert (crit.lhs, crit.rhs_plus2, crit.rich) == (3, 3, True)
        assert crit.rhs_plus1 == 2 and not crit.holds_plus1

    def test_example52(self):
        theta, w, idx = window("ex5.2", 3000, 31)
        assert not episturmian_richness_criterion(theta, idx).rich

    def test_fibonacci(self):
        theta, w, idx = window("fibonacci", 2000, 31)
        crit = episturmian_richness_criterion(theta, idx)
        assert crit.rich and crit.lhs == 2 + 1

    def test_rejects_non_episturmian(self):
        theta, w, idx = window("ex5.3", 2000, 21)
        with pytest.raises(ValueError):
            episturmian_richness_criterion(theta, idx)


class TestStructure:
    @pytest.mark.parametrize("name", ["ex5.1", "ex5.2", "theta-std-ac", "fibonacci"])
    def test_clauses_hold(self, name):
        theta, w, idx = window(name, 3000, 31)
        rep = prop51_structure_check(theta, idx)
        assert rep.holds, rep.failures
        assert rep.checked

    def test_trivial_k0(self):
        theta, w, idx = window("ex5.1", 3000, 31)
        rep = prop51_structure_check(theta, idx, max_k=0)
        assert rep.holds
        clauses = {c for _, _, c in rep.checked}
        assert "fixed_letter_palindrome" in clauses
