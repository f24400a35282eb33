"""
Bispecial factors and return words
==================================

A theta-episturmian word has at most one left special factor of each
length. Its bispecial factors form a chain w_0, w_1, ... and the complete
return words to them have a rigid shape. The same counts also decide
richness from just two numbers, P(1) + P(2) against C(2) - C(1) + 2.
"""

# %%
from thetarich import build_factor_index, corpus_entry, episturmian_profile
from thetarich import episturmian_richness_criterion, prop51_structure_check

for name in ["ex5.1", "ex5.2", "ex5.3"]:
    e = corpus_entry(name)
    idx = build_factor_index(e.make().prefix(3000), 31)
    ep = episturmian_profile(e.theta, idx)
    print(name, "episturmian on window:", ep.is_theta_episturmian_on_window)
    if not ep.is_theta_episturmian_on_window:
        n, lefts = ep.first_double_left_special
        print("   two left special factors of length", n, [idx.word(c).text() for c in lefts])
        continue
    print("   bispecial lengths", ep.lengths)
    crit = episturmian_richness_criterion(e.theta, idx, ep)
    print(f"   P(1)+P(2)={crit.lhs}  dC(1)+2={crit.rhs_plus2} -> rich={crit.rich}"
          f"   (with +1: {crit.rhs_plus1} -> {crit.holds_plus1})")

# %%
# Return words to the first bispecials of the first word. A theta-fixed
# letter always yields a theta-palindromic return word.
e = corpus_entry("ex5.1")
idx = build_factor_index(e.make().prefix(3000), 31)
ep = episturmian_profile(e.theta, idx)
for b in ep.bispecials[:5]:
    rets = {idx.word(a).text(): idx.word(r).text() for a, r in sorted(b.returns.items())}
    print(b.k, idx.word(b.code).text() or "ε", rets)

# %%
rep = prop51_structure_check(e.theta, idx, ep, max_k=6)
print("structure holds:", rep.holds, "clauses checked:", len(rep.checked))
print("observed k_a:", ep.to_dict()["k_a"])
