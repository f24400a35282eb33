"""
Factor versus palindromic complexity
====================================

For an infinite word whose language is closed under theta,
``P(n) + P(n+1) <= C(n+1) - C(n) + 2`` at every length n, and equality for
all n >= 1 happens exactly for theta-rich words. This script measures both
sides on the builtin words.
"""

# %%
from thetarich import builtin_corpus, closure_under_theta, complexity_profile, rich_prefix_length
from thetarich.complexity import sufficient_window

N = 12
for entry in builtin_corpus():
    gen = entry.make()
    w = gen.prefix(sufficient_window(N + 1, gen.period))
    prof = complexity_profile(entry.theta, w, N, source=gen.spec)
    closed = closure_under_theta(entry.theta, w, N + 1).verdict
    rich = rich_prefix_length(entry.theta, w) == len(w)
    marks = "".join({"equal": "=", "strict": "<", "violated": "!"}[s] for s in prof.statuses())
    print(f"{entry.name:<13} {closed:<17} rich={rich!s:<5} n=0..{N}: {marks}")

# %%
# A single table in full. The first row is always strict when theta is not
# plain reversal, since some letter cannot be a palindrome.
entry = builtin_corpus()[0]
prof = complexity_profile(entry.theta, entry.make().prefix(1000), 8)
print(prof.to_csv())

# %%
# The periodic word (ccaa')^ω has no special factor from length 2 on, and
# there the left side drops to exactly 2.
from thetarich import corpus_entry

e = corpus_entry("ex5.5")
prof = complexity_profile(e.theta, e.make().prefix(60), 10)
print([r.lhs for r in prof.rows])
