"""
Iterated theta-palindromic closure
==================================

Starting from a seed and feeding one letter at a time, each step appends
the letter and closes the result into a theta-palindrome. Every step
extends the previous one, so the steps converge to an infinite word.
"""

# %%
from thetarich import parse_theta, psi_steps, richness_report, theta_standard_with_seed, unioccurrence_threshold

theta = parse_theta("a<->a' c")
A = theta.alphabet

for step in psi_steps(theta, A.parse(""), A.parse("ac"), 6):
    print(len(step), step.text())

# %%
# A seed that is not itself a palindrome can spoil richness for a while.
# The threshold below is the last prefix length lacking a fresh
# theta-palindromic suffix.
for seed in ["", "c", "ca", "cac"]:
    gen = theta_standard_with_seed(theta, A.parse(seed), A.parse("aa'c"))
    w = gen.prefix(400)
    rep = richness_report(theta, w)
    print(f"seed={seed!r:6} rich={rep.is_rich!s:5} defect={rep.defect} "
          f"threshold={unioccurrence_threshold(theta, w)}")

# %%
# With plain reversal and directive 0, 1 this is the classic construction
# of the Fibonacci word.
from thetarich import Antimorphism
from thetarich.generators import BINARY, fibonacci

rev = Antimorphism.reversal(BINARY)
gen = theta_standard_with_seed(rev, BINARY.parse(""), BINARY.parse("01"))
print(gen.prefix(30).text())
print(fibonacci().prefix(30).text())
