"""
Theta-palindromes and richness
==============================

A first look at an antimorphism theta and at the count of
theta-palindromic factors that decides whether a word is theta-rich.
"""

# %%
# The antimorphism below swaps ``a`` with ``a'`` and fixes ``c``. The order
# of letters in the theta string also fixes the alphabet.
from thetarich import parse_theta, richness_report, theta_palindromic_factors

theta = parse_theta("a<->a' c")
A = theta.alphabet
print(theta, A)

# %%
# ``theta`` reverses a word and maps each letter through the involution, so
# ``caa'c`` is a theta-palindrome while ``cac`` is not.
for text in ["caa'c", "cac", "aa'", "a"]:
    w = A.parse(text)
    print(f"{text:>6} -> {theta(w).text():>6}  palindrome={theta(w) == w}")

# %%
# A word of length n has at most n + 1 - #gamma theta-palindromic factors,
# where gamma collects the swapped letter pairs that occur. Words reaching
# the bound are theta-rich.
for text in ["ccaa'ccaa'", "caca'caca'"]:
    w = A.parse(text)
    rep = richness_report(theta, w)
    pals = sorted(p.text() or "ε" for p in theta_palindromic_factors(theta, w))
    print(text, rep.pal_count, "/", rep.bound, "rich" if rep.is_rich else "not rich")
    print("   ", pals)

# %%
# When a word is not rich the report names the shortest prefix whose longest
# theta-palindromic suffix already occurred earlier.
rep = richness_report(theta, A.parse("caca'caca'"))
wt = rep.witness
print(f"prefix {wt.prefix.text()!r} ends with {wt.suffix.text()!r}, "
      f"seen {wt.suffix_occurrences} times")

# %%
# The theta-palindromic closure appends as little as possible to reach a
# theta-palindrome.
from thetarich import theta_palindromic_closure

for text in ["ca", "cac", "a'c"]:
    print(text, "->", theta_palindromic_closure(theta, A.parse(text)).text())
