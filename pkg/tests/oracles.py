"""Naive reference implementations.

Words are tuples of letter names and theta is a plain dict on names, so
nothing here shares code with the package.
"""

from itertools import product

SWAP2 = ("a", "a'")
LETTERS3 = ("a", "a'", "c")
THETA_SWAP = {"a": "a'", "a'": "a"}
THETA_AAC = {"a": "a'", "a'": "a", "c": "c"}


def exhaustive(letters, max_len):
    for n in range(max_len + 1):
        yield from product(letters, repeat=n)


def theta_of(th, w):
    return tuple(th[x] for x in reversed(w))


def is_pal(th, w):
    return theta_of(th, w) == w


def factors(w):
    return {w[i:j] for i in range(len(w) + 1) for j in range(i, len(w) + 1)}


def pal_factors(th, w):
    return {f for f in factors(w) if is_pal(th, f)}


def lps(th, w):
    for i in range(len(w) + 1):
        if is_pal(th, w[i:]):
            return w[i:]


def occurrences(w, f):
    return [i for i in range(len(w) - len(f) + 1) if w[i : i + len(f)] == f]


def complete_returns(w, f):
    occ = occurrences(w, f)
    return [w[i : j + len(f)] for i, j in zip(occ, occ[1:])]


def gamma_size(th, w):
    return len({frozenset((x, th[x])) for x in w if th[x] != x})


def bound(th, w):
    return len(w) + 1 - gamma_size(th, w)


def is_rich(th, w):
    return len(pal_factors(th, w)) == bound(th, w)


def first_nonrich_prefix(th, w):
    """Length of the shortest non-rich prefix, or None."""
    for m in range(len(w) + 1):
        if not is_rich(th, w[:m]):
            return m
    return None


def shortest_palindromes_with_prefix(th, letters, max_prefix):
    """Map every word ``w`` with ``|w| <= max_prefix`` to the set of
    shortest theta-palindromes having ``w`` as a prefix.

    Enumerates all theta-palindromes up to length ``2 * max_prefix``
    (``w theta(w)`` always qualifies, so nothing longer is needed).
    """
    best = {}
    for L in range(2 * max_prefix + 1):
        for half in product(letters, repeat=(L + 1) // 2):
            p = half + theta_of(th, half[: L // 2])
            if len(p) != L or not is_pal(th, p):
                continue
            for m in range(min(L, max_prefix) + 1):
                w = p[:m]
                cur = best.get(w)
                if cur is None or len(next(iter(cur))) > L:
                    best[w] = {p}
                elif len(next(iter(cur))) == L:
                    cur.add(p)
    return best


def factor_complexity(w, n):
    return len({w[i : i + n] for i in range(len(w) - n + 1)})


def pal_complexity(th, w, n):
    return sum(1 for f in {w[i : i + n] for i in range(len(w) - n + 1)} if is_pal(th, f))
