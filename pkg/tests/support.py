"""Shared test helpers: independent oracles and randomized poset corpora.

The oracles here deliberately avoid the library's own arithmetic paths:
polynomial products are checked against plain-list convolution, series
expansions against long division on plain lists, and Möbius polynomials
against the interval recursion summed pair by pair.
"""

from __future__ import annotations

import mobiuspoly as mp


def poly_mul_oracle(a: list, b: list) -> list:
    """Term-by-term convolution on plain coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    while out and out[-1] == 0:
        out.pop()
    return out


def long_division_prefix(num: list, den: list, k: int) -> list:
    """First k+1 power-series coefficients of num/den by long division."""
    assert den and den[0] == 1
    rem = list(num) + [0] * (k + 1 + len(den))
    out = []
    for _ in range(k + 1):
        c = rem[0]
        out.append(c)
        for i, d in enumerate(den):
            rem[i] -= c * d
        assert rem[0] == 0
        rem.pop(0)
    return out


def mobius_polynomial_oracle(poset, ranks) -> mp.IntPolynomial:
    """Sum mu(p,q) z^gap over all pairs, using the interval recursion."""
    coeffs: dict = {}
    for p in poset.labels:
        for q in poset.labels:
            if poset.leq(p, q):
                mu = mp.mobius_recursive(poset, p, q)
                if mu:
                    gap = ranks.rank(q) - ranks.rank(p)
                    coeffs[gap] = coeffs.get(gap, 0) + mu
    out = [0] * (max(coeffs, default=-1) + 1)
    for gap, c in coeffs.items():
        out[gap] = c
    return mp.IntPolynomial(out)


def stretch_ranks(poset, rng) -> mp.RankAssignment:
    """Random generalized ranks: strictly monotone, zero exactly on minima."""
    lower = {lab: [] for lab in poset.labels}
    for a, b in poset.covers_labels():
        lower[b].append(a)
    ranks: dict = {}
    for i in poset.linext:
        lab = poset.labels[i]
        parents = lower[lab]
        ranks[lab] = 0 if not parents else max(ranks[p] for p in parents) + rng.randint(1, 3)
    return mp.classify_ranks(poset, ranks)


def random_poset(rng, max_elements=6, generalized_prob=0.5, tag="e"):
    """Random valid (generalized) ranked poset with 1..max_elements elements."""
    n = rng.randint(1, max_elements)
    labels = [f"{tag}{i}" for i in range(n)]
    covers = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.35
    ]
    poset = mp.closure_from_covers(labels, covers)
    if rng.random() < generalized_prob:
        return poset, stretch_ranks(poset, rng)
    return poset, mp.infer_ranks(poset)


def compatible_perms(factors):
    """All factor permutations that only move a factor onto an isomorphic one."""
    import itertools

    n = len(factors)
    iso = [
        [mp.is_isomorphic(*factors[i], *factors[j]) for j in range(n)] for i in range(n)
    ]
    for perm in itertools.permutations(range(n)):
        if all(iso[k][perm[k]] for k in range(n)):
            yield perm


def family_corpus():
    """Small named posets used by several invariant tests."""
    corpus = [("chain_" + str(s), mp.chain(s)) for s in range(5)]
    corpus += [("boolean_" + str(n), mp.boolean(n)) for n in range(4)]
    corpus += [("divisor_" + str(n), mp.divisor_poset(n)) for n in (12, 30, 360)]
    return corpus
