"""Poset families and composite constructions.

Chains, Boolean lattices and divisor posets are each described once as
(labels, covers, ranks) data, consumed both by the Poset constructors here
and by the CLI's file generator (which can then stream large instances
without building the transitive closure).

Products enumerate elements in left-major lexicographic order over the
factors' linear extensions, which keeps the zeta/Möbius matrices of a
product equal to the Kronecker product of the factors' matrices with no
permutation bookkeeping.
"""

from __future__ import annotations

import itertools

from .errors import InputError
from .incidence import mobius_polynomial
from .polynomial import IntPolynomial, ONE
from .poset import (
    GENERALIZED,
    RANKED,
    Poset,
    PosetAutomorphism,
    RankAssignment,
    automorphism,
    closure_from_covers,
    find_isomorphism,
)

BOOLEAN_MAX = 16
DIVISOR_MAX = 10**9


def chain_data(s: int):
    if s < 0:
        raise InputError(f"chain length must be >= 0, got {s}")
    labels = [str(i) for i in range(s + 1)]
    covers = [(str(i), str(i + 1)) for i in range(s)]
    ranks = {str(i): i for i in range(s + 1)}
    return labels, covers, ranks


def chain(s: int):
    """Total order on s+1 elements "0".."s" with rank i at element i."""
    labels, covers, ranks = chain_data(s)
    return closure_from_covers(labels, covers), RankAssignment(ranks, RANKED)


def _subset_label(bits: int) -> str:
    members = [str(i + 1) for i in range(bits.bit_length()) if bits >> i & 1]
    return "{" + ",".join(members) + "}"


def boolean_data(n: int):
    if not 0 <= n <= BOOLEAN_MAX:
        raise InputError(f"boolean lattice size must be in 0..{BOOLEAN_MAX}, got {n}")
    labels = [_subset_label(k) for k in range(1 << n)]
    covers = []
    for k in range(1 << n):
        for e in range(n):
            if not k >> e & 1:
                covers.append((labels[k], labels[k | 1 << e]))
    ranks = {labels[k]: bin(k).count("1") for k in range(1 << n)}
    return labels, covers, ranks


def boolean(n: int):
    """Subset lattice of {1..n}; subsets in binary-counter order, rank = size."""
    labels, covers, ranks = boolean_data(n)
    return closure_from_covers(labels, covers), RankAssignment(ranks, RANKED)


def factorize(n: int) -> list:
    """Prime factorization [(p, multiplicity), ...] by trial division."""
    if n < 1:
        raise InputError(f"cannot factorize {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out

def divisor_data(n: int):
    if not 1 <= n <= DIVISOR_MAX:
        raise InputError(f"divisor poset needs 1 <= n <= {DIVISOR_MAX}, got {n}")
    primes = [p for p, _ in factorize(n)]
    divisors = [1]
    for p, e in factorize(n):
        divisors = [d * p**k for d in divisors for k in range(e + 1)]
    divisors.sort()
    labels = [str(d) for d in divisors]
    covers = []
    for d in divisors:
        for p in primes:
            if n % (d * p) == 0:
                covers.append((str(d), str(d * p)))
    ranks = {str(d): _omega(d) for d in divisors}
    return labels, covers, ranks


def _omega(m: int) -> int:
    return sum(e for _, e in factorize(m)) if m > 1 else 0


def divisor_poset(n: int):
    """Divisors of n ordered by divisibility, rank = prime factors with multiplicity."""
    labels, covers, ranks = divisor_data(n)
    return closure_from_covers(labels, covers), RankAssignment(ranks, RANKED)


def product_poset(factors):
    """Direct product of any number of (Poset, RankAssignment) factors.

    Elements are component tuples labeled "(a,b,...)" in left-major
    lexicographic order; ranks add.  A single factor is returned unchanged.
    """
    factors = list(factors)
    if not factors:
        raise InputError("product of zero posets")
    if len(factors) == 1:
        return factors[0]
    bases = [poset.basis_labels() for poset, _ in factors]
    # per-factor up-sets over basis positions
    ups = []
    for (poset, _), base in zip(factors, bases):
        pos = {lab: t for t, lab in enumerate(base)}
        ups.append([
            sorted(pos[poset.labels[j]] for j in poset.up[poset.index[lab]])
            for lab in base
        ])
    sizes = [len(b) for b in bases]
    strides = [1] * len(sizes)
    for k in range(len(sizes) - 2, -1, -1):
        strides[k] = strides[k + 1] * sizes[k + 1]

    labels = []
    up_sets = []
    for combo in itertools.product(*[range(s) for s in sizes]):
        labels.append("(" + ",".join(bases[k][c] for k, c in enumerate(combo)) + ")")
        members = set()
        for upper in itertools.product(*[ups[k][c] for k, c in enumerate(combo)]):
            members.add(sum(u * strides[k] for k, u in enumerate(upper)))
        up_sets.append(frozenset(members))
    ranks = {}
    for i, combo in enumerate(itertools.product(*[range(s) for s in sizes])):
        ranks[labels[i]] = sum(
            factors[k][1].rank(bases[k][c]) for k, c in enumerate(combo)
        )
    kind = RANKED if all(r.kind == RANKED for _, r in factors) else GENERALIZED
    return Poset(labels, up_sets), RankAssignment(ranks, kind)


def direct_product(pa: Poset, ra: RankAssignment, pb: Poset, rb: RankAssignment):
    """Binary direct product with pair labels "(a,b)"."""
    return product_poset([(pa, ra), (pb, rb)])


def rescale(poset: Poset, ranks: RankAssignment, n: int):
    """Same order with every rank multiplied by n."""
    if n < 1:
        raise InputError(f"rescale factor must be >= 1, got {n}")
    if n == 1:
        return poset, ranks
    kind = GENERALIZED if poset.covers else ranks.kind
    return poset, RankAssignment({lab: n * r for lab, r in ranks.ranks.items()}, kind)


class FactorShuffle:
    """A permutation of the factors of a product, cycle by cycle.

    Each cycle stores isomorphism witnesses from a representative factor to
    every factor in the cycle; the induced automorphism transports a moved
    component through witness composites, so the composite around any cycle
    is the identity regardless of how rigid the factors are.
    """

    def __init__(self, factors, perm):
        self.factors = tuple(factors)
        self.perm = tuple(perm)
        n = len(self.factors)
        if sorted(self.perm) != list(range(n)):
            raise InputError(f"perm must be a permutation of 0..{n - 1}")
        self.cycles = []
        seen = set()
        for start in range(n):
            if start in seen:
                continue
            indices = [start]
            k = self.perm[start]
            while k != start:
                indices.append(k)
                k = self.perm[k]
            seen.update(indices)
            rep_poset, rep_ranks = self.factors[start]
            witnesses = [{lab: lab for lab in rep_poset.labels}]
            for k in indices[1:]:
                w = find_isomorphism(rep_poset, rep_ranks, *self.factors[k])
                if w is None:
                    raise InputError(
                        f"factor {start} is not isomorphic to factor {k} in the same orbit"
                    )
                witnesses.append(w)
            self.cycles.append((tuple(indices), tuple(witnesses)))

    def cycle_lengths(self) -> tuple:
        return tuple(len(indices) for indices, _ in self.cycles)


def factor_shuffle(factors, perm) -> FactorShuffle:
    return FactorShuffle(factors, perm)


def shuffle_automorphism(fs: FactorShuffle) -> PosetAutomorphism:
    """The product-poset automorphism induced by a factor shuffle.

    Component at slot perm(k) of the image is the slot-k component pushed
    through the cycle's witness composite.
    """
    base_poset, base_ranks = product_poset(fs.factors)
    n = len(fs.factors)
    move = {}
    for indices, witnesses in fs.cycles:
        m = len(indices)
        inverses = [{v: k for k, v in w.items()} for w in witnesses]
        for t in range(m):
            src, dst = indices[t], indices[(t + 1) % m]
            step = witnesses[(t + 1) % m]
            back = inverses[t]
            move[src] = (dst, {lab: step[back[lab]] for lab in back})
    bases = [poset.basis_labels() for poset, _ in fs.factors]
    image = {}
    if n == 1:
        for lab in base_poset.labels:
            image[lab] = move[0][1][lab]
    else:
        for combo in itertools.product(*bases):
            out = [None] * n
            for k, comp in enumerate(combo):
                dst, transport = move[k]
                out[dst] = transport[comp]
            image["(" + ",".join(combo) + ")"] = "(" + ",".join(out) + ")"
    return automorphism(base_poset, base_ranks, image)


def product_automorphism(factors, auts) -> PosetAutomorphism:
    """Componentwise automorphism of a product from per-factor automorphisms."""
    factors = list(factors)
    auts = list(auts)
    if len(factors) != len(auts):
        raise InputError("one automorphism per factor is required")
    for (poset, _), aut in zip(factors, auts):
        if aut.poset != poset:
            raise InputError("automorphism base does not match its factor")
    base_poset, base_ranks = product_poset(factors)
    if len(factors) == 1:
        return automorphism(base_poset, base_ranks, dict(auts[0].image))
    bases = [poset.basis_labels() for poset, _ in factors]
    image = {}
    for combo in itertools.product(*bases):
        out = [auts[k].image[comp] for k, comp in enumerate(combo)]
        image["(" + ",".join(combo) + ")"] = "(" + ",".join(out) + ")"
    return automorphism(base_poset, base_ranks, image)


def shuffle_fixed_mobius(fs: FactorShuffle) -> IntPolynomial:
    """Closed form for the Möbius polynomial of the shuffle's fixed subposet.

    Product over cycles of the representative's Möbius polynomial with z
    raised to the cycle length.
    """
    result = ONE
    for indices, _ in fs.cycles:
        rep_poset, rep_ranks = fs.factors[indices[0]]
        result = result * mobius_polynomial(rep_poset, rep_ranks).substitute_power(len(indices))
    return result
