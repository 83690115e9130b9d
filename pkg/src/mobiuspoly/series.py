"""Hilbert series and graded-trace generating functions of splitting algebras.

Both series share the shape (1 - z)/(1 - z*M(z)): the Hilbert series uses
the Möbius polynomial of the poset itself, the graded trace uses the
Möbius polynomial of the automorphism's fixed subposet.  The hypotheses of
those identities (ranked poset, unique minimal element) are enforced here;
emitting a series outside them would present an unproven number as truth.
"""

from __future__ import annotations

from .constructions import FactorShuffle, shuffle_fixed_mobius
from .errors import InputError
from .incidence import mobius_polynomial
from .polynomial import IntPolynomial, ONE, Z, RationalSeries
from .poset import RANKED, Poset, PosetAutomorphism, RankAssignment, fixed_subposet

_NUM = ONE - Z  # the 1 - z numerator both theorems share


def _require_hypotheses(poset: Poset, ranks: RankAssignment, what: str) -> None:
    if ranks.kind != RANKED:
        raise InputError(f"{what} requires a ranked poset")
    minimal = poset.minimal_labels()
    if len(minimal) != 1:
        raise InputError(
            f"{what} requires a unique minimal element; found " + ", ".join(minimal)
        )


def _series(mob: IntPolynomial) -> RationalSeries:
    return RationalSeries(_NUM, ONE - Z * mob)


def hilbert_series(poset: Poset, ranks: RankAssignment) -> RationalSeries:
    """(1 - z)/(1 - z*M_P(z)) for a ranked poset with unique minimal element."""
    _require_hypotheses(poset, ranks, "Hilbert series")
    return _series(mobius_polynomial(poset, ranks))


def graded_trace(
    poset: Poset, ranks: RankAssignment, aut: PosetAutomorphism
) -> RationalSeries:
    """(1 - z)/(1 - z*M(z)) over the fixed subposet of the automorphism."""
    if aut.poset != poset:
        raise InputError("automorphism is not over the given poset")
    _require_hypotheses(poset, ranks, "graded trace")
    sub, sub_ranks = fixed_subposet(aut)
    return _series(mobius_polynomial(sub, sub_ranks))


def shuffle_trace(fs: FactorShuffle) -> RationalSeries:
    """Graded trace of a factor shuffle via its closed form.

    Avoids materializing the product poset; the hypotheses (every factor
    ranked with a unique minimum) transfer to the product.
    """
    for k, (poset, ranks) in enumerate(fs.factors):
        if ranks.kind != RANKED:
            raise InputError(f"shuffle trace requires ranked factors; factor {k} is not")
        if len(poset.minimal_labels()) != 1:
            raise InputError(
                f"shuffle trace requires factors with a unique minimal element; "
                f"factor {k} has {len(poset.minimal_labels())}"
            )
    return _series(shuffle_fixed_mobius(fs))
