"""The polynomial incidence algebra of a generalized ranked poset.

An incidence element assigns each comparable pair p <= q a single monomial
c * z^(rank(q) - rank(p)); as a matrix over the poset's linear extension it
is upper triangular.  Convolution of elements corresponds to matrix
multiplication, the zeta element has all unit monomials, and its inverse
is the polynomial Möbius element.  Summing every entry of the Möbius
matrix yields the Möbius polynomial of the poset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .polynomial import IntPolynomial, ZERO
from .polymatrix import PolyMatrix
from .poset import Poset, RankAssignment


@dataclass(frozen=True, eq=False)
class IncidenceElement:
    poset: Poset
    ranks: RankAssignment
    matrix: PolyMatrix

    def convolve(self, other: "IncidenceElement") -> "IncidenceElement":
        """Definitional convolution: (a.b)(p,q) = sum over p<=r<=q of a(p,r)b(r,q).

        Kept independent of matrix multiplication so the two routes can be
        checked against each other.
        """
        if self.poset != other.poset:
            raise InputError("convolution requires elements over the same poset")
        basis = self.poset.basis_labels()
        pos = {lab: t for t, lab in enumerate(basis)}
        n = len(basis)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                if self.poset.leq(basis[i], basis[j]):
                    for r in self.poset.interval_labels(basis[i], basis[j]):
                        acc = acc + self.matrix.entry(i, pos[r]) * other.matrix.entry(pos[r], j)
                row.append(acc)
            rows.append(tuple(row))
        return IncidenceElement(self.poset, self.ranks, PolyMatrix(basis, tuple(rows)))


def _rank_gap(ranks: RankAssignment, p: str, q: str) -> int:
    gap = ranks.rank(q) - ranks.rank(p)
    if gap < 0:
        raise InputError(
            f"negative rank gap on {p!r} <= {q!r}: ranks are not monotone"
        )
    return gap


def zeta_matrix(poset: Poset, ranks: RankAssignment) -> IncidenceElement:
    """Zeta element: z^(rank gap) on every comparable pair, 1 on the diagonal."""
    basis = poset.basis_labels()
    rows = []
    for p in basis:
        row = []
        for q in basis:
            if poset.leq(p, q):
                row.append(IntPolynomial.monomial(1, _rank_gap(ranks, p, q)))
            else:
                row.append(ZERO)
        rows.append(tuple(row))
    return IncidenceElement(poset, ranks, PolyMatrix(basis, tuple(rows)))


def delta_matrix(poset: Poset, ranks: RankAssignment) -> IncidenceElement:
    """Identity of the incidence algebra."""
    return IncidenceElement(poset, ranks, PolyMatrix.identity(poset.basis_labels()))


def mobius_matrix(poset: Poset, ranks: RankAssignment) -> IncidenceElement:
    """Möbius element: the inverse of the zeta element, by back substitution."""
    zeta = zeta_matrix(poset, ranks)
    return IncidenceElement(poset, ranks, zeta.matrix.inverse_unitriangular())


def incidence_element(poset: Poset, ranks: RankAssignment, coeffs: dict) -> IncidenceElement:
    """Build an element from {(p, q): integer} over comparable pairs."""
    basis = poset.basis_labels()
    pos = {lab: t for t, lab in enumerate(basis)}
    rows = [[ZERO] * len(basis) for _ in basis]
    for (p, q), c in coeffs.items():
        if not poset.leq(p, q):
            raise InputError(f"pair ({p!r}, {q!r}) is not comparable")
        rows[pos[p]][pos[q]] = IntPolynomial.monomial(c, _rank_gap(ranks, p, q))
    return IncidenceElement(poset, ranks, PolyMatrix(basis, tuple(tuple(r) for r in rows)))


def mobius_polynomial(poset: Poset, ranks: RankAssignment) -> IntPolynomial:
    """Sum of all Möbius-matrix entries: sum of mu(p,q) z^(rank gap) over p <= q."""
    return mobius_matrix(poset, ranks).matrix.sum_entries()
