"""Hodge bidegrees of weight characters.

A Hodge cocharacter is a pair of covectors (mu, mu_bar) pairing integrally
with every weight of a genuine character; a weight w contributes the
bidegree (p, q) = (-<w, mu>, -<w, mu_bar>).  The sum mu + mu_bar is the
central weight covector: pairing a weight against it reads off the total
weight -(p + q), which for the classified groups is the central coordinate.

On symplectic and quaternionic-orthogonal blocks the honest cocharacter is
half-integral on the saturated coordinate lattice (it is integral exactly
on the parity sublattice where genuine characters live), so covectors are
stored doubled.  The auto-generated cocharacter is pinned by the fixture
"standard character of a symplectic similitude datum has Hodge type
{(-1,0), (0,-1)}".
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import (
    RootDatum,
    UnsupportedTypeError,
    WeightChar,
    irr_char,
)
from .peldata import Classification

AV_TYPES = frozenset(((-1, 0), (0, -1)))


class NonIntegralPairingError(ValueError):
    pass


@dataclass(frozen=True)
class HodgeCochar:
    """Doubled covector pair: mu2 = 2*mu, mu_bar2 = 2*mu_bar, and the
    doubled central weight covector kappa2 = mu2 + mu_bar2."""

    mu2: tuple
    mu_bar2: tuple
    kappa2: tuple

    def __post_init__(self):
        object.__setattr__(self, "mu2", tuple(int(x) for x in self.mu2))
        object.__setattr__(self, "mu_bar2", tuple(int(x) for x in self.mu_bar2))
        object.__setattr__(self, "kappa2", tuple(int(x) for x in self.kappa2))
        if len(self.mu2) != len(self.mu_bar2) or len(self.mu2) != len(self.kappa2):
            raise ValueError("covector lengths differ")
        if tuple(a + b for a, b in zip(self.mu2, self.mu_bar2)) != self.kappa2:
            raise ValueError("mu + mu_bar must equal the central weight covector")

    @property
    def rank(self) -> int:
        return len(self.mu2)

    def pair(self, w, doubled) -> int:
        if len(w) != self.rank:
            raise ValueError("weight length does not match the cocharacter")
        s = sum(a * b for a, b in zip(w, doubled))
        if s % 2:
            raise NonIntegralPairingError(
                f"weight {w} pairs half-integrally; it is not a weight of this group"
            )
        return s // 2

    def bidegree(self, w):
        return (-self.pair(w, self.mu2), -self.pair(w, self.mu_bar2))

    def to_dict(self):
        return {"mu2": list(self.mu2), "mu_bar2": list(self.mu_bar2), "kappa2": list(self.kappa2)}


@dataclass(frozen=True)
class HodgeType:
    pairs: frozenset

    def sorted_pairs(self):
        return sorted(self.pairs)

    def __contains__(self, pq):
        return pq in self.pairs


def hodge_type(x: WeightChar, hc: HodgeCochar) -> HodgeType:
    """Set of bidegrees realised by the support of x."""
    if x.is_zero():
        raise ValueError("the zero character has no Hodge type")
    return HodgeType(frozenset(hc.bidegree(w) for w in x.support()))


def is_av_type(x: WeightChar, hc: HodgeCochar) -> bool:
    """True when every bidegree lies in {(-1,0), (0,-1)}.  A character whose
    support pairs half-integrally is not a character of the group at all and
    in particular not of this type."""
    try:
        return hodge_type(x, hc).pairs <= AV_TYPES
    except NonIntegralPairingError:
        return False


def auto_cochar(classification: Classification) -> HodgeCochar:
    """Cocharacter pair for a classified datum, one block at a time.

    Symplectic and orthogonal blocks take the half-sum direction (all block
    entries of mu equal 1/2); unitary blocks take the signature orientation
    (+1/2 on the first a coordinates, -1/2 on the remaining b: "agreement
    first").  The central entry makes the standard character land exactly on
    {(-1,0), (0,-1)}, which is asserted on construction.
    """
    mu2 = []
    for d in classification.details:
        if d.kind == "unitary":
            a, b = d.params
            mu2.extend([1] * a + [-1] * b)
        else:
            mu2.extend([1] * d.params[0])
    mu2.append(1)  # central coordinate
    kappa2 = [0] * (len(mu2) - 1) + [2]
    hc = HodgeCochar(tuple(mu2), tuple(k - m for k, m in zip(kappa2, mu2)), tuple(kappa2))
    if not is_av_type(classification.standard_char, hc):
        raise AssertionError("auto-generated cocharacter fails the standard-character fixture")
    return hc


def enumerate_av_irreducibles(rd: RootDatum, hc: HodgeCochar, bound: int):
    """All dominant weights with |lambda|_1 <= bound whose irreducible
    character has Hodge type inside {(-1,0), (0,-1)}.

    Only pure symplectic-type root data (C blocks plus one central
    coordinate) are supported; the central coordinate of any such
    irreducible is forced to 1 by the type condition.
    """
    if any(f.series != "C" for f in rd.factors):
        raise UnsupportedTypeError("enumeration requires a pure C-type root datum")
    if rd.central_rank != 1:
        raise UnsupportedTypeError("enumeration requires exactly one central coordinate")
    if hc.rank != rd.total_rank:
        raise ValueError("cocharacter rank does not match the root datum")

    def partitions(maxlen, total):
        # weakly decreasing nonneg tuples of length maxlen with sum <= total
        def rec(length, head, budget):
            if length == 0:
                yield ()
                return
            for first in range(min(head, budget), -1, -1):
                for rest in rec(length - 1, first, budget - first):
                    yield (first,) + rest

        yield from rec(maxlen, total, total)

    found = []
    blocks = [f.n for f in rd.factors]

    def candidates(idx, budget):
        if idx == len(blocks):
            yield ()
            return
        for lam in partitions(blocks[idx], budget):
            used = sum(lam)
            for rest in candidates(idx + 1, budget - used):
                yield lam + rest

    for lam in sorted(set(candidates(0, bound))):
        highest = lam + (1,)
        char = irr_char(rd, highest)
        if is_av_type(char, hc):
            found.append(highest)
    return tuple(found)
