"""Admissibility of morphisms between groups with chosen standard
representations.

A morphism is presented by its torus map (weight pullback) together with
the two standard characters.  It is admissible when the pullback of the
target's standard representation is a summand of finitely many copies of
the source's: in a semisimple category that holds exactly when every
irreducible constituent of the pullback already occurs in the source
standard representation, so the decision runs entirely on multiplicity
lists.  The central coordinate takes part in constituent matching; this is
what detects determinant-twisted pullbacks that are invisible on the
semisimple part.
"""

from __future__ import annotations

from math import ceil
from dataclasses import dataclass

from .characters import (
    NotACharacterError,
    RootDatum,
    TorusMap,
    UnsupportedTypeError,
    WeightChar,
    decompose,
    restrict,
)
from .hodge import HodgeCochar, is_av_type


class NotGenuineError(ValueError):
    pass


class HodgeCompatibilityError(ValueError):
    pass


class RefutationError(AssertionError):
    """A verdict the underlying theory proves impossible.  Reaching this is
    a finding about the implementation or the input, never expected."""


@dataclass(frozen=True)
class RepSide:
    root_datum: RootDatum
    standard_char: WeightChar


@dataclass(frozen=True)
class MorphismSpec:
    source: RepSide
    target: RepSide
    torus_map: TorusMap

    def __post_init__(self):
        if self.torus_map.source_rank != self.source.root_datum.total_rank:
            raise ValueError("torus map rows do not match the source rank")
        if self.torus_map.target_rank != self.target.root_datum.total_rank:
            raise ValueError("torus map columns do not match the target rank")


@dataclass(frozen=True)
class AdmissibilityVerdict:
    admissible: bool
    witness_n: int | None
    missing_constituents: tuple

    def to_dict(self):
        return {
            "admissible": self.admissible,
            "witness_n": self.witness_n,
            "missing_constituents": [list(w) for w in self.missing_constituents],
        }


def _genuine_constituents(rd, char, side):
    try:
        return decompose(rd, char, genuine=True)
    except NotACharacterError as exc:
        raise NotGenuineError(f"{side} standard character is not genuine: {exc}") from exc


def decide(m: MorphismSpec) -> AdmissibilityVerdict:
    """Decide whether the pulled-back target standard representation is a
    summand of some number of copies of the source standard representation."""
    source_parts = dict(_genuine_constituents(m.source.root_datum, m.source.standard_char, "source"))
    _genuine_constituents(m.target.root_datum, m.target.standard_char, "target")
    pulled = restrict(m.target.standard_char, m.torus_map)
    pulled_parts = decompose(m.source.root_datum, pulled, genuine=True)
    missing = []
    witness = 0
    for lam, mult in pulled_parts:
        have = source_parts.get(lam, 0)
        if have == 0:
            missing.append(lam)
        else:
            witness = max(witness, ceil(mult / have))
    if missing:
        return AdmissibilityVerdict(False, None, tuple(sorted(missing)))
    return AdmissibilityVerdict(True, max(witness, 1), ())


def summand_search(rd: RootDatum, pulled: WeightChar, source_std: WeightChar, max_n: int):
    """Smallest n <= max_n such that n copies of the source standard
    character minus the pullback is still a genuine character, or None.

    This is the brute-force route: it never compares constituent lists,
    only subtracts weight multisets and re-peels.
    """
    for n in range(1, max_n + 1):
        diff = WeightChar(
            {
                w: n * source_std.mult(w) - pulled.mult(w)
                for w in set(source_std.support()) | set(pulled.support())
            }
        )
        try:
            decompose(rd, diff, genuine=True)
        except NotACharacterError:
            continue
        return n
    return None


def check_symplectic_source_admissible(m: MorphismSpec, cochar: HodgeCochar | None = None) -> bool:
    """For a source of pure symplectic type every genuine morphism of data
    is admissible; this wrapper decides and escalates a negative verdict.

    The pullback of the target standard character must be of type
    {(-1,0), (0,-1)} for the source cocharacter (that is the shadow of the
    assumed compatibility with the complex structures); inputs violating it
    are rejected rather than treated as refutations.
    """
    rd = m.source.root_datum
    if any(f.series != "C" for f in rd.factors):
        raise UnsupportedTypeError("source root datum is not of pure symplectic type")
    if cochar is None:
        if rd.central_rank != 1:
            raise UnsupportedTypeError("auto cocharacter needs exactly one central coordinate")
        mu2 = tuple([1] * (rd.total_rank - 1) + [1])
        kappa2 = tuple([0] * (rd.total_rank - 1) + [2])
        cochar = HodgeCochar(mu2, tuple(k - a for k, a in zip(kappa2, mu2)), kappa2)
    pulled = restrict(m.target.standard_char, m.torus_map)
    if not is_av_type(pulled, cochar):
        raise HodgeCompatibilityError(
            "pulled-back standard character is not of abelian type for the source; "
            "the torus map does not come from a morphism of data"
        )
    verdict = decide(m)
    if not verdict.admissible:
        raise RefutationError(
            "symplectic-type source produced a non-admissible morphism; "
            f"missing constituents: {verdict.missing_constituents}"
        )
    return True
