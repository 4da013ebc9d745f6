"""Formal isogeny category of full-rank lattices.

Objects are full-rank lattices L = basis * Z^n inside V = Q^n; arrows are
rational linear maps normalised against the lattices: the stored data of
an arrow f is its rational matrix together with the minimal n >= 1 such
that f(n L) lies in L', and the scale 1/n.  Two arrows are equal when they
share endpoints and rational matrix; the normalisation is canonical and
recomputed, which is what makes the well-definedness laws decidable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .linalg import Matrix


class ShapeMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class LatticeObject:
    dim: int
    basis: Matrix | None  # None only for the zero-dimensional object

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be >= 0")
        if self.dim == 0:
            if self.basis is not None:
                raise ValueError("zero-dimensional lattice carries no basis")
            return
        if self.basis is None or self.basis.rows != self.dim or self.basis.cols != self.dim:
            raise ValueError("basis must be square of size dim")
        if self.basis.det() == 0:
            raise ValueError("basis must be invertible")

    @staticmethod
    def standard(dim: int) -> "LatticeObject":
        return LatticeObject(dim, Matrix.identity(dim))

    @staticmethod
    def scaled(dim: int, c) -> "LatticeObject":
        return LatticeObject(dim, Matrix.identity(dim).scale(c))


ZERO_LATTICE = LatticeObject(0, None)


def minimal_n(f: Matrix, src: LatticeObject, dst: LatticeObject) -> int:
    """Least n >= 1 with f(n * L_src) inside L_dst: the lcm of the
    denominators of dst.basis^-1 @ f @ src.basis."""
    if src.dim == 0 or dst.dim == 0:
        return 1
    if f.rows != dst.dim or f.cols != src.dim:
        raise ShapeMismatchError("map shape does not match the lattices")
    return (dst.basis.inv() @ f @ src.basis).denominator_lcm()


@dataclass(frozen=True)
class IsoMorphism:
    src: LatticeObject
    dst: LatticeObject
    raw: Matrix
    n_used: int
    scale: Fraction

    def __eq__(self, other):
        return (
            isinstance(other, IsoMorphism)
            and self.src == other.src
            and self.dst == other.dst
            and self.raw == other.raw
        )

    def __hash__(self):
        return hash((self.src, self.dst, self.raw))


def arrow(raw: Matrix, src: LatticeObject, dst: LatticeObject, n: int | None = None) -> IsoMorphism:
    """Normalised arrow for the rational map ``raw``.

    ``n`` may present the map as 1/n times an integral-on-lattices map; any
    admissible n (a multiple of the minimal one) produces the identical
    stored arrow, which is the independence-of-normalisation law.
    """
    n0 = minimal_n(raw, src, dst)
    if n is not None:
        if n < 1 or n % n0:
            raise ValueError(f"n = {n} does not satisfy raw(n L) <= L' (minimal n is {n0})")
    return IsoMorphism(src=src, dst=dst, raw=raw, n_used=n0, scale=Fraction(1, n0))


def identity_arrow(obj: LatticeObject) -> IsoMorphism:
    return arrow(Matrix.identity(obj.dim), obj, obj)


def compose(g: IsoMorphism, f: IsoMorphism) -> IsoMorphism:
    if f.dst != g.src:
        raise ShapeMismatchError("arrows are not composable")
    return arrow(g.raw @ f.raw, f.src, g.dst)


def lattice_change_iso(a: LatticeObject, b: LatticeObject):
    """The canonical comparison arrow between two lattices in the same V,
    together with its two-sided inverse."""
    if a.dim != b.dim:
        raise ShapeMismatchError("lattices live in different spaces")
    ident = Matrix.identity(a.dim)
    return arrow(ident, a, b), arrow(ident, b, a)


def direct_sum(a: LatticeObject, b: LatticeObject) -> LatticeObject:
    if a.dim == 0:
        return b
    if b.dim == 0:
        return a
    return LatticeObject(a.dim + b.dim, Matrix.block_diag(a.basis, b.basis))


def direct_sum_arrows(f: IsoMorphism, g: IsoMorphism) -> IsoMorphism:
    return arrow(
        Matrix.block_diag(f.raw, g.raw),
        direct_sum(f.src, g.src),
        direct_sum(f.dst, g.dst),
    )


# -- randomized law suite ------------------------------------------------------


def _random_unimodular(rng: random.Random, n: int) -> Matrix:
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            m[i][k] += c * m[j][k]
    return Matrix(m)


def _random_lattice(rng: random.Random, n: int) -> LatticeObject:
    diag = Matrix(
        [
            [Fraction(rng.randint(1, 4), rng.randint(1, 4)) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)
        ]
    )
    return LatticeObject(n, _random_unimodular(rng, n) @ diag)


def _random_map(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix(
        [
            [Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2, 3))) for _ in range(cols)]
            for _ in range(rows)
        ]
    )


def run_law_suite(trials: int = 500, seed: int = 0) -> dict:
    """Seeded random verification of the normalisation laws; returns a
    pass/fail ledger per law with exact arithmetic throughout."""
    rng = random.Random(seed)
    results = {}

    def law(name, fn):
        failures = 0
        first = None
        for t in range(trials):
            if not fn():
                failures += 1
                if first is None:
                    first = t
        results[name] = {
            "trials": trials,
            "failures": failures,
            "pass": failures == 0,
            **({"first_failure_trial": first} if first is not None else {}),
        }

    def independence_of_n():
        n = rng.randint(1, 3)
        src, dst = _random_lattice(rng, n), _random_lattice(rng, n)
        raw = _random_map(rng, n, n)
        base = arrow(raw, src, dst)
        m = rng.randint(1, 10)
        padded = arrow(raw, src, dst, n=base.n_used * m)
        return padded == base and padded.n_used == base.n_used and padded.scale == base.scale

    def category_laws():
        n = rng.randint(1, 3)
        objs = [_random_lattice(rng, n) for _ in range(4)]
        f = arrow(_random_map(rng, n, n), objs[0], objs[1])
        g = arrow(_random_map(rng, n, n), objs[1], objs[2])
        h = arrow(_random_map(rng, n, n), objs[2], objs[3])
        assoc = compose(h, compose(g, f)) == compose(compose(h, g), f)
        unit = (
            compose(f, identity_arrow(objs[0])) == f
            and compose(identity_arrow(objs[1]), f) == f
        )
        return assoc and unit

    def psi_isomorphism():
        n = rng.randint(1, 3)
        a, b = _random_lattice(rng, n), _random_lattice(rng, n)
        ab, ba = lattice_change_iso(a, b)
        return compose(ba, ab) == identity_arrow(a) and compose(ab, ba) == identity_arrow(b)

    def psi_naturality():
        n = rng.randint(1, 3)
        l1, l2 = _random_lattice(rng, n), _random_lattice(rng, n)
        m1, m2 = _random_lattice(rng, n), _random_lattice(rng, n)
        raw = _random_map(rng, n, n)
        f1 = arrow(raw, l1, m1)
        f2 = arrow(raw, l2, m2)
        psi_l, _ = lattice_change_iso(l1, l2)
        psi_m, _ = lattice_change_iso(m1, m2)
        return compose(psi_m, f1) == compose(f2, psi_l)

    def sum_functorial():
        n = rng.randint(1, 2)
        a1, b1, c1 = (_random_lattice(rng, n) for _ in range(3))
        a2, b2, c2 = (_random_lattice(rng, n) for _ in range(3))
        f1 = arrow(_random_map(rng, n, n), a1, b1)
        g1 = arrow(_random_map(rng, n, n), b1, c1)
        f2 = arrow(_random_map(rng, n, n), a2, b2)
        g2 = arrow(_random_map(rng, n, n), b2, c2)
        lhs = compose(direct_sum_arrows(g1, g2), direct_sum_arrows(f1, f2))
        rhs = direct_sum_arrows(compose(g1, f1), compose(g2, f2))
        return lhs == rhs

    def sum_normalisation():
        n = rng.randint(1, 2)
        f = arrow(_random_map(rng, n, n), _random_lattice(rng, n), _random_lattice(rng, n))
        g = arrow(_random_map(rng, n, n), _random_lattice(rng, n), _random_lattice(rng, n))
        return direct_sum_arrows(f, g).n_used == lcm(f.n_used, g.n_used)

    law("independence_of_n", independence_of_n)
    law("category_laws", category_laws)
    law("psi_isomorphism", psi_isomorphism)
    law("psi_naturality", psi_naturality)
    law("direct_sum_functorial", sum_functorial)
    law("direct_sum_normalisation", sum_normalisation)
    return results
