import itertools
import random
from fractions import Fraction

import pytest

from pelkit.characters import (
    BoundExceededError,
    Factor,
    NotACharacterError,
    NotDominantError,
    RankMismatchError,
    RootDatum,
    TorusMap,
    WeightChar,
    add_chars,
    decompose,
    dominantize,
    dual,
    irr_char,
    is_dominant,
    restrict,
    tensor,
    trivial_char,
    weyl_dim,
    weyl_generator_maps,
)

C1 = RootDatum((Factor("C", 1),), 1)
C2 = RootDatum((Factor("C", 2),), 1)


def std_char(rd: RootDatum, mult: int = 1) -> WeightChar:
    total = rd.total_rank
    acc = {}
    offset = 0
    for f in rd.factors:
        for i in range(f.n):
            for sign in (1, -1):
                w = [0] * total
                w[offset + i] = sign
                w[-1] = 1
                acc[tuple(w)] = mult
        offset += f.n
    return WeightChar(acc)


# -- independent Weyl dimension oracle (product over positive roots) ------------


def oracle_positive_roots(series, n):
    e = lambda i, c=1: tuple(c if k == i else 0 for k in range(n))
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            roots.append(tuple(a - b for a, b in zip(e(i), e(j))))
            if series in ("C", "D"):
                roots.append(tuple(a + b for a, b in zip(e(i), e(j))))
    if series == "C":
        roots += [e(i, 2) for i in range(n)]
    return roots


def oracle_dim(series, lam):
    n = len(lam)
    rho = tuple(range(n, 0, -1)) if series == "C" else tuple(range(n - 1, -1, -1))
    out = Fraction(1)
    for a in oracle_positive_roots(series, n):
        num = sum(x * y for x, y in zip(tuple(l + r for l, r in zip(lam, rho)), a))
        den = sum(x * y for x, y in zip(rho, a))
        out *= Fraction(num, den)
    assert out.denominator == 1
    return int(out)


def dominant_block_weights(series, n, bound):
    for vec in itertools.product(range(-bound, bound + 1), repeat=n):
        if sum(abs(x) for x in vec) > bound:
            continue
        if any(vec[i] < vec[i + 1] for i in range(n - 1)):
            ok_chain = False
        else:
            ok_chain = True
        if series == "A":
            if ok_chain:
                yield vec
            continue
        if series == "C":
            if ok_chain and vec[-1] >= 0:
                yield vec
            continue
        # D: weakly decreasing on the first n-1, last bounded by |.|
        if all(vec[i] >= vec[i + 1] for i in range(n - 2)) and (
            n < 2 or vec[-2] >= abs(vec[-1])
        ):
            yield vec


@pytest.mark.parametrize(
    "series,n",
    [("C", 1), ("C", 2), ("C", 3), ("A", 2), ("A", 3), ("D", 2), ("D", 3)],
)
def test_freudenthal_matches_dimension_formula(series, n):
    rd = RootDatum((Factor(series, n),), 0)
    for lam in dominant_block_weights(series, n, 4):
        char = irr_char(rd, lam)
        assert char.dim() == oracle_dim(series, lam)


def test_c2_standard_character():
    # oracle: the symplectic rank-2 torus diag(t1, t2, 1/t1, 1/t2) acts on
    # the standard 4-dimensional space with weights +-L1, +-L2
    char = irr_char(RootDatum((Factor("C", 2),), 0), (1, 0))
    assert dict(char.items()) == {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1}
    assert char.dim() == 4 == oracle_dim("C", (1, 0))


def test_c2_second_fundamental_dim_5():
    assert irr_char(RootDatum((Factor("C", 2),), 0), (1, 1)).dim() == 5
    assert oracle_dim("C", (1, 1)) == 5


def test_trivial_highest_weight():
    assert irr_char(C2, (0, 0, 3)) == WeightChar({(0, 0, 3): 1})


def test_gl_adjoint_has_zero_weight_twice():
    rd = RootDatum((Factor("A", 3),), 0)
    char = irr_char(rd, (1, 0, -1))
    assert char.dim() == 8 == oracle_dim("A", (1, 0, -1))
    assert char.mult((0, 0, 0)) == 2


def test_irr_char_rejects_non_dominant():
    with pytest.raises(NotDominantError):
        irr_char(C2, (0, 1, 0))
    with pytest.raises(NotDominantError):
        irr_char(C1, (-1, 0))


def test_bounds_enforced():
    with pytest.raises(BoundExceededError):
        irr_char(C2, (9, 0, 1))
    with pytest.raises(BoundExceededError):
        irr_char(RootDatum((Factor("C", 9),), 0), (1,) + (0,) * 8)


def test_tensor_unit_law_and_masses():
    std = std_char(C2)
    assert tensor(std, trivial_char(3)) == std
    assert tensor(std, std).dim() == 16
    assert tensor(dual(std), std).mult((0, 0, 0)) >= 1


def test_tensor_rank_mismatch():
    with pytest.raises(RankMismatchError):
        tensor(std_char(C2), std_char(C1))


def test_dual():
    assert dual(trivial_char(3)) == trivial_char(3)
    std = std_char(C2)
    assert dual(WeightChar({(2, 0, 1): 1})) == WeightChar({(-2, 0, -1): 1})
    # the symplectic standard weight set is symmetric, only the central
    # coordinate moves under duality
    assert {w[:2] for w in dual(std).support()} == {w[:2] for w in std.support()}


def test_decompose_std_tensor_std():
    std = std_char(C2)
    parts = decompose(C2, tensor(std, std))
    assert parts == (((2, 0, 2), 1), ((1, 1, 2), 1), ((0, 0, 2), 1))
    assert [weyl_dim(C2, w) for w, _ in parts] == [10, 5, 1]


def test_decompose_round_trip_single():
    lam = (2, 1, 1)
    assert decompose(C2, irr_char(C2, lam)) == ((lam, 1),)


def test_decompose_scaled_trivial():
    assert decompose(C2, trivial_char(3).scale(3)) == (((0, 0, 0), 3),)


def test_decompose_round_trip_randomized():
    rng = random.Random(23)
    rds = [C2, RootDatum((Factor("A", 2),), 1), RootDatum((Factor("D", 3),), 1)]
    for rd in rds:
        blocks = [f.n for f in rd.factors]
        for _ in range(8):
            chosen = {}
            for _ in range(rng.randint(1, 3)):
                lam = []
                budget = 3
                for n in blocks:
                    part = sorted(
                        (rng.randint(0, budget) for _ in range(n)), reverse=True
                    )
                    budget = max(0, budget - sum(part))
                    lam.extend(part)
                if rd.factors[0].series == "D" and rng.random() < 0.3:
                    lam[-1] = -lam[-1]
                    if not is_dominant(rd, tuple(lam) + (0,)):
                        lam[-1] = -lam[-1]
                lam = tuple(lam) + (rng.randint(-1, 1),)
                chosen[lam] = chosen.get(lam, 0) + rng.randint(1, 2)
            total = add_chars(
                *(irr_char(rd, lam).scale(m) for lam, m in chosen.items())
            )
            got = dict(decompose(rd, total))
            assert got == chosen


def test_decompose_virtual_signed():
    x = add_chars(irr_char(C2, (1, 0, 1)), irr_char(C2, (0, 0, 0)).scale(-2))
    with pytest.raises(NotACharacterError):
        decompose(C2, x, genuine=True)
    signed = dict(decompose(C2, x, genuine=False))
    assert signed == {(1, 0, 1): 1, (0, 0, 0): -2}


def test_decompose_rejects_asymmetric_support():
    with pytest.raises(NotACharacterError):
        decompose(C2, WeightChar({(1, 0, 1): 1}))


def test_weyl_invariance_of_irr_supports():
    cases = [
        (C2, (2, 1, 0)),
        (RootDatum((Factor("A", 3),), 0), (2, 0, -1)),
        (RootDatum((Factor("D", 3),), 0), (1, 1, -1)),
        (RootDatum((Factor("C", 1), Factor("D", 2)), 1), (2, 1, 1, 5)),
    ]
    for rd, lam in cases:
        char = irr_char(rd, lam)
        for g in weyl_generator_maps(rd):
            for w, m in char.items():
                assert char.mult(g(w)) == m


def test_dominantize():
    assert dominantize(C2, (-1, 2, 7)) == (2, 1, 7)
    rd_a = RootDatum((Factor("A", 3),), 0)
    assert dominantize(rd_a, (0, 2, -1)) == (2, 0, -1)
    rd_d = RootDatum((Factor("D", 2),), 0)
    assert dominantize(rd_d, (-3, 1)) == (3, -1)
    assert dominantize(rd_d, (-3, -1)) == (3, 1)


def test_restrict_identity_and_zero():
    std = std_char(C2)
    assert restrict(std, TorusMap.identity(3)) == std
    zero_map = TorusMap(((0, 0, 0),))
    assert restrict(std, zero_map) == WeightChar({(0,): 4})


def test_restrict_diagonal_embedding():
    # the 4-dimensional standard character of the matrix-algebra datum
    # restricts along the identity to two copies of the 2-dimensional one
    std4 = std_char(C1, mult=2)
    std2 = std_char(C1)
    assert restrict(std4, TorusMap.identity(2)) == add_chars(std2, std2)


def test_restrict_is_ring_map():
    rng = random.Random(31)
    pullback = TorusMap(((1, 0, 1), (0, -1, 2)))
    for _ in range(10):
        x = WeightChar(
            {tuple(rng.randint(-2, 2) for _ in range(3)): rng.randint(-2, 3) for _ in range(4)}
        )
        y = WeightChar(
            {tuple(rng.randint(-2, 2) for _ in range(3)): rng.randint(-2, 3) for _ in range(4)}
        )
        if x.is_zero() or y.is_zero():
            continue
        assert restrict(tensor(x, y), pullback) == tensor(
            restrict(x, pullback), restrict(y, pullback)
        )


def test_tensor_commutative_associative():
    rng = random.Random(37)
    for _ in range(10):
        chars = [
            WeightChar(
                {tuple(rng.randint(-1, 1) for _ in range(2)): rng.randint(1, 2) for _ in range(3)}
            )
            for _ in range(3)
        ]
        x, y, z = chars
        assert tensor(x, y) == tensor(y, x)
        assert tensor(tensor(x, y), z) == tensor(x, tensor(y, z))


def test_torus_map_composition():
    f = TorusMap(((1, 1), (0, 1)))  # source rank 2, target rank 2
    g = TorusMap(((2, 0), (1, 1)))
    composed = g.compose(f)
    w = (3, 5)
    assert composed.pull(w) == f.pull(g.pull(w))
