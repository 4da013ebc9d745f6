import itertools
import random
from fractions import Fraction

import pytest

from pelkit.linalg import (
    GaussRat,
    Matrix,
    NonIntegerError,
    NotCommutingError,
    NotComplexStructureError,
    NotSymmetricError,
    RankDeficientError,
    Signature,
    hnf,
    integer_span_contains,
    signature,
    simult_eigensplit,
)

J2 = Matrix([[0, -1], [1, 0]])


def test_signature_diagonal():
    assert signature(Matrix([[1, 0], [0, -1]])) == Signature(1, 1, 0)


def test_signature_trace_form_on_2x2_matrices():
    # Gram of b -> tr(b b^T) on the matrix units: tr(E_pq E_rs^T) = d_pr d_qs,
    # so the Gram matrix is the identity and the form is a sum of squares.
    gram = Matrix.identity(4)
    assert signature(gram) == Signature(4, 0, 0)


def test_signature_modular_curve_polarization():
    pairing = Matrix([[0, 1], [-1, 0]])
    assert signature(pairing @ J2) == Signature(2, 0, 0)


def test_signature_rank2_fixup_and_radical():
    # zero diagonal forces the rank-2 fix-up; the hyperbolic plane is (1,1)
    assert signature(Matrix([[0, 1], [1, 0]])) == Signature(1, 1, 0)
    assert signature(Matrix([[0, 0], [0, 0]])) == Signature(0, 0, 2)
    assert signature(Matrix([[1, 2], [2, 4]])) == Signature(1, 0, 1)


def test_signature_requires_symmetry():
    with pytest.raises(NotSymmetricError):
        signature(Matrix([[0, 1], [0, 0]]))
    with pytest.raises(NotSymmetricError):
        signature(Matrix([[1, 0, 0], [0, 1, 0]]))


def test_signature_congruence_invariant():
    rng = random.Random(7)
    base = Matrix([[2, 1, 0], [1, -3, 1], [0, 1, 0]])
    expected = signature(base)
    for _ in range(25):
        while True:
            p = Matrix([[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)])
            if p.det() != 0:
                break
        assert signature(p.transpose() @ base @ p) == expected


def test_signature_negation_swaps_counts():
    rng = random.Random(11)
    for _ in range(20):
        m = [[rng.randint(-4, 4) for _ in range(4)] for _ in range(4)]
        sym = Matrix([[m[i][j] + m[j][i] for j in range(4)] for i in range(4)])
        s = signature(sym)
        t = signature(-sym)
        assert (s.positive, s.negative, s.zero) == (t.negative, t.positive, t.zero)


def _short_span_vectors(m: Matrix, box: int = 3):
    """Oracle: all integer combinations of the columns with small coefficients,
    clipped to a small box, as a canonical set."""
    cols = [m.column(j) for j in range(m.cols)]
    out = set()
    for coeffs in itertools.product(range(-box, box + 1), repeat=len(cols)):
        v = tuple(sum(c * col[i] for c, col in zip(coeffs, cols)) for i in range(m.rows))
        if all(abs(x) <= box for x in v):
            out.add(v)
    return out


def test_hnf_identity():
    assert hnf(Matrix.identity(3)) == Matrix.identity(3)


def test_hnf_span_preserved():
    m = Matrix([[2, 1], [0, 1]])
    h = hnf(m)
    assert h == Matrix([[1, 0], [1, 2]])
    assert _short_span_vectors(m) == _short_span_vectors(h)
    assert integer_span_contains(h, m) and integer_span_contains(m, h)


def test_hnf_idempotent_and_random_span():
    rng = random.Random(3)
    for _ in range(30):
        m = Matrix([[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)])
        if m.det() == 0:
            continue
        h = hnf(m)
        assert hnf(h) == h
        assert integer_span_contains(h, m) and integer_span_contains(m, h)


def test_hnf_degenerate_input():
    with pytest.raises(RankDeficientError):
        hnf(Matrix([[0, 0], [0, 0]]))
    trimmed = hnf(Matrix([[1, 2], [1, 2]]), allow_rank_deficient=True)
    assert trimmed == Matrix([[1], [1]])


def test_hnf_rejects_fractions():
    with pytest.raises(NonIntegerError):
        hnf(Matrix([[Fraction(1, 2)]]))


def test_eigensplit_equal_structures():
    assert simult_eigensplit(J2, J2).dims == (1, 0, 0, 1)


def test_eigensplit_opposite_structures():
    assert simult_eigensplit(J2, -J2).dims == (0, 1, 1, 0)


def test_eigensplit_gu11_signature():
    # centre action i on both copies against the complex structure (i, -i):
    # one copy agrees, the other disagrees, giving signature (1,1)
    c = Matrix.block_diag(J2, J2)
    j = Matrix.block_diag(J2, -J2)
    assert simult_eigensplit(c, j).dims == (1, 1, 1, 1)


def test_eigensplit_conjugation_symmetric_dims():
    rng = random.Random(5)
    for _ in range(10):
        while True:
            p = Matrix([[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)])
            if p.det() != 0:
                break
        a = p.inv() @ Matrix.block_diag(J2, J2) @ p
        b = p.inv() @ Matrix.block_diag(J2, -J2) @ p
        d = simult_eigensplit(a, b).dims
        assert d[0] == d[3] and d[1] == d[2]
        assert sum(d) == 4


def test_eigensplit_rejects_bad_input():
    with pytest.raises(NotComplexStructureError):
        simult_eigensplit(Matrix.identity(2), J2)
    a = Matrix.block_diag(J2, J2)
    b = Matrix.block_diag(J2, -J2)
    p = Matrix([[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(NotCommutingError):
        simult_eigensplit(p.inv() @ a @ p, b)


def test_gaussrat_field_ops():
    i = GaussRat.of(0, 1)
    x = GaussRat.of(Fraction(1, 2), 3)
    assert (x * i).re == -3 and (x * i).im == Fraction(1, 2)
    assert (x / x) == GaussRat.of(1, 0)
    assert x.conj().im == -3


def test_matrix_solve_and_inverse():
    m = Matrix([[2, 1], [1, 1]])
    assert m @ m.inv() == Matrix.identity(2)
    rhs = Matrix([[1], [0]])
    assert m @ m.solve(rhs) == rhs
    with pytest.raises(ValueError):
        Matrix([[1, 1], [1, 1]]).solve(Matrix([[1], [0]]))
