import random

import pytest

from pelkit.algebras import MAT_IMAG_QUAD, MAT_Q, AlgebraPresentation, CatalogFactor
from pelkit.characters import Factor, RootDatum
from pelkit.fixtures import (
    balanced_imag_quad_datum,
    gsp8_tensor_datum,
    gu11_datum,
    modular_curve_datum,
    modular_curve_m2_datum,
    mutations,
    quaternion_datum,
    u20_datum,
)
from pelkit.linalg import Matrix, Signature, signature
from pelkit.peldata import (
    DimensionMismatchError,
    GroupFactorization,
    PelDatum,
    StructuredModeRequiredError,
    classify,
    factorize,
    factorize_details,
    shimura_report,
    validate,
)

ALL_DATA = [
    modular_curve_datum,
    modular_curve_m2_datum,
    gu11_datum,
    gsp8_tensor_datum,
    quaternion_datum,
    balanced_imag_quad_datum,
    u20_datum,
]


@pytest.mark.parametrize("build", ALL_DATA)
def test_fixture_data_validate(build):
    report = validate(build())
    assert report.valid, report.message


def test_negated_pairing_fails_at_positivity():
    d = modular_curve_datum()
    # oracle: the polarization Gram flips to negative definite
    assert signature(-(d.pairing @ d.j)) == Signature(0, 2, 0)
    report = validate(PelDatum(d.algebra, -d.pairing, d.j))
    assert not report.valid and report.failure_code == "polarization_positive"


def test_negated_j_fails_at_positivity():
    d = modular_curve_datum()
    assert signature(d.pairing @ -d.j) == Signature(0, 2, 0)
    report = validate(PelDatum(d.algebra, d.pairing, -d.j))
    assert not report.valid and report.failure_code == "polarization_positive"


@pytest.mark.parametrize("name,datum,code", mutations())
def test_mutation_diagnostics(name, datum, code):
    report = validate(datum)
    assert not report.valid
    assert report.failure_code == code


def test_validate_shape_and_degenerate_checks():
    d = modular_curve_datum()
    bad = PelDatum(d.algebra, Matrix.identity(3), d.j)
    assert validate(bad).failure_code == "shape"
    sym = PelDatum(d.algebra, Matrix.identity(2), d.j)
    assert validate(sym).failure_code == "pairing_antisymmetric"
    degenerate = PelDatum(d.algebra, Matrix([[0, 0], [0, 0]]), d.j)
    assert validate(degenerate).failure_code == "pairing_nondegenerate"
    j_bad = PelDatum(d.algebra, d.pairing, Matrix.identity(2))
    assert validate(j_bad).failure_code == "j_square"


def test_factorize_fixture_groups():
    assert factorize(modular_curve_datum()) == GroupFactorization((1,), (), ())
    assert factorize(modular_curve_m2_datum()) == GroupFactorization((1,), (), ())
    assert factorize(gu11_datum()) == GroupFactorization((), ((1, 1),), ())
    assert factorize(gsp8_tensor_datum()) == GroupFactorization((4,), (), ())
    assert factorize(quaternion_datum()) == GroupFactorization((), (), (1,))
    assert factorize(balanced_imag_quad_datum()) == GroupFactorization((), ((1, 1),), ())
    assert factorize(u20_datum()) == GroupFactorization((), ((2, 0),), ())


def test_factorize_requires_structured_mode():
    d = modular_curve_datum()
    raw = PelDatum(
        AlgebraPresentation.raw(2, d.algebra.generators), d.pairing, d.j
    )
    assert validate(raw).valid
    with pytest.raises(StructuredModeRequiredError):
        factorize(raw)


@pytest.mark.parametrize("build", [modular_curve_m2_datum, gu11_datum, quaternion_datum])
def test_factorize_basis_invariant(build):
    rng = random.Random(17)
    base = build()
    expected = factorize(base)
    n = base.dim_v
    for _ in range(4):
        while True:
            p = Matrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
            if p.det() != 0:
                break
        moved = base.conjugate(p)
        assert validate(moved).valid
        assert factorize(moved) == expected


def test_negating_j_swaps_unitary_signature():
    d = u20_datum()
    flipped = PelDatum(d.algebra, -d.pairing, -d.j)
    assert validate(flipped).valid
    assert factorize(flipped) == GroupFactorization((), ((0, 2),), ())


def test_isotypic_dimensions_fill_v():
    # two factors at once: Q-factor on Q^2 plus Q(i)-factor on Q(i)^2
    alg = AlgebraPresentation.from_catalog(
        [CatalogFactor(MAT_Q, 1, 2), CatalogFactor(MAT_IMAG_QUAD, 1, 2, d=-1)]
    )
    m1, gu = modular_curve_datum(), gu11_datum()
    datum = PelDatum(
        alg,
        Matrix.block_diag(m1.pairing, gu.pairing),
        Matrix.block_diag(m1.j, gu.j),
    )
    assert validate(datum).valid
    fact = factorize(datum)
    assert fact == GroupFactorization((1,), ((1, 1),), ())
    details = factorize_details(datum)
    assert sum(
        blk.factor.isotypic_dim for blk in datum.algebra.factors
    ) == datum.dim_v
    # unitary signature sums to the Morita-reduced multiplicity
    assert details[1].params[0] + details[1].params[1] == 2


def test_shimura_report_flags():
    ok = shimura_report(factorize(modular_curve_datum()))
    assert ok.is_shimura_datum_for_g0 and ok.g_connected and ok.center_condition

    definite = shimura_report(factorize(u20_datum()))
    assert not definite.is_shimura_datum_for_g0
    assert definite.offending_factors == ("U(2,0)",)
    assert definite.g_connected

    quat = shimura_report(factorize(quaternion_datum()))
    assert quat.is_shimura_datum_for_g0
    assert not quat.g_connected

    # U(1,0) is exempt from the definite-factor obstruction
    small = shimura_report(GroupFactorization((), ((1, 0),), ()))
    assert small.is_shimura_datum_for_g0


def test_classification_bundle():
    cl = classify(gu11_datum())
    assert cl.root_datum == RootDatum((Factor("A", 2),), 1)
    assert cl.standard_char.dim() == 4
    assert cl.standard_char.mult((1, 0, 1)) == 1
    cl2 = classify(modular_curve_m2_datum())
    assert cl2.root_datum == RootDatum((Factor("C", 1),), 1)
    assert cl2.standard_char.mult((1, 1)) == 2

    clq = classify(quaternion_datum())
    assert clq.root_datum == RootDatum((Factor("D", 1),), 1)
    assert clq.standard_char.dim() == 4
    assert clq.standard_char.mult((1, 1)) == 2


def test_dimension_mismatch_detected():
    # a pairing j that fails to preserve the isotypic block only arises for
    # inconsistent hand-built data; simulate with a j commuting with nothing
    d = gu11_datum()
    j = Matrix([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]])
    broken = PelDatum(d.algebra, d.pairing, j)
    report = validate(broken)
    assert not report.valid and report.failure_code == "j_pairing_skew"
    with pytest.raises((DimensionMismatchError, ValueError)):
        # the balanced branch needs even multiplicity
        factorize(
            PelDatum(
                AlgebraPresentation.from_catalog(
                    [CatalogFactor(MAT_IMAG_QUAD, 1, 1, d=-2)]
                ),
                Matrix([[0, 1], [-1, 0]]),
                Matrix([[0, -1], [1, 0]]),
            )
        )
