from fractions import Fraction

import pytest

from app.calculus.orbits import (
    canonical_form,
    classify,
    classify_half_period,
    classify_monodromy,
    monodromy_from_half_period,
)
from app.core.errors import AsymmetricMatrix, DegenerateOrbit, NotSymplectic
from app.models.orbit import OrbitClass, QuotientKind, Sp2Matrix
from app.oracle.enumerate import sample_half_period_matrices


@pytest.mark.parametrize(
    "entries, expected",
    [
        ((3, 4, 2, 3), OrbitClass.POS_HYP_TWO),
        ((3, -4, -2, 3), OrbitClass.POS_HYP_ONE),
        ((-3, 4, 2, -3), OrbitClass.NEG_HYP_ONE),
        ((-3, -4, -2, -3), OrbitClass.NEG_HYP_TWO),
        ((0, -1, 1, 0), OrbitClass.ELLIPTIC),
    ],
)
def test_classify_monodromy(entries, expected):
    orbit_class, _ = classify_monodromy(Sp2Matrix.of(*entries))
    assert orbit_class is expected


def test_classify_monodromy_errors():
    """test degenerate, non-symplectic and asymmetric matrices are refused."""
    with pytest.raises(DegenerateOrbit):
        classify_monodromy(Sp2Matrix.identity())
    with pytest.raises(DegenerateOrbit):
        classify_monodromy(-Sp2Matrix.identity())
    with pytest.raises(NotSymplectic):
        Sp2Matrix.of(1, 1, 1, 1)
    with pytest.raises(AsymmetricMatrix):
        classify_monodromy(Sp2Matrix.of(2, 1, 1, 1))


def test_rational_angles():
    quarter_turn = Sp2Matrix.rotation(0, 1)
    assert classify_monodromy(quarter_turn) == (OrbitClass.ELLIPTIC, Fraction(1, 4))
    assert classify_monodromy(quarter_turn.inverse()) == (OrbitClass.ELLIPTIC, Fraction(3, 4))
    # cos 3/5 is not the cosine of a rational angle
    orbit_class, angle = classify_monodromy(Sp2Matrix.rotation("3/5", "4/5"))
    assert orbit_class is OrbitClass.ELLIPTIC and angle is None
    with pytest.raises(NotSymplectic):
        Sp2Matrix.rotation("1/2", "1/2")


@pytest.mark.parametrize(
    "entries, expected",
    [
        ((1, -1, -1, 2), OrbitClass.POS_HYP_ONE),
        ((1, 1, 1, 2), OrbitClass.POS_HYP_TWO),
        ((1, -2, 1, -1), OrbitClass.NEG_HYP_ONE),
        ((1, 2, -1, -1), OrbitClass.NEG_HYP_TWO),
        ((1, "-1/2", 1, "1/2"), OrbitClass.ELLIPTIC),
    ],
)
def test_half_period_table_matches_monodromy(entries, expected):
    """test the half-period sign table against the classification of N H^-1 N H."""
    h = Sp2Matrix.of(*entries)
    assert classify_half_period(h) is expected
    assert classify_half_period(-h) is expected
    assert classify_monodromy(monodromy_from_half_period(h))[0] is expected


def test_half_period_degenerate():
    with pytest.raises(DegenerateOrbit):
        classify_half_period(Sp2Matrix.of(1, 0, 3, 1))


def test_inverse_swaps_type():
    m = Sp2Matrix.of(3, 4, 2, 3)
    assert classify_monodromy(m.inverse())[0] is OrbitClass.POS_HYP_ONE
    assert (m @ m.inverse()) == Sp2Matrix.identity()


def test_canonical_form_and_quotient_point():
    m = Sp2Matrix.of("5/4", "3/4", "3/4", "5/4")
    form, point = canonical_form(m)
    assert form.off_diagonal_squared == Fraction(9, 16)
    assert form.matrix() == m
    assert point.kind is QuotientKind.POS_SPIKE
    assert point.y_squared == Fraction(9, 16)

    conjugated = Sp2Matrix.of(3, 4, 2, 3).conjugate_diagonal(2)
    assert conjugated == Sp2Matrix.of(3, 16, "1/2", 3)
    assert canonical_form(conjugated)[0] == canonical_form(Sp2Matrix.of(3, 4, 2, 3))[0]
    assert canonical_form(conjugated)[0].matrix() is None


def test_classify_record_json():
    record = classify(Sp2Matrix.of(1, -1, -1, 2), half=True)
    document = record.model_dump(mode="json")
    assert document["class"] == "pos-hyp-1"
    assert document["quotient_point"]["kind"] == "pos-spike"
    assert document["canonical_form"]["a"] == "3"


def test_sampler_is_seeded():
    first = sample_half_period_matrices(20, 30, seed=11)
    second = sample_half_period_matrices(20, 30, seed=11)
    assert first == second
    for h in first:
        assert h.a * h.d - h.b * h.c == 1
        assert h.b * h.c not in (0, -1)
