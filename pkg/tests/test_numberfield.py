from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from eigenfactor.errors import DivisionByZero, FieldMismatch, NoNearbyRoot, NotMonic, ParseError, Reducible
from eigenfactor.numberfield import (
    RATIONALS,
    IntegerPolynomial,
    NumberField,
    an_arith,
    denominator,
    embed,
    min_poly_of,
    nf_new,
    parse_algebraic,
    sqrt_in_field,
)

small_q = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def elements(field):
    return st.lists(small_q, min_size=field.degree, max_size=field.degree).map(field)


QG = NumberField((-1, 2, 1), 0.414)
CUBIC = NumberField((-2, 0, 0, 1), 1.26)
GAUSS = NumberField((1, 0, 1), 1j)


# construction ---------------------------------------------------------------

def test_nf_new_refines_embedding():
    K = nf_new((-1, 2, 1), 0.414)
    r = K.root(30)
    assert r.radius <= mpmath.mpf(10) ** -30
    with mpmath.workdps(50):
        assert abs(r.value - (mpmath.sqrt(2) - 1)) < mpmath.mpf(10) ** -30


def test_other_root_is_a_different_field():
    K2 = NumberField((-1, 2, 1), -2.414)
    assert K2 != QG
    assert embed(K2.gen, 10).format(10) == "-2.4142135624"


def test_rational_field():
    Q = nf_new((0, 1))
    assert Q.degree == 1
    assert Q == RATIONALS
    assert Q.gen == 0


def test_reducible_rejected():
    with pytest.raises(Reducible):
        NumberField((-4, 0, 1), 2.0)
    with pytest.raises(Reducible):
        NumberField((-6, 11, -6, 1), 1.0)  # (x-1)(x-2)(x-3)


def test_not_monic_and_far_hint():
    with pytest.raises(NotMonic):
        NumberField((-1, 0, 2), 0.7)
    with pytest.raises(NoNearbyRoot):
        NumberField((-1, 2, 1), 0.5)


# arithmetic -----------------------------------------------------------------

def test_defining_relation():
    g = QG.gen
    assert g * g == QG((1, -2))


def test_product_of_coefficients():
    g = QG.gen
    assert (-3 * g - 8) * (4 * g - 1) == -5 * g - 4


def test_inverse_of_generator():
    assert QG.gen.inverse() == QG.gen + 2
    assert an_arith("inv", QG.gen) == QG((2, 1))


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QG.one / QG.zero


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        QG.gen + CUBIC.gen
    assert QG.gen != CUBIC.gen


@pytest.mark.parametrize("field", [QG, CUBIC, GAUSS, RATIONALS])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_ring_axioms(field, data):
    a, b, c = (data.draw(elements(field)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * a.inverse() == 1


# minimal polynomials and denominators ---------------------------------------

def test_min_poly_examples():
    g = QG.gen
    assert min_poly_of(g) == IntegerPolynomial((-1, 2, 1))
    # frozen from sympy.minimal_polynomial((73 + 30*(sqrt(2)-1))/27)
    assert min_poly_of((73 + 30 * g) / 27) == IntegerPolynomial((49, -2322, 729))
    assert min_poly_of(RATIONALS(Fraction(933156, 1953125))) == IntegerPolynomial((-933156, 1953125))


def test_denominators():
    g = QG.gen
    assert denominator(RATIONALS(Fraction(933156, 1953125))) == 1953125
    assert denominator((30 * g + 73) / 27) == 729
    assert denominator(g) == 1
    # frozen from sympy: 15625*x**2 - 14250*x + 49
    assert denominator((-40 * g + 17) / 125) == 15625


@pytest.mark.parametrize("field", [QG, CUBIC, GAUSS])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_min_poly_vanishes_and_denominator_rule(field, data):
    z = data.draw(elements(field))
    mp = min_poly_of(z)
    assert mp(z) == 0
    assert mp.content == 1 and mp.leading > 0
    assert (denominator(z) == 1) == mp.is_monic()


def test_min_poly_of_rational_in_quadratic_field():
    assert min_poly_of(QG(Fraction(3, 4))) == IntegerPolynomial((-3, 4))


# square roots ---------------------------------------------------------------

def test_sqrt_examples():
    assert sqrt_in_field(RATIONALS(Fraction(9, 4))) == Fraction(3, 2)
    assert sqrt_in_field(QG(2)) == 1 + QG.gen
    assert sqrt_in_field(QG(3)) is None
    assert sqrt_in_field(RATIONALS(2)) is None
    assert sqrt_in_field(RATIONALS(-4)) is None


def test_sqrt_three_absent_by_independent_check():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    # x^2 - 3 stays irreducible over Q(sqrt 2), so 3 is not a square there
    assert sympy.factor(x**2 - 3, extension=sympy.sqrt(2)) == x**2 - 3


def test_sqrt_sign_convention():
    assert sqrt_in_field(GAUSS(-1)) == GAUSS.gen  # real part 0, tie broken by imaginary part
    # g^2 = 1 - 2g; g ~ 0.414 > 0 is chosen over -g
    assert sqrt_in_field(QG((1, -2))) == QG.gen
    K2 = NumberField((-1, 2, 1), -2.414)
    # in the other embedding g ~ -2.414, so -g is the root with positive real part
    assert sqrt_in_field(K2((1, -2))) == -K2.gen


@pytest.mark.parametrize("field", [QG, GAUSS, RATIONALS])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_sqrt_round_trip(field, data):
    z = data.draw(elements(field))
    w = sqrt_in_field(z * z)
    assert w is not None and (w == z or w == -z)
    assert w * w == z * z


@settings(max_examples=15, deadline=None)
@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=3, max_size=3))
def test_sqrt_round_trip_cubic(coords):
    z = CUBIC(coords)
    w = sqrt_in_field(z * z)
    assert w is not None and (w == z or w == -z)


def test_cubic_nonsquare():
    assert sqrt_in_field(CUBIC(3)) is None


# embeddings -----------------------------------------------------------------

def test_embed_examples():
    g = QG.gen
    assert embed(g, 10).format(10) == "0.4142135624"
    e = embed(-5 * g - 4, 10)
    assert e.format(10) == "-6.0710678119"
    with mpmath.workdps(40):
        assert abs(e.value - (-5 * (mpmath.sqrt(2) - 1) - 4)) <= mpmath.mpf(10) ** -10
    seven_halves = embed(RATIONALS(Fraction(7, 2)))
    assert seven_halves.value == mpmath.mpf(3.5) and seven_halves.radius == 0


@pytest.mark.parametrize("field", [QG, CUBIC, GAUSS])
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_embedding_is_multiplicative(field, data):
    a = data.draw(elements(field))
    b = data.draw(elements(field))
    ea, eb, eab = embed(a, 25), embed(b, 25), embed(a * b, 25)
    with mpmath.workdps(60):
        bound = eab.radius + ea.radius * (abs(eb.value) + eb.radius) + eb.radius * abs(ea.value)
        assert abs(eab.value - ea.value * eb.value) <= bound + mpmath.mpf(10) ** -40


# text format ----------------------------------------------------------------

def test_render_and_parse():
    z = QG((-6168, -2680))
    assert str(z) == "(-6168) + (-2680)*g"
    assert parse_algebraic(QG, "(-6168) + (-2680)*g") == z
    assert parse_algebraic(QG, "-2680*g - 6168") == z
    assert parse_algebraic(QG, "g^2") == QG((1, -2))
    assert parse_algebraic(QG, "(1/2) + (-3/4)*g") == QG((Fraction(1, 2), Fraction(-3, 4)))
    assert str(RATIONALS(-6048)) == "-6048"
    assert str(IntegerPolynomial((49, -2322, 729))) == "729*x^2 - 2322*x + 49"
    assert str(IntegerPolynomial((-1, 2, 1))) == "x^2 + 2*x - 1"


@pytest.mark.parametrize("bad", ["", "(1", "1 2", "3g", "*g", "1/0", "(1)+", "h"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_algebraic(QG, bad)


@settings(max_examples=50, deadline=None)
@given(elements(CUBIC))
def test_render_parse_round_trip(z):
    assert parse_algebraic(CUBIC, str(z)) == z


def test_elements_are_immutable():
    with pytest.raises(AttributeError):
        QG.gen.coords = (1, 1)
    assert isinstance(hash(QG.gen), int)
    assert hash(QG(5)) == hash(5)
