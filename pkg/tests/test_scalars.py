import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rbx.scalars import (
    QQ,
    CyclotomicNumber,
    LaurentPoly,
    LaurentRing,
    NotInvertibleError,
    RationalFunction,
    RationalFunctionField,
    RingMismatchError,
    ScalarParseError,
    common_ring,
    cyclotomic_field,
    cyclotomic_reduce,
    embed,
    invert,
    ring_from_spec,
    specialize,
    zeta,
)

L = LaurentRing("v")
RF = RationalFunctionField("v")
v = L.generator()


# -- worked values -----------------------------------------------------------


def test_cyclotomic_minimal_polynomial():
    z = zeta(3)
    assert z**2 + z + 1 == 0


def test_zeta4_squared():
    assert zeta(4) ** 2 == -1


def test_zeta5_fourth_power_reduces():
    z = zeta(5)
    assert z**4 == -1 - z - z**2 - z**3
    assert (z**4).coeffs == (Fraction(-1),) * 4


def test_root_of_unity_order():
    assert zeta(3) ** 3 == 1
    assert cyclotomic_reduce(3, [0, 0, 0, 1]) == 1
    assert zeta(7) ** 7 == 1 and zeta(7) ** 14 == 1


def test_cyclotomic_inverse_multiplies_back():
    a = 2 + 2 * zeta(5)
    assert a * invert(a) == 1
    assert a.inverse() * a == 1


def test_laurent_distributivity_example():
    assert (v + v**-1) * v == v**2 + 1


def test_invert_rational():
    assert invert(Fraction(3, 4)) == Fraction(4, 3)


def test_laurent_non_unit_is_rejected():
    with pytest.raises(NotInvertibleError):
        invert(v + v**-1)


def test_ratfun_inverse_of_hecke_weight():
    w = RF(v + v**-1)
    inv = invert(w)
    assert inv == RationalFunction([0, 1], [1, 0, 1])
    assert str(inv) == "(v)/(v^2 + 1)"
    assert inv * embed(v + v**-1, RF) == 1


def test_laurent_monomial_inverse():
    m = LaurentPoly({3: Fraction(2)})
    assert m.inverse() == LaurentPoly({-3: Fraction(1, 2)})


@pytest.mark.parametrize(
    "p, t, expected",
    [
        (v + v**-1, 1, 2),
        (v**2 - 1, 2, 3),
        ((v + v**-1) ** 2, 3, Fraction(100, 9)),
    ],
)
def test_specialize(p, t, expected):
    assert specialize(p, t) == expected


def test_specialize_at_zero_fails():
    with pytest.raises(ZeroDivisionError):
        specialize(v, 0)


def test_cross_ring_arithmetic_is_rejected():
    with pytest.raises(RingMismatchError):
        zeta(3) + zeta(5)
    with pytest.raises(RingMismatchError):
        zeta(3) * v
    with pytest.raises(RingMismatchError):
        common_ring(cyclotomic_field(3), L)


def test_rational_embeds_everywhere():
    assert zeta(3) + Fraction(1, 2) - Fraction(1, 2) == zeta(3)
    assert L(Fraction(2, 3)) == LaurentPoly({0: Fraction(2, 3)})
    assert common_ring(QQ, RF) == RF
    assert common_ring(L, RF) == RF


def test_zero_laurent_is_empty():
    assert LaurentPoly({2: 0, -1: 0}).terms == {}
    assert not (v - v)


def test_ratfun_canonical_form():
    r = RationalFunction([2, 2], [4, 4])  # (2 + 2v) / (4 + 4v)
    assert r.num == (Fraction(1, 2),) and r.den == (Fraction(1),)
    s = RationalFunction([0, 1], [0, 0, 2])  # v / (2 v^2)
    assert s == RationalFunction([Fraction(1, 2)], [0, 1])
    assert s.den[-1] == 1


def test_ratfun_to_laurent():
    assert RF(v**-2 + 3).to_laurent() == v**-2 + 3
    assert RF(v + v**-1).inverse().to_laurent() is None


@pytest.mark.parametrize(
    "ring, text, expected",
    [
        (QQ, "-1/3", Fraction(-1, 3)),
        (QQ, "(2 + 1/2)*4", Fraction(10)),
        (L, "v + v^-1", v + v**-1),
        (L, "-(v^2 - 1)", 1 - v**2),
        (cyclotomic_field(3), "z3^2 + z3", -1),
        (RF, "1/(v + v^-1)", RF(v + v**-1).inverse()),
    ],
)
def test_parse(ring, text, expected):
    assert ring.parse(text) == expected


@pytest.mark.parametrize("ring, text", [(QQ, "1 +"), (L, "w"), (cyclotomic_field(3), "z5"), (QQ, "(1")])
def test_parse_errors(ring, text):
    with pytest.raises(ScalarParseError):
        ring.parse(text)


@pytest.mark.parametrize(
    "ring, x",
    [
        (QQ, Fraction(-7, 3)),
        (cyclotomic_field(5), 2 + 3 * zeta(5) ** 3),
        (L, 3 * v**-2 - Fraction(1, 2) * v**5),
        (RF, RF(v + v**-1).inverse() + 1),
    ],
)
def test_json_round_trip(ring, x):
    lit = ring.to_json(x)
    assert ring.from_json(lit) == x
    assert ring_from_spec(ring.spec()) == ring


def test_json_literal_shapes():
    assert QQ.to_json(Fraction(-1, 3)) == {"rat": [-1, 3]}
    assert L.to_json(v**-1 + 2 * v) == {"lau": {"-1": [1, 1], "1": [2, 1]}}
    assert cyclotomic_field(3).to_json(zeta(3)) == {"cyc": {"d": 3, "coeffs": [[0, 1], [1, 1]]}}


# -- properties --------------------------------------------------------------

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def cyclo(draw, d=5):
    n = cyclotomic_field(d).degree
    return CyclotomicNumber(d, draw(st.lists(fractions, min_size=n, max_size=n)))


@st.composite
def laurent(draw):
    terms = draw(st.dictionaries(st.integers(-4, 4), fractions, max_size=4))
    return LaurentPoly(terms)


@st.composite
def ratfun(draw):
    num = draw(st.lists(fractions, max_size=3))
    den = draw(st.lists(fractions, min_size=1, max_size=3).filter(any))
    return RationalFunction(num, den)


@pytest.mark.parametrize("strategy", [fractions, cyclo(), laurent(), ratfun()], ids=["QQ", "cyclo5", "laurent", "ratfun"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_ring_axioms_hypothesis(strategy, data):
    a, b, c = (data.draw(strategy) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert a + 0 == a and a * 1 == a
    assert a - a == 0


@settings(max_examples=100, deadline=None)
@given(cyclo(7))
def test_cyclotomic_field_inverse(a):
    if a:
        assert a * invert(a) == 1


@settings(max_examples=100, deadline=None)
@given(laurent(), laurent())
def test_laurent_to_ratfun_is_homomorphism(a, b):
    assert embed(a * b, RF) == embed(a, RF) * embed(b, RF)
    assert embed(a + b, RF) == embed(a, RF) + embed(b, RF)


@settings(max_examples=100, deadline=None)
@given(laurent(), laurent(), st.fractions(min_value=-5, max_value=5, max_denominator=5).filter(bool))
def test_specialize_is_homomorphism(a, b, t):
    assert specialize(a * b, t) == specialize(a, t) * specialize(b, t)
    assert specialize(a + b, t) == specialize(a, t) + specialize(b, t)


@settings(max_examples=50, deadline=None)
@given(ratfun())
def test_canonical_form_is_idempotent(r):
    again = RationalFunction(r.num, r.den)
    assert (again.num, again.den) == (r.num, r.den)


# -- bulk seeded loop: 10^4 random triples per ring ---------------------------


def _random_fraction(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


def _gen_qq(rng):
    return _random_fraction(rng)


def _gen_cyclo(rng):
    return CyclotomicNumber(5, [_random_fraction(rng) for _ in range(4)])


def _gen_laurent(rng):
    return LaurentPoly({rng.randint(-3, 3): _random_fraction(rng) for _ in range(rng.randint(0, 3))})


def _gen_ratfun(rng):
    den = [_random_fraction(rng) for _ in range(rng.randint(1, 2))]
    if not any(den):
        den = [Fraction(1)]
    return RationalFunction([_random_fraction(rng) for _ in range(rng.randint(0, 2))], den)


@pytest.mark.parametrize("gen", [_gen_qq, _gen_cyclo, _gen_laurent, _gen_ratfun], ids=["QQ", "cyclo5", "laurent", "ratfun"])
def test_ring_axioms_bulk(gen):
    rng = random.Random(20240601)
    for _ in range(10_000):
        a, b, c = gen(rng), gen(rng), gen(rng)
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a * 1 == a and a + 0 == a
