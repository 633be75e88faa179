import hypothesis
import hypothesis.strategies as strat
import pytest

from flcab import (
    ADELE,
    CIRCLE,
    FIN_ADELE,
    INT,
    RAT,
    REAL,
    SOLENOID,
    DerivedObject,
    FlcaGroup,
    GradedObject,
    HeartToken,
    derived_tensor,
    dual_derived,
    ext,
    fin_cyc,
    hom,
    p_adic,
    pro_int,
    pruefer,
    rhom,
)

from strategies import atoms, groups

_of = FlcaGroup.of

shifts = strat.integers(-2, 2)
graded = strat.lists(
    strat.tuples(groups, shifts), max_size=3
).map(lambda parts: sum((GradedObject.from_group(g).shift(n) for g, n in parts), GradedObject()))


# a sample of single cells, written (source, target, rendered value)
_CELLS = [
    (INT, ADELE, "A"),
    (RAT, INT, "E"),
    (CIRCLE, SOLENOID, "E"),
    (RAT, CIRCLE, "Sol"),
    (RAT, REAL, "R"),
    (RAT, pro_int(2), "0"),
    (RAT, pruefer(3), "Q_3"),
    (REAL, RAT, "0"),
    (REAL, SOLENOID, "R"),
    (CIRCLE, INT, "Z[-1]"),
    (CIRCLE, RAT, "Q[-1]"),
    (CIRCLE, ADELE, "Afin[-1]"),
    (CIRCLE, CIRCLE, "Z"),
    (CIRCLE, pruefer(5), "Q_5/Z_5[-1]"),
    (SOLENOID, CIRCLE, "Q"),
    (SOLENOID, INT, "Q[-1]"),
    (SOLENOID, ADELE, "0"),
    (ADELE, INT, "Afin[-1]"),
    (ADELE, RAT, "0"),
    (ADELE, p_adic(3), "Q_3"),
    (FIN_ADELE, CIRCLE, "Afin"),
    (FIN_ADELE, FIN_ADELE, "Afin"),
    (FIN_ADELE, INT, "Afin[-1]"),
    (FIN_ADELE, REAL, "0"),
    (fin_cyc(2, 2), fin_cyc(2, 3), "Z/4 + Z/4[-1]"),
    (fin_cyc(2, 3), fin_cyc(2, 2), "Z/4 + Z/4[-1]"),
    (fin_cyc(2, 1), fin_cyc(3, 1), "0"),
    (fin_cyc(2, 2), pruefer(2), "Z/4"),
    (fin_cyc(2, 2), CIRCLE, "Z/4"),
    (fin_cyc(2, 2), INT, "Z/4[-1]"),
    (pro_int(2), fin_cyc(2, 3), "Z/8"),
    (pro_int(2), CIRCLE, "Q_2/Z_2"),
    (pro_int(2), INT, "Q_2/Z_2[-1]"),
    (pro_int(2), ADELE, "Q_2"),
    (pro_int(2), pro_int(2), "Z_2"),
    (p_adic(2), p_adic(2), "Q_2"),
    (p_adic(2), p_adic(3), "0"),
    (p_adic(5), CIRCLE, "Q_5"),
    (pruefer(2), fin_cyc(2, 3), "Z/8[-1]"),
    (pruefer(2), CIRCLE, "Z_2"),
    (pruefer(2), INT, "Z_2[-1]"),
    (pruefer(2), pruefer(2), "Z_2"),
]


@pytest.mark.parametrize("a,b,want", _CELLS, ids=lambda v: str(v))
def test_rhom_cells(a, b, want):
    assert str(rhom(_of(a), _of(b))) == want


def test_e_and_its_dual_render_with_degrees():
    e = rhom(_of(RAT), _of(INT))
    assert e.has_special() and str(e) == "E"
    assert str(dual_derived(e)) == "E*"
    assert dual_derived(dual_derived(e)) == e
    with pytest.raises(ValueError, match="cannot be used as split complexes"):
        e.to_graded()


def test_rhom_support_stays_in_degrees_zero_and_one():
    for a, b, _ in _CELLS:
        assert rhom(_of(a), _of(b)).support() <= {0, 1}


@hypothesis.given(groups, groups, groups)
def test_rhom_is_additive_in_both_arguments(x, y, z):
    assert rhom(x + y, z) == rhom(x, z) + rhom(y, z)
    assert rhom(x, y + z) == rhom(x, y) + rhom(x, z)


@hypothesis.given(groups, groups, shifts, shifts)
def test_rhom_shifts_contravariantly_then_covariantly(x, y, m, n):
    gx = GradedObject.from_group(x).shift(m)
    gy = GradedObject.from_group(y).shift(n)
    assert rhom(gx, gy) == rhom(x, y).shift(n - m)


@hypothesis.given(groups, groups)
def test_rhom_duality_symmetry(x, y):
    assert rhom(x, y) == rhom(y.dual(), x.dual())


@hypothesis.given(groups, groups)
def test_derived_tensor_is_symmetric(x, y):
    assert derived_tensor(x, y) == derived_tensor(y, x)


@hypothesis.given(groups)
def test_derived_tensor_unit(x):
    assert derived_tensor(_of(INT), x) == GradedObject.from_group(x).as_derived()


def test_derived_tensor_special_values():
    assert str(derived_tensor(_of(CIRCLE), _of(CIRCLE))) == "T[1]"
    assert str(derived_tensor(_of(RAT), _of(CIRCLE))) == "E*"
    assert str(derived_tensor(_of(RAT), _of(RAT))) == "Q"
    assert str(derived_tensor(_of(pro_int(2)), _of(pruefer(2)))) == "Q_2/Z_2"


def test_ext_reads_off_single_degrees():
    assert str(ext(1, _of(CIRCLE), _of(INT))) == "Z"
    assert ext(0, _of(CIRCLE), _of(INT)).is_zero()
    e1 = ext(1, _of(RAT), _of(INT))
    assert e1.tokens == ((HeartToken.COK_Q_TO_AFIN, 1),)
    assert e1.group.is_zero() and str(e1) == "Cok(Q > Afin)"
    assert ext(0, _of(RAT), _of(INT)).is_zero()


def test_ext_tokens_order_and_multiplicity():
    x = _of(RAT) * 2
    e1 = ext(1, x, _of(INT))
    assert str(e1) == "Cok(Q > Afin)^2"


@hypothesis.given(groups, groups)
def test_ext_zero_agrees_with_hom(x, y):
    e0 = ext(0, x, y)
    assert e0.is_plain_group() and e0.group == hom(x, y)


@hypothesis.given(groups, groups, strat.sampled_from([-3, -2, -1, 2, 3]))
def test_ext_vanishes_outside_degrees_zero_and_one(x, y, n):
    assert ext(n, x, y).is_zero()


def test_graded_object_rendering_and_algebra():
    g = GradedObject.from_group(_of(INT)).shift(1) + GradedObject.from_group(_of(RAT) * 2)
    assert str(g) == "Z[1] + Q^2"
    assert g.shift(-1).shift(1) == g
    assert g.dual().dual() == g
    assert (g * 0).is_zero()


def test_derived_object_sum_merges_terms():
    e = rhom(_of(RAT), _of(INT))
    assert str(e + e) == "E^2"
    assert isinstance(e, DerivedObject)
