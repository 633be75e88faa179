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
    FlcaGroup,
    GradedObject,
    decompose_cyclic,
    derived_tensor,
    fin_cyc,
    from_adelic,
    involution,
    k0_from_invariants,
    k0_of,
    k0_of_derived,
    left_inverse_winner,
    mul,
    p_adic,
    pro_int,
    pruefer,
    rhom,
    to_adelic,
)
from flcab.k0 import K0_ZERO, _candidate, _generator_families

from strategies import groups, k0_classes

_of = FlcaGroup.of


_ATOM_CLASSES = [
    (INT, (1, 0), (0, 0), {}),
    (RAT, (1, 0), (0, 1), {}),
    (REAL, (1, 1), (0, 0), {}),
    (CIRCLE, (0, 1), (0, 0), {}),
    (SOLENOID, (0, 1), (1, 0), {}),
    (ADELE, (1, 1), (1, 1), {}),
    (FIN_ADELE, (0, 0), (1, 1), {}),
    (pro_int(2), (0, 0), (0, 0), {2: (1, 0)}),
    (pruefer(3), (0, 0), (0, 0), {3: (0, 1)}),
    (p_adic(5), (0, 0), (0, 0), {5: (1, 1)}),
]


@pytest.mark.parametrize("atom,inf,default,exc", _ATOM_CLASSES, ids=lambda v: str(v))
def test_atom_classes_in_the_compact_discrete_basis(atom, inf, default, exc):
    c = k0_of(_of(atom))
    assert c.at_infinity == inf
    assert c.default == default
    assert dict(c.exceptions) == exc


@hypothesis.given(strat.integers(1, 500))
def test_finite_groups_have_zero_class(m):
    assert k0_of(decompose_cyclic(m)) == K0_ZERO


@hypothesis.given(groups, groups)
def test_k0_is_additive(x, y):
    assert k0_of(x + y) == k0_of(x) + k0_of(y)


@hypothesis.given(groups)
def test_shift_negates_the_class(x):
    d = GradedObject.from_group(x).shift(1).as_derived()
    assert k0_of_derived(d) == -k0_of(x)


@hypothesis.given(k0_classes)
def test_adelic_coordinates_round_trip(c):
    assert from_adelic(to_adelic(c)) == c
    assert to_adelic(from_adelic(c)) == c


@hypothesis.given(k0_classes)
def test_involution_is_additive_and_involutive(c):
    assert involution(involution(c)) == c
    assert involution(c + c) == involution(c) + involution(c)


def test_unit_is_all_ones_in_the_adelic_basis():
    one = to_adelic(k0_of(_of(INT)))
    assert one.at_infinity == (1, 1) and one.default == (1, 1) and not one.exceptions


def test_multiplication_examples():
    t = k0_of(_of(CIRCLE))
    q = k0_of(_of(RAT))
    afin = k0_of(_of(FIN_ADELE))
    assert mul(t, t) == -t
    assert str(mul(q, t)) == "(0,1); default (0,-1)"
    assert mul(q, t) == k0_of(_of(SOLENOID)) - afin
    assert mul(afin, t) == -afin
    # R tensors to zero against T: rhom(R, Z) has no terms
    assert mul(k0_of(_of(REAL)), t) == K0_ZERO
    assert mul(k0_of(_of(REAL)), k0_of(_of(REAL))) == k0_of(_of(REAL))


def test_multiplication_tracks_the_derived_tensor():
    probe = [_of(a) for a in (INT, RAT, REAL, CIRCLE, SOLENOID, ADELE, FIN_ADELE,
                              fin_cyc(2, 1), pro_int(2), p_adic(2), pruefer(2))]
    for x in probe:
        for y in probe:
            assert mul(k0_of(x), k0_of(y)) == k0_of_derived(derived_tensor(x, y))


def test_involution_is_not_multiplicative():
    t = k0_of(_of(CIRCLE))
    one = k0_of(_of(INT))
    assert involution(mul(t, t)) == -one
    assert mul(involution(t), involution(t)) == one


def test_class_of_e_is_q_minus_afin():
    e = rhom(_of(RAT), _of(INT))
    assert k0_of_derived(e) == k0_of(_of(RAT)) - k0_of(_of(FIN_ADELE))


def test_rendering():
    assert str(k0_of(_of(ADELE))) == "(1,1); default (1,1)"
    assert str(k0_of(_of(pro_int(2)) + _of(CIRCLE))) == "(0,1); default (0,0); 2:(1,0)"


def test_exactly_one_reconstruction_formula_wins():
    assert left_inverse_winner() == "corrected"
    losers = [g for g in _generator_families() if _candidate("literal", g) != k0_of(g)]
    assert losers, "the rejected formula should fail on some generator"


@hypothesis.given(groups)
def test_reconstruction_from_invariants_is_the_identity(x):
    assert k0_from_invariants(x) == k0_of(x)
