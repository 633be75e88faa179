import hypothesis

from flcab import (
    ADELE,
    CIRCLE,
    FIN_ADELE,
    INT,
    RAT,
    REAL,
    SOLENOID,
    FlcaGroup,
    decompose_cyclic,
    fin_cyc,
    hom,
    p_adic,
    pro_int,
    pruefer,
    tensor,
)
from flcab.atoms import ZERO

from strategies import groups

_of = FlcaGroup.of


def test_hom_examples():
    assert hom(_of(RAT), _of(CIRCLE)) == _of(SOLENOID)
    assert hom(_of(RAT), _of(INT)) == ZERO
    assert hom(_of(CIRCLE), _of(CIRCLE)) == _of(INT)
    assert hom(_of(fin_cyc(2, 2)), _of(fin_cyc(2, 3))) == _of(fin_cyc(2, 2))
    assert hom(_of(pro_int(2)), _of(CIRCLE)) == _of(pruefer(2))
    assert hom(_of(FIN_ADELE), _of(FIN_ADELE)) == _of(FIN_ADELE)
    assert hom(decompose_cyclic(12), decompose_cyclic(18)) == decompose_cyclic(6)


def test_tensor_examples():
    assert tensor(_of(RAT), _of(CIRCLE)) == ZERO
    assert tensor(_of(REAL), _of(REAL)) == _of(REAL)
    assert tensor(_of(pro_int(2)), _of(pruefer(2))) == _of(pruefer(2))
    assert tensor(_of(p_adic(3)), _of(p_adic(5))) == ZERO
    assert tensor(_of(ADELE), _of(ADELE)) == _of(ADELE)
    assert tensor(decompose_cyclic(12), decompose_cyclic(18)) == decompose_cyclic(6)


@hypothesis.given(groups)
def test_unit_laws(x):
    one = _of(INT)
    assert tensor(one, x) == x
    assert tensor(x, one) == x
    assert hom(one, x) == x


@hypothesis.given(groups, groups)
def test_tensor_is_commutative(x, y):
    assert tensor(x, y) == tensor(y, x)


@hypothesis.given(groups, groups, groups)
def test_tensor_is_associative(x, y, z):
    assert tensor(tensor(x, y), z) == tensor(x, tensor(y, z))


@hypothesis.given(groups, groups, groups)
def test_hom_tensor_adjunction(x, y, z):
    assert hom(tensor(x, y), z) == hom(x, hom(y, z))


@hypothesis.given(groups, groups, groups)
def test_additivity(x, y, z):
    assert hom(x + y, z) == hom(x, z) + hom(y, z)
    assert hom(x, y + z) == hom(x, y) + hom(x, z)
    assert tensor(x + y, z) == tensor(x, z) + tensor(y, z)


@hypothesis.given(groups, groups)
def test_hom_is_dual_to_tensor(x, y):
    assert hom(x, y.dual()).dual() == tensor(x, y)
