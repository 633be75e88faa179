"""Underived Hom and the tensor product on groups.

Hom is the degree-0 slice of the derived table, so Ext^0 = Hom holds by
construction; the tensor product is defined by duality,
tensor(x, y) = dual(hom(x, dual y)), with unit Z.
"""
from __future__ import annotations

from .atoms import EngineInvariantError, FlcaGroup
from .derived import ext


def hom(x: FlcaGroup, y: FlcaGroup) -> FlcaGroup:
    """The group of continuous homomorphisms x -> y.

    >>> from .atoms import FlcaGroup, RAT, CIRCLE, fin_cyc
    >>> str(hom(FlcaGroup.of(RAT), FlcaGroup.of(CIRCLE)))
    'Sol'
    >>> str(hom(FlcaGroup.of(fin_cyc(2, 2)), FlcaGroup.of(fin_cyc(2, 3))))
    'Z/4'
    """
    r = ext(0, x, y)
    if not r.is_plain_group():
        # E only ever sits in degrees 0,1 with zero classical H^0, so the
        # degree-0 slice of an RHom of groups is always a group
        raise EngineInvariantError(f"hom({x}, {y}) left the group world: {r}")
    return r.group


def tensor(x: FlcaGroup, y: FlcaGroup) -> FlcaGroup:
    """The monoidal product dual(hom(x, dual y)); commutative, unit Z.

    >>> from .atoms import FlcaGroup, RAT, pro_int, pruefer
    >>> str(tensor(FlcaGroup.of(pro_int(5)), FlcaGroup.of(pruefer(5))))
    'Q_5/Z_5'
    >>> str(tensor(FlcaGroup.of(RAT), FlcaGroup.of(RAT)))
    'Q'
    """
    return hom(x, y.dual()).dual()
