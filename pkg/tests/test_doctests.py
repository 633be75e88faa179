import doctest

import pytest

import flcab.atoms
import flcab.checks
import flcab.cli
import flcab.derived
import flcab.evmap
import flcab.expr
import flcab.homtensor
import flcab.k0
import flcab.structure

MODULES = [
    flcab.atoms,
    flcab.evmap,
    flcab.structure,
    flcab.derived,
    flcab.homtensor,
    flcab.k0,
    flcab.expr,
    flcab.checks,
    flcab.cli,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_module_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0
