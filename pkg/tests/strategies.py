"""Shared hypothesis strategies for atoms, groups and k0 classes."""
import hypothesis.strategies as strat

from flcab import (
    ADELE,
    CIRCLE,
    FIN_ADELE,
    INT,
    RAT,
    REAL,
    SOLENOID,
    fin_cyc,
    make_k0,
    p_adic,
    pro_int,
    pruefer,
)
from flcab.atoms import canonicalize

PRIMES = [2, 3, 5, 7, 11]
GLOBALS = [INT, RAT, REAL, CIRCLE, SOLENOID, ADELE, FIN_ADELE]

atoms = strat.one_of(
    strat.sampled_from(GLOBALS),
    strat.builds(fin_cyc, strat.sampled_from(PRIMES), strat.integers(1, 4)),
    strat.builds(pro_int, strat.sampled_from(PRIMES)),
    strat.builds(p_adic, strat.sampled_from(PRIMES)),
    strat.builds(pruefer, strat.sampled_from(PRIMES)),
)

groups = strat.lists(
    strat.tuples(atoms, strat.integers(1, 3)), max_size=5
).map(canonicalize)

_pairs = strat.tuples(strat.integers(-3, 3), strat.integers(-3, 3))

k0_classes = strat.builds(
    make_k0,
    _pairs,
    _pairs,
    strat.dictionaries(strat.sampled_from(PRIMES), _pairs, max_size=3),
)
