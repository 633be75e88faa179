"""Atoms and canonical direct sums of finite-rank LCA groups.

The engine works with eleven indecomposable building blocks ("atoms"): the
finite cyclic groups Z/p^n, the p-adic integers Z_p, the p-adic numbers Q_p,
the Pruefer groups Q_p/Z_p, and the seven parameter-free groups Z, Q, R, the
circle T, the solenoid Sol (the dual of discrete Q), the adeles A and the
finite adeles Afin.  Every group value is a finite direct sum of atoms kept
in a canonical sorted multiset, so equality of groups is equality of
canonical forms and every value serializes to a unique string.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, Iterable, Optional, Tuple


class EngineInvariantError(RuntimeError):
    """An internal consistency check failed (a bug, not bad user input)."""


def is_prime(k: int) -> bool:
    # Trial division; subscripts and cyclic orders are user-typed, never large.
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d = 3 if d == 2 else d + 2
    return True


def factor(m: int) -> Dict[int, int]:
    """Prime factorization of m >= 1 as {prime: exponent}.

    >>> factor(12)
    {2: 2, 3: 1}
    >>> factor(1)
    {}
    """
    if m < 1:
        raise ValueError("order must be a positive integer")
    out: Dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d = 3 if d == 2 else d + 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


@dataclass(frozen=True)
class Prime:
    """A prime number, checked at construction.

    >>> Prime(5).value
    5
    >>> Prime(6)
    Traceback (most recent call last):
        ...
    ValueError: 6 is not prime
    """

    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or not is_prime(self.value):
            raise ValueError(f"{self.value} is not prime")

    def __lt__(self, other: "Prime") -> bool:
        return self.value < other.value

    def __str__(self) -> str:
        return str(self.value)


class Family(IntEnum):
    """The eleven atom kinds, numbered in canonical sort order."""

    INT = 0
    RAT = 1
    REAL = 2
    CIRCLE = 3
    SOLENOID = 4
    ADELE = 5
    FIN_ADELE = 6
    FIN_CYC = 7
    PRO_INT = 8
    P_ADIC = 9
    PRUEFER = 10


_P_LOCAL = (Family.FIN_CYC, Family.PRO_INT, Family.P_ADIC, Family.PRUEFER)

_GLOBAL_NAMES = {
    Family.INT: "Z",
    Family.RAT: "Q",
    Family.REAL: "R",
    Family.CIRCLE: "T",
    Family.SOLENOID: "Sol",
    Family.ADELE: "A",
    Family.FIN_ADELE: "Afin",
}

# Pontryagin duality is an involution on atoms; FinCyc keeps its exponent.
_DUAL_FAMILY = {
    Family.INT: Family.CIRCLE,
    Family.CIRCLE: Family.INT,
    Family.RAT: Family.SOLENOID,
    Family.SOLENOID: Family.RAT,
    Family.REAL: Family.REAL,
    Family.ADELE: Family.ADELE,
    Family.FIN_ADELE: Family.FIN_ADELE,
    Family.FIN_CYC: Family.FIN_CYC,
    Family.PRO_INT: Family.PRUEFER,
    Family.PRUEFER: Family.PRO_INT,
    Family.P_ADIC: Family.P_ADIC,
}


@dataclass(frozen=True)
class Atom:
    """One indecomposable summand.

    Total order: family (Z, Q, R, T, Sol, A, Afin, Z/p^n, Z_p, Q_p, Q_p/Z_p),
    then prime ascending, then exponent ascending.

    >>> str(Atom(Family.FIN_CYC, Prime(2), 3))
    'Z/8'
    >>> str(Atom(Family.PRO_INT, Prime(5)).dual())
    'Q_5/Z_5'
    """

    family: Family
    p: Optional[Prime] = None
    n: int = 0

    def __post_init__(self):
        if self.family in _P_LOCAL:
            if self.p is None:
                raise ValueError(f"{self.family.name} needs a prime")
            if self.family is Family.FIN_CYC:
                if self.n < 1:
                    raise ValueError("cyclic exponent must be >= 1")
            elif self.n != 0:
                raise ValueError(f"{self.family.name} takes no exponent")
        elif self.p is not None or self.n != 0:
            raise ValueError(f"{self.family.name} takes no parameters")

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        return (int(self.family), self.p.value if self.p else 0, self.n)

    def __lt__(self, other: "Atom") -> bool:
        return self.sort_key < other.sort_key

    def is_p_local(self) -> bool:
        return self.family in _P_LOCAL

    def dual(self) -> "Atom":
        return Atom(_DUAL_FAMILY[self.family], self.p, self.n)

    def __str__(self) -> str:
        f = self.family
        if f is Family.FIN_CYC:
            return f"Z/{self.p.value ** self.n}"
        if f is Family.PRO_INT:
            return f"Z_{self.p}"
        if f is Family.P_ADIC:
            return f"Q_{self.p}"
        if f is Family.PRUEFER:
            return f"Q_{self.p}/Z_{self.p}"
        return _GLOBAL_NAMES[f]


INT = Atom(Family.INT)
RAT = Atom(Family.RAT)
REAL = Atom(Family.REAL)
CIRCLE = Atom(Family.CIRCLE)
SOLENOID = Atom(Family.SOLENOID)
ADELE = Atom(Family.ADELE)
FIN_ADELE = Atom(Family.FIN_ADELE)


def _as_prime(p) -> Prime:
    return p if isinstance(p, Prime) else Prime(p)


def fin_cyc(p, n: int) -> Atom:
    return Atom(Family.FIN_CYC, _as_prime(p), n)


def pro_int(p) -> Atom:
    return Atom(Family.PRO_INT, _as_prime(p))


def p_adic(p) -> Atom:
    return Atom(Family.P_ADIC, _as_prime(p))


def pruefer(p) -> Atom:
    return Atom(Family.PRUEFER, _as_prime(p))


@dataclass(frozen=True)
class FlcaGroup:
    """A finite direct sum of atoms in canonical form.

    Terms are (atom, count) pairs, sorted by the atom order with counts
    merged; the empty sum is the zero group.  Construct through
    canonicalize() or FlcaGroup.of().

    >>> str(canonicalize([(CIRCLE, 1), (INT, 1), (CIRCLE, 1)]))
    'Z + T^2'
    >>> str(FlcaGroup())
    '0'
    """

    terms: Tuple[Tuple[Atom, int], ...] = ()

    def __post_init__(self):
        prev = None
        for atom, count in self.terms:
            if not isinstance(count, int) or count < 1:
                raise ValueError("multiplicities must be positive integers")
            if prev is not None and not prev < atom:
                raise ValueError("terms must be strictly sorted")
            prev = atom

    @classmethod
    def of(cls, *atoms: Atom) -> "FlcaGroup":
        return canonicalize([(a, 1) for a in atoms])

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FlcaGroup") -> "FlcaGroup":
        return canonicalize(list(self.terms) + list(other.terms))

    def __mul__(self, count: int) -> "FlcaGroup":
        if count < 0:
            raise ValueError("multiplicities must be nonnegative")
        return canonicalize([(a, c * count) for a, c in self.terms])

    __rmul__ = __mul__

    def atoms(self) -> Iterable[Atom]:
        """The underlying multiset, with repetitions."""
        for atom, count in self.terms:
            for _ in range(count):
                yield atom

    def dual(self) -> "FlcaGroup":
        return canonicalize([(a.dual(), c) for a, c in self.terms])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for atom, count in self.terms:
            parts.append(f"{atom}^{count}" if count > 1 else str(atom))
        return " + ".join(parts)


ZERO = FlcaGroup()


def canonicalize(raw: Iterable[Tuple[Atom, int]]) -> FlcaGroup:
    """Sort, merge and prune a list of (atom, count) pairs.  Idempotent.

    >>> str(canonicalize([(fin_cyc(2, 3), 2)]))
    'Z/8^2'
    >>> canonicalize([]) == ZERO
    True
    """
    merged: Dict[Atom, int] = {}
    for atom, count in raw:
        if count < 0:
            raise ValueError("multiplicities must be nonnegative")
        if count:
            merged[atom] = merged.get(atom, 0) + count
    items = sorted(merged.items(), key=lambda it: it[0].sort_key)
    return FlcaGroup(tuple((a, c) for a, c in items if c))


def decompose_cyclic(m: int) -> FlcaGroup:
    """Primary decomposition of the cyclic group Z/m.

    >>> str(decompose_cyclic(12))
    'Z/4 + Z/3'
    >>> str(decompose_cyclic(1))
    '0'
    """
    return canonicalize([(fin_cyc(p, e), 1) for p, e in factor(m).items()])


def dual(x: FlcaGroup) -> FlcaGroup:
    """Pontryagin dual, atom by atom.  An involution.

    >>> str(dual(FlcaGroup.of(pro_int(5))))
    'Q_5/Z_5'
    """
    return x.dual()
