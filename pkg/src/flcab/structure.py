"""Classification, the type filtration, rank invariants, and resolutions.

Each atom carries a fixed record of topological properties (compactness,
divisibility, membership in the injective class I and the projective class
P, ...).  Groups filter canonically into a type-S1 part, a type-A part and a
type-Z part, the type-A part splitting further into a vector part and a
topological torsion part.  Rank data and two-term resolutions extend from
atoms to sums additively.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from . import evmap
from .atoms import (
    ADELE,
    CIRCLE,
    FIN_ADELE,
    INT,
    RAT,
    REAL,
    SOLENOID,
    Atom,
    Family,
    FlcaGroup,
    Prime,
    canonicalize,
    fin_cyc,
    p_adic,
    pro_int,
    pruefer,
)


class TypeClass(Enum):
    Z = "Z"
    S1 = "S1"
    A = "A"


@dataclass(frozen=True)
class PropertyRecord:
    compact: bool
    discrete: bool
    connected: bool
    type_class: TypeClass
    divisible: bool
    strictly_divisible: bool
    codivisible: bool
    in_I: bool
    in_P: bool
    topological_torsion: bool
    p_group_for: Optional[Prime]


_NOT_DIVISIBLE = {Family.INT, Family.FIN_CYC, Family.PRO_INT}
_NOT_CODIVISIBLE = {Family.CIRCLE, Family.FIN_CYC, Family.PRUEFER}
# I: divisible with zero Z-part; P: codivisible with zero S1-part.
_IN_I = {
    Family.PRUEFER,
    Family.P_ADIC,
    Family.CIRCLE,
    Family.REAL,
    Family.SOLENOID,
    Family.ADELE,
    Family.FIN_ADELE,
}
_IN_P = {
    Family.PRO_INT,
    Family.P_ADIC,
    Family.REAL,
    Family.INT,
    Family.RAT,
    Family.ADELE,
    Family.FIN_ADELE,
}
_COMPACT = {Family.FIN_CYC, Family.PRO_INT, Family.CIRCLE, Family.SOLENOID}
_DISCRETE = {Family.INT, Family.RAT, Family.FIN_CYC, Family.PRUEFER}
_CONNECTED = {Family.REAL, Family.CIRCLE, Family.SOLENOID}
_TOP_TORSION = {
    Family.FIN_CYC,
    Family.PRO_INT,
    Family.P_ADIC,
    Family.PRUEFER,
    Family.FIN_ADELE,
}
_TYPE = {
    Family.INT: TypeClass.Z,
    Family.RAT: TypeClass.Z,
    Family.CIRCLE: TypeClass.S1,
    Family.SOLENOID: TypeClass.S1,
}


def classify_atom(a: Atom) -> PropertyRecord:
    """The fixed classification table, one record per atom.

    >>> classify_atom(RAT).in_P and not classify_atom(RAT).in_I
    True
    >>> classify_atom(p_adic(7)).in_I and classify_atom(p_adic(7)).in_P
    True
    """
    f = a.family
    divisible = f not in _NOT_DIVISIBLE
    return PropertyRecord(
        compact=f in _COMPACT,
        discrete=f in _DISCRETE,
        connected=f in _CONNECTED,
        type_class=_TYPE.get(f, TypeClass.A),
        divisible=divisible,
        # at finite rank, divisibility forces strictness
        strictly_divisible=divisible,
        codivisible=f not in _NOT_CODIVISIBLE,
        in_I=f in _IN_I,
        in_P=f in _IN_P,
        topological_torsion=f in _TOP_TORSION,
        p_group_for=a.p if a.is_p_local() else None,
    )


@dataclass(frozen=True)
class Filtration:
    """The canonical three-step decomposition, plus the split of the A-part.

    part_S1 + part_A + part_Z reassembles the input; part_R + part_toptors
    reassembles part_A after each adele summand is split into R + Afin.
    """

    part_S1: FlcaGroup
    part_A: FlcaGroup
    part_Z: FlcaGroup
    part_R: FlcaGroup
    part_toptors: FlcaGroup


def filtration(x: FlcaGroup) -> Filtration:
    """Partition a group by type.

    >>> f = filtration(FlcaGroup.of(INT, CIRCLE, p_adic(5)))
    >>> str(f.part_S1), str(f.part_A), str(f.part_Z)
    ('T', 'Q_5', 'Z')
    """
    s1, aa, zz, rr, tt = [], [], [], [], []
    for atom, count in x.terms:
        t = classify_atom(atom).type_class
        if t is TypeClass.S1:
            s1.append((atom, count))
        elif t is TypeClass.Z:
            zz.append((atom, count))
        else:
            aa.append((atom, count))
            if atom.family is Family.REAL:
                rr.append((atom, count))
            elif atom.family is Family.ADELE:
                # the adele atom contributes R to the vector part and
                # Afin to the topological torsion part
                rr.append((REAL, count))
                tt.append((FIN_ADELE, count))
            else:
                tt.append((atom, count))
    return Filtration(
        part_S1=canonicalize(s1),
        part_A=canonicalize(aa),
        part_Z=canonicalize(zz),
        part_R=canonicalize(rr),
        part_toptors=canonicalize(tt),
    )


@dataclass(frozen=True)
class RankProfile:
    """Z-rank, S1-rank, and per-prime kernel/cokernel exponents of p-fold
    multiplication, the latter as an eventually-constant map.

    >>> str(ranks(FlcaGroup.of(INT)))
    'z-rank 1, s1-rank 0; default (0,1)'
    """

    z_rank: int = 0
    s1_rank: int = 0
    default: Tuple[int, int] = (0, 0)
    exceptions: evmap.Entries = ()

    def at(self, p: int) -> Tuple[int, int]:
        return evmap.at(self.default, self.exceptions, p)

    def __add__(self, other: "RankProfile") -> "RankProfile":
        default, entries = evmap.combine(
            (self.default, self.exceptions),
            (other.default, other.exceptions),
            lambda u, v: u + v,
        )
        return RankProfile(
            self.z_rank + other.z_rank, self.s1_rank + other.s1_rank, default, entries
        )

    def __mul__(self, count: int) -> "RankProfile":
        default, entries = evmap.transform(
            (self.default, self.exceptions), lambda pr: (pr[0] * count, pr[1] * count)
        )
        return RankProfile(self.z_rank * count, self.s1_rank * count, default, entries)

    __rmul__ = __mul__

    def dual(self) -> "RankProfile":
        default, entries = evmap.transform(
            (self.default, self.exceptions), lambda pr: (pr[1], pr[0])
        )
        return RankProfile(self.s1_rank, self.z_rank, default, entries)

    def __str__(self) -> str:
        head = f"z-rank {self.z_rank}, s1-rank {self.s1_rank}"
        body = f"default ({self.default[0]},{self.default[1]})"
        if self.exceptions:
            tail = ", ".join(f"{p}:({a},{b})" for p, (a, b) in self.exceptions)
            return f"{head}; {body}; {tail}"
        return f"{head}; {body}"


def _atom_ranks(a: Atom) -> RankProfile:
    f = a.family
    if f is Family.INT:
        return RankProfile(1, 0, (0, 1))  # Z/p cokernel at every prime
    if f is Family.RAT:
        return RankProfile(1, 0)
    if f is Family.REAL:
        return RankProfile(1, 1)
    if f is Family.CIRCLE:
        return RankProfile(0, 1, (1, 0))  # Z/p kernel at every prime
    if f is Family.SOLENOID:
        return RankProfile(0, 1)
    if f is Family.ADELE:
        return RankProfile(1, 1)
    if f is Family.FIN_CYC:
        return RankProfile(0, 0, (0, 0), ((a.p.value, (1, 1)),))
    if f is Family.PRO_INT:
        return RankProfile(0, 0, (0, 0), ((a.p.value, (0, 1)),))
    if f is Family.PRUEFER:
        return RankProfile(0, 0, (0, 0), ((a.p.value, (1, 0)),))
    return RankProfile()  # Afin, Q_p: p-fold multiplication is invertible


def ranks(x: FlcaGroup) -> RankProfile:
    """Rank profile of a sum; additive over direct sums.

    >>> str(ranks(FlcaGroup.of(fin_cyc(2, 3))))
    'z-rank 0, s1-rank 0; default (0,0); 2:(1,1)'
    """
    total = RankProfile()
    for atom, count in x.terms:
        total = total + _atom_ranks(atom) * count
    return total


def p_component(x: FlcaGroup, p) -> FlcaGroup:
    """The p-local part: p-local atoms at p, plus one Q_p per (finite) adele.

    >>> str(p_component(FlcaGroup.of(FIN_ADELE), 5))
    'Q_5'
    """
    p = p if isinstance(p, Prime) else Prime(p)
    out = []
    for atom, count in x.terms:
        if atom.is_p_local() and atom.p == p:
            out.append((atom, count))
        elif atom.family in (Family.ADELE, Family.FIN_ADELE):
            out.append((p_adic(p), count))
    return canonicalize(out)


class ResolutionKind(Enum):
    INJECTIVE = "injective"
    PROJECTIVE = "projective"


@dataclass(frozen=True)
class Resolution:
    """A two-term resolution; entries are listed in exact-sequence order.

    Injective: 0 -> X -> left -> right -> 0 with both entries in I.
    Projective: 0 -> left -> right -> X -> 0 with both entries in P.
    """

    kind: ResolutionKind
    left: FlcaGroup
    right: FlcaGroup


# Canonical atom-level choices.  Each pair is a strictly exact sequence
# around the atom: Z embeds in R with quotient T, Q in A with quotient Sol,
# Z/p^n in Q_p/Z_p with quotient Q_p/Z_p, Z_p in Q_p with quotient Q_p/Z_p.
_INJ = {
    Family.INT: lambda a: (REAL, CIRCLE),
    Family.RAT: lambda a: (ADELE, SOLENOID),
    Family.FIN_CYC: lambda a: (pruefer(a.p), pruefer(a.p)),
    Family.PRO_INT: lambda a: (p_adic(a.p), pruefer(a.p)),
}
_PROJ = {
    Family.CIRCLE: lambda a: (INT, REAL),
    Family.SOLENOID: lambda a: (RAT, ADELE),
    Family.FIN_CYC: lambda a: (pro_int(a.p), pro_int(a.p)),
    Family.PRUEFER: lambda a: (pro_int(a.p), p_adic(a.p)),
}


def resolve_injective(x: FlcaGroup) -> Resolution:
    """0 -> X -> I0 -> I1 -> 0 with I0, I1 in the injective class I.

    >>> r = resolve_injective(FlcaGroup.of(INT))
    >>> str(r.left), str(r.right)
    ('R', 'T')
    """
    left, right = [], []
    for atom, count in x.terms:
        if atom.family in _INJ:
            i0, i1 = _INJ[atom.family](atom)
            left.append((i0, count))
            right.append((i1, count))
        else:
            left.append((atom, count))  # already injective
    return Resolution(ResolutionKind.INJECTIVE, canonicalize(left), canonicalize(right))


def resolve_projective(x: FlcaGroup) -> Resolution:
    """0 -> P1 -> P0 -> X -> 0 with P0, P1 in the projective class P.

    >>> r = resolve_projective(FlcaGroup.of(CIRCLE))
    >>> str(r.left), str(r.right)
    ('Z', 'R')
    """
    left, right = [], []
    for atom, count in x.terms:
        if atom.family in _PROJ:
            p1, p0 = _PROJ[atom.family](atom)
            left.append((p1, count))
            right.append((p0, count))
        else:
            right.append((atom, count))  # already projective
    return Resolution(
        ResolutionKind.PROJECTIVE, canonicalize(left), canonicalize(right)
    )
