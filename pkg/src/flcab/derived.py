"""Shifted sums of indecomposables and the derived Hom calculus.

Values of RHom live in the bounded derived category and decompose into
shifted atoms plus two extra indecomposables: E, the two-term complex
[Q > Afin] with Q in cohomological degree 0 and Afin in degree 1 (a dense
injection that is not a closed embedding, so it has no kernel or cokernel
among groups), and its dual E*, the complex [Afin > Sol] in degrees -1, 0.

Shift convention: a term t[n] occupies cohomological degree -n, so [-1]
means degree 1.  E[n] occupies degrees -n and 1-n, E*[n] degrees -1-n, -n.

The atom-level table is closed under three rules:
  R1  two finite cyclic p-atoms: kernel and cokernel are both Z/p^min(n,m);
  R2  a p-local atom against a q-local atom (p != q) gives 0;
  R3  rows and columns at Afin come from splitting A = R + Afin and
      subtracting the R contribution.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Tuple, Union

from .atoms import (
    ADELE,
    CIRCLE,
    FIN_ADELE,
    INT,
    RAT,
    REAL,
    SOLENOID,
    Atom,
    EngineInvariantError,
    Family,
    FlcaGroup,
    canonicalize,
    fin_cyc,
    p_adic,
    pro_int,
    pruefer,
)


class Special(Enum):
    """The two indecomposables that are not (shifted) groups."""

    E = "E"  # [Q > Afin] in degrees 0, 1
    EDUAL = "E*"  # [Afin > Sol] in degrees -1, 0

    def __str__(self) -> str:
        return self.value


Indecomposable = Union[Atom, Special]


def _indec_key(x: Indecomposable) -> Tuple[int, int, int, int]:
    if isinstance(x, Atom):
        return (0,) + x.sort_key
    return (1, 0, 0, 0) if x is Special.E else (2, 0, 0, 0)


def _canon(counts: Dict[Tuple[Indecomposable, int], int]):
    # indecomposable order first, then shift descending = degree ascending
    items = sorted(
        ((term, c) for term, c in counts.items() if c),
        key=lambda it: (_indec_key(it[0][0]), -it[0][1]),
    )
    for _, c in items:
        if c < 0:
            raise ValueError("multiplicities must be nonnegative")
    return tuple(items)


def _render(terms) -> str:
    if not terms:
        return "0"
    parts = []
    for (indec, shift), count in terms:
        s = str(indec)
        if count > 1:
            s += f"^{count}"
        if shift != 0:
            s += f"[{shift}]"
        parts.append(s)
    return " + ".join(parts)


@dataclass(frozen=True)
class GradedObject:
    """A bounded split complex: atoms placed in degrees, zero differentials.

    >>> str(GradedObject.from_group(FlcaGroup.of(INT)).shift(1))
    'Z[1]'
    """

    terms: Tuple[Tuple[Tuple[Atom, int], int], ...] = ()

    @classmethod
    def make(cls, triples: Iterable[Tuple[Atom, int, int]]) -> "GradedObject":
        counts: Dict[Tuple[Atom, int], int] = {}
        for atom, shift, count in triples:
            counts[(atom, shift)] = counts.get((atom, shift), 0) + count
        return cls(_canon(counts))

    @classmethod
    def from_group(cls, x: FlcaGroup) -> "GradedObject":
        return cls.make((a, 0, c) for a, c in x.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GradedObject") -> "GradedObject":
        return GradedObject.make(
            [(a, s, c) for (a, s), c in self.terms]
            + [(a, s, c) for (a, s), c in other.terms]
        )

    def __mul__(self, count: int) -> "GradedObject":
        return GradedObject.make((a, s, c * count) for (a, s), c in self.terms)

    __rmul__ = __mul__

    def shift(self, n: int) -> "GradedObject":
        return GradedObject.make((a, s + n, c) for (a, s), c in self.terms)

    def dual(self) -> "GradedObject":
        return GradedObject.make((a.dual(), -s, c) for (a, s), c in self.terms)

    def as_derived(self) -> "DerivedObject":
        return DerivedObject(self.terms)

    def __str__(self) -> str:
        return _render(self.terms)


@dataclass(frozen=True)
class DerivedObject:
    """A canonical sum of shifted indecomposables (atoms, E, E*).

    >>> str(DerivedObject.make([(Special.E, 0, 1), (INT, -1, 2)]))
    'Z^2[-1] + E'
    """

    terms: Tuple[Tuple[Tuple[Indecomposable, int], int], ...] = ()

    @classmethod
    def make(
        cls, triples: Iterable[Tuple[Indecomposable, int, int]]
    ) -> "DerivedObject":
        counts: Dict[Tuple[Indecomposable, int], int] = {}
        for indec, shift, count in triples:
            counts[(indec, shift)] = counts.get((indec, shift), 0) + count
        return cls(_canon(counts))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "DerivedObject") -> "DerivedObject":
        return DerivedObject.make(
            [(i, s, c) for (i, s), c in self.terms]
            + [(i, s, c) for (i, s), c in other.terms]
        )

    def shift(self, n: int) -> "DerivedObject":
        return DerivedObject.make((i, s + n, c) for (i, s), c in self.terms)

    def has_special(self) -> bool:
        return any(isinstance(i, Special) for (i, _), _ in self.terms)

    def to_graded(self) -> GradedObject:
        if self.has_special():
            raise ValueError("E and E* cannot be used as split complexes")
        return GradedObject(self.terms)

    def support(self) -> set:
        """The set of occupied cohomological degrees."""
        degrees = set()
        for (indec, shift), _ in self.terms:
            if indec is Special.E:
                degrees.update((-shift, 1 - shift))
            elif indec is Special.EDUAL:
                degrees.update((-1 - shift, -shift))
            else:
                degrees.add(-shift)
        return degrees

    def __str__(self) -> str:
        return _render(self.terms)


D_ZERO = DerivedObject()


def _derived(pairs: List[Tuple[Indecomposable, int]]) -> DerivedObject:
    return DerivedObject.make((i, s, 1) for i, s in pairs)


# --- the atom table, one function per row family ---------------------------
#
# Each function receives the row atom a and the column atom b; b is never
# Afin here (rule R3 is applied first) and never p-local at a different
# prime (rule R2).  Entries are (indecomposable, shift) pairs.


def _row_int(a: Atom, b: Atom):
    # Hom out of Z reproduces the target
    return [(b, 0)]


def _row_rat(a: Atom, b: Atom):
    f = b.family
    if f is Family.INT:
        return [(Special.E, 0)]
    if f in (Family.RAT, Family.REAL, Family.ADELE):
        return [(b, 0)]
    if f in (Family.CIRCLE, Family.SOLENOID):
        return [(SOLENOID, 0)]
    if f in (Family.P_ADIC, Family.PRUEFER):
        return [(p_adic(b.p), 0)]
    return []  # Z/p^n, Z_p


def _row_real(a: Atom, b: Atom):
    if b.family in (Family.REAL, Family.CIRCLE, Family.SOLENOID, Family.ADELE):
        return [(REAL, 0)]
    return []


def _row_circle(a: Atom, b: Atom):
    f = b.family
    if f is Family.CIRCLE:
        return [(INT, 0)]
    if f is Family.SOLENOID:
        return [(Special.E, 0)]
    if f is Family.REAL:
        return []
    if f is Family.ADELE:
        return [(FIN_ADELE, -1)]
    return [(b, -1)]  # Z, Q, and every p-local column move to degree 1


def _row_solenoid(a: Atom, b: Atom):
    f = b.family
    if f in (Family.CIRCLE, Family.SOLENOID):
        return [(RAT, 0)]
    if f in (Family.INT, Family.RAT):
        return [(RAT, -1)]
    return []


def _row_adele(a: Atom, b: Atom):
    f = b.family
    if f is Family.INT:
        return [(FIN_ADELE, -1)]
    if f is Family.REAL:
        return [(REAL, 0)]
    if f in (Family.CIRCLE, Family.SOLENOID, Family.ADELE):
        return [(ADELE, 0)]
    if f in (Family.P_ADIC, Family.PRUEFER):
        return [(p_adic(b.p), 0)]
    return []  # Q, Z/p^n, Z_p


def _row_fin_cyc(a: Atom, b: Atom):
    f = b.family
    if f is Family.FIN_CYC:
        # R1: kernel and cokernel of Z/p^n -> Z/p^m are both Z/p^min(n,m)
        k = fin_cyc(a.p, min(a.n, b.n))
        return [(k, 0), (k, -1)]
    if f in (Family.PRUEFER, Family.CIRCLE):
        return [(a, 0)]
    if f in (Family.PRO_INT, Family.INT):
        return [(a, -1)]
    return []  # Q_p, R, Q, Sol, A


def _row_pro_int(a: Atom, b: Atom):
    f = b.family
    if f is Family.FIN_CYC:
        return [(b, 0)]
    if f in (Family.PRUEFER, Family.CIRCLE):
        return [(pruefer(a.p), 0)]
    if f in (Family.P_ADIC, Family.SOLENOID, Family.ADELE):
        return [(p_adic(a.p), 0)]
    if f is Family.PRO_INT:
        return [(a, 0)]
    if f is Family.INT:
        return [(pruefer(a.p), -1)]
    return []  # R, Q


def _row_p_adic(a: Atom, b: Atom):
    f = b.family
    if f in (
        Family.PRUEFER,
        Family.P_ADIC,
        Family.CIRCLE,
        Family.SOLENOID,
        Family.ADELE,
    ):
        return [(a, 0)]
    if f is Family.INT:
        return [(a, -1)]
    return []  # Z/p^m, Z_p, R, Q


def _row_pruefer(a: Atom, b: Atom):
    f = b.family
    if f is Family.FIN_CYC:
        return [(b, -1)]
    if f in (Family.PRUEFER, Family.CIRCLE):
        return [(pro_int(a.p), 0)]
    if f in (Family.PRO_INT, Family.INT):
        return [(pro_int(a.p), -1)]
    return []  # Q_p, R, Q, Sol, A


_ROWS = {
    Family.INT: _row_int,
    Family.RAT: _row_rat,
    Family.REAL: _row_real,
    Family.CIRCLE: _row_circle,
    Family.SOLENOID: _row_solenoid,
    Family.ADELE: _row_adele,
    Family.FIN_CYC: _row_fin_cyc,
    Family.PRO_INT: _row_pro_int,
    Family.P_ADIC: _row_p_adic,
    Family.PRUEFER: _row_pruefer,
}


def _split_adeles(d: DerivedObject) -> DerivedObject:
    out = []
    for (indec, shift), count in d.terms:
        if isinstance(indec, Atom) and indec.family is Family.ADELE:
            out.append((REAL, shift, count))
            out.append((FIN_ADELE, shift, count))
        else:
            out.append((indec, shift, count))
    return DerivedObject.make(out)


def _cell_sub(minuend: DerivedObject, subtrahend: DerivedObject) -> DerivedObject:
    """Multiset difference used by rule R3; must be an honest sub-multiset."""
    if subtrahend.is_zero():
        return minuend
    big = dict(_split_adeles(minuend).terms)
    for term, count in _split_adeles(subtrahend).terms:
        have = big.get(term, 0)
        if have < count:
            raise EngineInvariantError(
                f"adele splitting failed: cannot remove {count} x {term} "
                f"from {minuend}"
            )
        big[term] = have - count
    return DerivedObject.make((i, s, c) for (i, s), c in big.items())


def atom_rhom(a: Atom, b: Atom) -> DerivedObject:
    """RHom of two atoms.

    >>> str(atom_rhom(CIRCLE, INT))
    'Z[-1]'
    >>> str(atom_rhom(RAT, INT))
    'E'
    >>> str(atom_rhom(pro_int(3), p_adic(5)))
    '0'
    """
    if a.family is Family.FIN_ADELE:
        return _cell_sub(atom_rhom(ADELE, b), atom_rhom(REAL, b))
    if b.family is Family.FIN_ADELE:
        return _cell_sub(atom_rhom(a, ADELE), atom_rhom(a, REAL))
    if a.is_p_local() and b.is_p_local() and a.p != b.p:
        return D_ZERO  # R2: p-local against q-local vanishes
    return _derived(_ROWS[a.family](a, b))


GradedLike = Union[FlcaGroup, GradedObject, DerivedObject]


def as_graded(x: GradedLike) -> GradedObject:
    if isinstance(x, FlcaGroup):
        return GradedObject.from_group(x)
    if isinstance(x, DerivedObject):
        return x.to_graded()
    return x


def rhom(x: GradedLike, y: GradedLike) -> DerivedObject:
    """Derived Hom, extended bilinearly with shift bookkeeping.

    rhom(a[m], b[n]) = atom_rhom(a, b)[n - m].

    >>> str(rhom(FlcaGroup.of(INT, CIRCLE), FlcaGroup.of(INT)))
    'Z + Z[-1]'
    """
    gx, gy = as_graded(x), as_graded(y)
    out: Dict[Tuple[Indecomposable, int], int] = {}
    for (a, m), ca in gx.terms:
        for (b, n), cb in gy.terms:
            for (indec, s), c in atom_rhom(a, b).terms:
                key = (indec, s + n - m)
                out[key] = out.get(key, 0) + c * ca * cb
    return DerivedObject.make((i, s, c) for (i, s), c in out.items())


def dual_derived(d: DerivedObject) -> DerivedObject:
    """Termwise dual with shift negation; E and E* trade places.

    >>> str(dual_derived(_derived([(INT, -1)])))
    'T[1]'
    """
    out = []
    for (indec, shift), count in d.terms:
        if indec is Special.E:
            out.append((Special.EDUAL, -shift, count))
        elif indec is Special.EDUAL:
            out.append((Special.E, -shift, count))
        else:
            out.append((indec.dual(), -shift, count))
    return DerivedObject.make(out)


def derived_tensor(x: GradedLike, y: GradedLike) -> DerivedObject:
    """Derived tensor product, defined as dual(rhom(x, dual y)).

    >>> str(derived_tensor(FlcaGroup.of(CIRCLE), FlcaGroup.of(CIRCLE)))
    'T[1]'
    >>> str(derived_tensor(FlcaGroup.of(RAT), FlcaGroup.of(CIRCLE)))
    'E*'
    """
    return dual_derived(rhom(x, as_graded(y).dual()))


class HeartToken(Enum):
    """Cohomology classes that exist only in the enlarged heart: the formal
    cokernels of the two dense-image indecomposable differentials."""

    COK_Q_TO_AFIN = "Cok(Q > Afin)"
    COK_AFIN_TO_SOL = "Cok(Afin > Sol)"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExtResult:
    """One cohomology object of an RHom value: an ordinary group plus any
    heart tokens contributed by E or E* summands."""

    tokens: Tuple[Tuple[HeartToken, int], ...] = ()
    group: FlcaGroup = FlcaGroup()

    def is_plain_group(self) -> bool:
        return not self.tokens

    def is_zero(self) -> bool:
        return not self.tokens and self.group.is_zero()

    def __str__(self) -> str:
        parts = []
        for token, count in self.tokens:
            parts.append(f"{token}^{count}" if count > 1 else str(token))
        if not self.group.is_zero():
            parts.append(str(self.group))
        return " + ".join(parts) if parts else "0"


def ext(n: int, x: GradedLike, y: GradedLike) -> ExtResult:
    """The degree-n cohomology of rhom(x, y).

    An atom term t[k] sits in degree -k.  E[k] has zero cohomology in
    degree -k (Hom(Q, Z) = 0) and the token Cok(Q > Afin) in degree 1-k;
    E*[k] has zero cohomology in degree -1-k and Cok(Afin > Sol) in
    degree -k.

    >>> str(ext(1, FlcaGroup.of(CIRCLE), FlcaGroup.of(INT)))
    'Z'
    >>> str(ext(1, FlcaGroup.of(RAT), FlcaGroup.of(INT)))
    'Cok(Q > Afin)'
    """
    tokens: Dict[HeartToken, int] = {}
    group = []
    for (indec, shift), count in rhom(x, y).terms:
        if indec is Special.E:
            if n == 1 - shift:
                tokens[HeartToken.COK_Q_TO_AFIN] = (
                    tokens.get(HeartToken.COK_Q_TO_AFIN, 0) + count
                )
        elif indec is Special.EDUAL:
            if n == -shift:
                tokens[HeartToken.COK_AFIN_TO_SOL] = (
                    tokens.get(HeartToken.COK_AFIN_TO_SOL, 0) + count
                )
        elif n == -shift:
            group.append((indec, count))
    ordered = tuple(
        (t, tokens[t]) for t in (HeartToken.COK_Q_TO_AFIN, HeartToken.COK_AFIN_TO_SOL)
        if t in tokens
    )
    return ExtResult(ordered, canonicalize(group))
