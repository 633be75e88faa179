"""Expression language over the engine: parser, evaluator, renderers.

Grammar (whitespace insensitive):

    expr    := term ('+' term)*
    term    := primary ('^' nat)? ('[' int ']')?
    primary := atom | '0' | '(' expr ')' | func '(' args ')'
    atom    := Z | Q | R | T | Sol | A | Afin | Z/nat | Z_p | Q_p | Q_p/Z_p

Functions: dual(X), hom(X,Y), tensor(X,Y), rhom(X,Y), dtensor(X,Y),
ext(n,X,Y), k0(X), k0mul(X,Y), ranks(X), filt(X), pcomp(X,p), resI(X),
resP(X), is(property,X).  Composite Z/m is primary-decomposed on input.
Shifts X[n] are only accepted inside rhom/dtensor/ext/k0 arguments.  E and
E* appear in output only.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .atoms import (
    ADELE,
    CIRCLE,
    FIN_ADELE,
    INT,
    RAT,
    REAL,
    SOLENOID,
    FlcaGroup,
    decompose_cyclic,
    is_prime,
    p_adic,
    pro_int,
    pruefer,
)
from .derived import (
    DerivedObject,
    GradedObject,
    Special,
    derived_tensor,
    dual_derived,
    ext,
    rhom,
)
from .homtensor import hom, tensor
from .k0 import K0Class, k0_of, k0_of_derived, mul
from .structure import (
    Filtration,
    RankProfile,
    Resolution,
    ResolutionKind,
    TypeClass,
    classify_atom,
    filtration,
    p_component,
    ranks,
    resolve_injective,
    resolve_projective,
)


class ExprError(ValueError):
    """A user-level problem with an expression: syntax, atoms, types."""


class ParseError(ExprError):
    pass


class EvalError(ExprError):
    pass


# --- tokens and AST ---------------------------------------------------------

_TOKEN_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*|\d+|.")

FUNCTIONS = {
    "dual": 1,
    "hom": 2,
    "tensor": 2,
    "rhom": 2,
    "dtensor": 2,
    "ext": 3,
    "k0": 1,
    "k0mul": 2,
    "ranks": 1,
    "filt": 1,
    "pcomp": 2,
    "resI": 1,
    "resP": 1,
    "is": 2,
}

_GLOBAL_ATOMS = {
    "Z": INT,
    "Q": RAT,
    "R": REAL,
    "T": CIRCLE,
    "Sol": SOLENOID,
    "A": ADELE,
    "Afin": FIN_ADELE,
}


@dataclass(frozen=True)
class Token:
    kind: str  # name | num | sym
    text: str
    pos: int


def _tokenize(text: str) -> List[Token]:
    out = []
    for m in _TOKEN_RE.finditer(text):
        s = m.group()
        if s.isspace():
            continue
        if s[0].isalpha():
            out.append(Token("name", s, m.start()))
        elif s.isdigit():
            out.append(Token("num", s, m.start()))
        elif s in "+-^,()[]/":
            out.append(Token("sym", s, m.start()))
        else:
            raise ParseError(f"unexpected character {s!r} at position {m.start()}")
    return out


@dataclass(frozen=True)
class GroupLit:
    group: FlcaGroup


@dataclass(frozen=True)
class Sum:
    parts: Tuple


@dataclass(frozen=True)
class Pow:
    base: object
    count: int


@dataclass(frozen=True)
class Shift:
    base: object
    n: int


@dataclass(frozen=True)
class Call:
    func: str
    args: Tuple


@dataclass(frozen=True)
class IntArg:
    n: int


@dataclass(frozen=True)
class NameArg:
    name: str


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> Optional[Token]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input at position {len(self.text)}")
        self.i += 1
        return tok

    def at_sym(self, s: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == "sym" and tok.text == s

    def expect_sym(self, s: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != "sym" or tok.text != s:
            pos = tok.pos if tok else len(self.text)
            raise ParseError(f"expected '{s}' at position {pos}")
        return self.take()

    def expect_num(self) -> int:
        tok = self.peek()
        if tok is None or tok.kind != "num":
            pos = tok.pos if tok else len(self.text)
            raise ParseError(f"expected a number at position {pos}")
        self.take()
        return int(tok.text)

    def parse(self):
        node = self.parse_expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.text!r} at position {tok.pos}")
        return node

    def parse_expr(self):
        parts = [self.parse_term()]
        while self.at_sym("+"):
            self.take()
            parts.append(self.parse_term())
        return parts[0] if len(parts) == 1 else Sum(tuple(parts))

    def parse_term(self):
        node = self.parse_primary()
        if self.at_sym("^"):
            self.take()
            node = Pow(node, self.expect_num())
        if self.at_sym("["):
            self.take()
            node = Shift(node, self.parse_int())
            self.expect_sym("]")
        return node

    def parse_int(self) -> int:
        if self.at_sym("-"):
            self.take()
            return -self.expect_num()
        return self.expect_num()

    def parse_primary(self):
        tok = self.peek()
        if tok is None:
            raise ParseError(f"expected an expression at position {len(self.text)}")
        if tok.kind == "sym" and tok.text == "(":
            self.take()
            node = self.parse_expr()
            self.expect_sym(")")
            return node
        if tok.kind == "name":
            self.take()
            nxt = self.peek()
            if tok.text in FUNCTIONS and nxt is not None and nxt.kind == "sym" and nxt.text == "(":
                return self.parse_call(tok.text)
            return self.parse_atom(tok)
        if tok.kind == "num" and tok.text == "0":
            # the zero group prints as 0, so accept it back
            self.take()
            return GroupLit(FlcaGroup())
        raise ParseError(f"expected an atom or function at position {tok.pos}")

    def parse_call(self, func: str) -> Call:
        self.expect_sym("(")
        args: List[object] = []
        if not self.at_sym(")"):
            while True:
                args.append(self.parse_arg(func, len(args)))
                if self.at_sym(","):
                    self.take()
                    continue
                break
        self.expect_sym(")")
        arity = FUNCTIONS[func]
        if len(args) != arity:
            raise ParseError(f"{func} expects {arity} argument(s), got {len(args)}")
        return Call(func, tuple(args))

    def parse_arg(self, func: str, index: int):
        if (func, index) in (("ext", 0), ("pcomp", 1)):
            return IntArg(self.parse_int())
        if func == "is" and index == 0:
            tok = self.peek()
            if tok is None or tok.kind != "name":
                pos = tok.pos if tok else len(self.text)
                raise ParseError(f"expected a property name at position {pos}")
            self.take()
            return NameArg(tok.text)
        return self.parse_expr()

    def parse_atom(self, tok: Token):
        name = tok.text
        if name == "Z" and self.at_sym("/"):
            self.take()
            m = self.expect_num()
            if m < 1:
                raise ParseError(f"Z/{m} is not a group")
            return GroupLit(decompose_cyclic(m))
        if name in _GLOBAL_ATOMS:
            return GroupLit(FlcaGroup.of(_GLOBAL_ATOMS[name]))
        pro = re.fullmatch(r"Z_(\d+)", name)
        if pro:
            p = int(pro.group(1))
            if not is_prime(p):
                raise ParseError(f"{p} is not prime")
            return GroupLit(FlcaGroup.of(pro_int(p)))
        pad = re.fullmatch(r"Q_(\d+)", name)
        if pad:
            p = int(pad.group(1))
            if not is_prime(p):
                raise ParseError(f"{p} is not prime")
            if self.at_sym("/"):
                self.take()
                den = self.peek()
                if den is None or den.kind != "name" or not re.fullmatch(r"Z_(\d+)", den.text):
                    pos = den.pos if den else len(self.text)
                    raise ParseError(f"expected Z_{p} at position {pos}")
                self.take()
                q = int(den.text[2:])
                if q != p:
                    raise ParseError(f"Q_{p}/Z_{q} mixes different primes")
                return GroupLit(FlcaGroup.of(pruefer(p)))
            return GroupLit(FlcaGroup.of(p_adic(p)))
        raise ParseError(f"unknown name {name!r} at position {tok.pos}")


def parse(text: str):
    """Parse an expression into an AST; raises ParseError on bad input."""
    return _Parser(text).parse()


# --- evaluation -------------------------------------------------------------


@dataclass(frozen=True)
class Value:
    kind: str  # group, graded, derived, k0, ranks, filtration, ext, bool, resolution
    data: object


_PROPERTIES = {
    "compact": lambda r: r.compact,
    "discrete": lambda r: r.discrete,
    "connected": lambda r: r.connected,
    "divisible": lambda r: r.divisible,
    "strictly_divisible": lambda r: r.strictly_divisible,
    "codivisible": lambda r: r.codivisible,
    "in_I": lambda r: r.in_I,
    "in_P": lambda r: r.in_P,
    "topological_torsion": lambda r: r.topological_torsion,
    "type_Z": lambda r: r.type_class is TypeClass.Z,
    "type_S1": lambda r: r.type_class is TypeClass.S1,
    "type_A": lambda r: r.type_class is TypeClass.A,
}


def _want_group(v: Value, op: str) -> FlcaGroup:
    if v.kind != "group":
        raise EvalError(f"{op} expects a group argument, got a {v.kind} value")
    return v.data


def _want_graded(v: Value, op: str) -> GradedObject:
    if v.kind == "group":
        return GradedObject.from_group(v.data)
    if v.kind == "graded":
        return v.data
    if v.kind == "derived":
        try:
            return v.data.to_graded()
        except ValueError:
            raise EvalError(f"{op} does not accept E or E* inputs") from None
    raise EvalError(f"{op} expects a group or shifted sum, got a {v.kind} value")


def _want_class(v: Value, op: str) -> K0Class:
    if v.kind == "k0":
        return v.data
    if v.kind == "group":
        return k0_of(v.data)
    if v.kind == "graded":
        return k0_of_derived(v.data.as_derived())
    if v.kind == "derived":
        return k0_of_derived(v.data)
    raise EvalError(f"{op} expects a group, complex or k0 class, got a {v.kind} value")


def _holds(g: FlcaGroup, prop: str) -> bool:
    test = _PROPERTIES[prop]
    return all(test(classify_atom(a)) for a, _ in g.terms)


def _eval(node, allow_shift: bool) -> Value:
    if isinstance(node, GroupLit):
        return Value("group", node.group)
    if isinstance(node, Pow):
        v = _eval(node.base, allow_shift)
        if v.kind in ("group", "graded"):
            return Value(v.kind, v.data * node.count)
        raise EvalError(f"'^' applies to groups, got a {v.kind} value")
    if isinstance(node, Shift):
        if not allow_shift:
            raise EvalError(
                "a shift X[n] may appear only inside rhom, dtensor, ext or k0 arguments"
            )
        v = _eval(node.base, allow_shift)
        if v.kind == "group":
            return Value("graded", GradedObject.from_group(v.data).shift(node.n))
        if v.kind == "graded":
            return Value("graded", v.data.shift(node.n))
        raise EvalError(f"'[n]' applies to groups, got a {v.kind} value")
    if isinstance(node, Sum):
        parts = [_eval(p, allow_shift) for p in node.parts]
        kinds = {v.kind for v in parts}
        if kinds == {"group"}:
            total = FlcaGroup()
            for v in parts:
                total = total + v.data
            return Value("group", total)
        if kinds <= {"group", "graded"}:
            total = GradedObject()
            for v in parts:
                total = total + _want_graded(v, "'+'")
            return Value("graded", total)
        raise EvalError(f"'+' cannot combine {sorted(kinds)} values")
    if isinstance(node, Call):
        return _eval_call(node, allow_shift)
    raise EvalError(f"cannot evaluate {node!r}")


def _eval_call(node: Call, allow_shift: bool) -> Value:
    func = node.func
    if func == "dual":
        v = _eval(node.args[0], False)
        if v.kind == "group":
            return Value("group", v.data.dual())
        if v.kind == "derived":
            return Value("derived", dual_derived(v.data))
        raise EvalError(f"dual expects a group, got a {v.kind} value")
    if func in ("hom", "tensor"):
        x = _want_group(_eval(node.args[0], False), func)
        y = _want_group(_eval(node.args[1], False), func)
        return Value("group", hom(x, y) if func == "hom" else tensor(x, y))
    if func == "rhom":
        x = _want_graded(_eval(node.args[0], True), func)
        y = _want_graded(_eval(node.args[1], True), func)
        return Value("derived", rhom(x, y))
    if func == "dtensor":
        x = _want_graded(_eval(node.args[0], True), func)
        y = _want_graded(_eval(node.args[1], True), func)
        return Value("derived", derived_tensor(x, y))
    if func == "ext":
        n = node.args[0].n
        x = _want_graded(_eval(node.args[1], True), func)
        y = _want_graded(_eval(node.args[2], True), func)
        return Value("ext", ext(n, x, y))
    if func == "k0":
        return Value("k0", _want_class(_eval(node.args[0], True), func))
    if func == "k0mul":
        x = _want_class(_eval(node.args[0], True), func)
        y = _want_class(_eval(node.args[1], True), func)
        return Value("k0", mul(x, y))
    if func == "ranks":
        return Value("ranks", ranks(_want_group(_eval(node.args[0], False), func)))
    if func == "filt":
        return Value(
            "filtration", filtration(_want_group(_eval(node.args[0], False), func))
        )
    if func == "pcomp":
        g = _want_group(_eval(node.args[0], False), func)
        p = node.args[1].n
        if not is_prime(p):
            raise EvalError(f"{p} is not prime")
        return Value("group", p_component(g, p))
    if func in ("resI", "resP"):
        g = _want_group(_eval(node.args[0], False), func)
        res = resolve_injective(g) if func == "resI" else resolve_projective(g)
        return Value("resolution", (res, g))
    if func == "is":
        prop = node.args[0].name
        if prop not in _PROPERTIES:
            known = ", ".join(sorted(_PROPERTIES))
            raise EvalError(f"unknown property {prop!r} (one of: {known})")
        g = _want_group(_eval(node.args[1], False), func)
        return Value("bool", _holds(g, prop))
    raise EvalError(f"unknown function {func!r}")


def evaluate(node, allow_shift: bool = False) -> Value:
    return _eval(node, allow_shift)


def evaluate_text(text: str, allow_shift: bool = False) -> Value:
    """Parse and evaluate in one step.

    >>> str(evaluate_text("hom(Z/12, T)").data)
    'Z/4 + Z/3'
    >>> render_text(evaluate_text("k0mul(k0(T), k0(T))"))
    '(0,-1); default (0,0)'
    """
    return _eval(parse(text), allow_shift)


# --- rendering --------------------------------------------------------------

_E_NOTE = "[Q > Afin] in degrees 0,1"
_EDUAL_NOTE = "[Afin > Sol] in degrees -1,0"


def _derived_text(d: DerivedObject) -> str:
    base = str(d)
    notes = []
    present = {indec for (indec, _), _ in d.terms if isinstance(indec, Special)}
    if Special.E in present:
        notes.append(f"(= {_E_NOTE})" if base == "E" else f"(E = {_E_NOTE})")
    if Special.EDUAL in present:
        notes.append(f"(= {_EDUAL_NOTE})" if base == "E*" else f"(E* = {_EDUAL_NOTE})")
    return base + "".join("  " + note for note in notes)


def _resolution_sequence(res: Resolution, source: FlcaGroup) -> List[str]:
    if res.kind is ResolutionKind.INJECTIVE:
        return [str(source), str(res.left), str(res.right)]
    return [str(res.left), str(res.right), str(source)]


def render_text(v: Value) -> str:
    """Human readable rendering of an evaluation result.

    >>> render_text(evaluate_text("rhom(T, Z)"))
    'Z[-1]'
    >>> render_text(evaluate_text("is(divisible, Q_7)"))
    'true'
    """
    if v.kind in ("group", "graded"):
        return str(v.data)
    if v.kind == "derived":
        return _derived_text(v.data)
    if v.kind in ("k0", "ranks", "ext"):
        return str(v.data)
    if v.kind == "filtration":
        f: Filtration = v.data
        return (
            f"S1: {f.part_S1}; A: {f.part_A} "
            f"(R: {f.part_R}, toptors: {f.part_toptors}); Z: {f.part_Z}"
        )
    if v.kind == "bool":
        return "true" if v.data else "false"
    if v.kind == "resolution":
        res, source = v.data
        return "0 > " + " > ".join(_resolution_sequence(res, source)) + " > 0"
    raise EvalError(f"cannot render a {v.kind} value")


def _entries_json(entries) -> Dict[str, List[int]]:
    return {str(p): [a, b] for p, (a, b) in entries}


def render_json_value(v: Value):
    if v.kind in ("group", "graded", "derived"):
        return str(v.data)
    if v.kind == "k0":
        c: K0Class = v.data
        return {
            "at_infinity": list(c.at_infinity),
            "default": list(c.default),
            "exceptions": _entries_json(c.exceptions),
        }
    if v.kind == "ranks":
        r: RankProfile = v.data
        return {
            "z_rank": r.z_rank,
            "s1_rank": r.s1_rank,
            "default": list(r.default),
            "exceptions": _entries_json(r.exceptions),
        }
    if v.kind == "filtration":
        f: Filtration = v.data
        return {
            "part_s1": str(f.part_S1),
            "part_a": str(f.part_A),
            "part_z": str(f.part_Z),
            "part_r": str(f.part_R),
            "part_toptors": str(f.part_toptors),
        }
    if v.kind == "ext":
        tokens = []
        for token, count in v.data.tokens:
            tokens.extend([str(token)] * count)
        return {"tokens": tokens, "group": str(v.data.group)}
    if v.kind == "bool":
        return bool(v.data)
    if v.kind == "resolution":
        res, source = v.data
        return {"type": res.kind.value, "sequence": _resolution_sequence(res, source)}
    raise EvalError(f"cannot render a {v.kind} value")


def render_json(v: Value) -> str:
    return json.dumps({"kind": v.kind, "value": render_json_value(v)})
