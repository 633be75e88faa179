"""Invariant suites shared by the CLI selftest and the test suite.

Each suite walks a family of identities, raises CheckFailure on the first
violation, and returns how many elementary checks it made.  run() executes
suites by name and prints one line per suite.
"""
from __future__ import annotations

import itertools
import random
from typing import Callable, Dict, Iterable, List, Optional

from .atoms import (
    ADELE,
    CIRCLE,
    FIN_ADELE,
    INT,
    RAT,
    REAL,
    SOLENOID,
    Atom,
    FlcaGroup,
    decompose_cyclic,
    fin_cyc,
    p_adic,
    pro_int,
    pruefer,
)
from .derived import (
    GradedObject,
    _split_adeles,
    derived_tensor,
    dual_derived,
    ext,
    rhom,
)
from .expr import evaluate_text
from .homtensor import hom, tensor
from .k0 import (
    _candidate,
    _generator_families,
    involution,
    k0_from_invariants,
    k0_of,
    k0_of_derived,
    left_inverse_winner,
    make_k0,
    mul,
    to_adelic,
)
from .structure import (
    classify_atom,
    filtration,
    resolve_injective,
    resolve_projective,
)


class CheckFailure(AssertionError):
    pass


def _ensure(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckFailure(msg)


def atom_sample(primes=(2, 3), exps=(1, 2), fin_adele: bool = True) -> List[Atom]:
    """The default probe set: every global atom plus each p-local family at
    the given primes (finite cyclics at the given exponents)."""
    out = [INT, RAT, REAL, CIRCLE, SOLENOID, ADELE]
    if fin_adele:
        out.append(FIN_ADELE)
    locals_ = [fin_cyc(p, n) for p in primes for n in exps]
    locals_ += [pro_int(p) for p in primes]
    locals_ += [p_adic(p) for p in primes]
    locals_ += [pruefer(p) for p in primes]
    return out + sorted(locals_)


def _groups(atoms: Iterable[Atom]) -> List[FlcaGroup]:
    return [FlcaGroup.of(a) for a in atoms]


# --- suites -----------------------------------------------------------------


def check_serialization() -> int:
    checks = 0
    for g in _groups(atom_sample()):
        v = evaluate_text(str(g))
        _ensure(v.kind == "group" and v.data == g, f"round trip failed for {g}")
        checks += 1
    for text in ("Z/12", "Z/8 + Z/3 + R^2", "Q_2/Z_2^3 + Sol", "Z_5 + Z_5 + A"):
        g = evaluate_text(text).data
        _ensure(evaluate_text(str(g)).data == g, f"round trip failed for {text}")
        checks += 1
    for ga, gb in itertools.product(_groups(atom_sample()), repeat=2):
        d = rhom(ga, gb)
        if d.is_zero() or d.has_special():
            continue
        v = evaluate_text(str(d), allow_shift=True)
        back = v.data if v.kind == "graded" else GradedObject.from_group(v.data)
        _ensure(
            back.as_derived() == d, f"derived round trip failed for rhom({ga}, {gb})"
        )
        checks += 1
    return checks


def check_duality() -> int:
    checks = 0
    groups = _groups(atom_sample())
    for g in groups:
        _ensure(g.dual().dual() == g, f"double dual failed for {g}")
        checks += 1
    for ga, gb in itertools.product(groups, repeat=2):
        d = rhom(ga, gb)
        _ensure(
            d == rhom(gb.dual(), ga.dual()),
            f"duality symmetry failed at rhom({ga}, {gb})",
        )
        _ensure(
            dual_derived(dual_derived(d)) == d,
            f"derived double dual failed at rhom({ga}, {gb})",
        )
        checks += 2
    return checks


def check_table() -> int:
    checks = 0
    groups = _groups(atom_sample())
    for ga, gb in itertools.product(groups, repeat=2):
        _ensure(
            rhom(ga, gb).support() <= {0, 1},
            f"rhom({ga}, {gb}) strays outside degrees 0, 1",
        )
        checks += 1
    e = rhom(FlcaGroup.of(RAT), FlcaGroup.of(INT))
    _ensure(str(e) == "E", "rhom(Q, Z) is not E")
    _ensure(
        rhom(FlcaGroup.of(CIRCLE), FlcaGroup.of(SOLENOID)) == e,
        "rhom(T, Sol) is not E",
    )
    checks += 2
    adele, real, fin = FlcaGroup.of(ADELE), FlcaGroup.of(REAL), FlcaGroup.of(FIN_ADELE)
    for g in groups:
        # the adele row and column must both respect the splitting A = R + Afin
        _ensure(
            _split_adeles(rhom(adele, g))
            == _split_adeles(rhom(real, g) + rhom(fin, g)),
            f"adele row splitting failed at {g}",
        )
        _ensure(
            _split_adeles(rhom(g, adele))
            == _split_adeles(rhom(g, real) + rhom(g, fin)),
            f"adele column splitting failed at {g}",
        )
        checks += 2
    return checks


def check_ext() -> int:
    checks = 0
    groups = _groups(atom_sample())
    for ga, gb in itertools.product(groups, repeat=2):
        e0 = ext(0, ga, gb)
        _ensure(e0.is_plain_group(), f"ext(0, {ga}, {gb}) is not a plain group")
        _ensure(e0.group == hom(ga, gb), f"ext(0, {ga}, {gb}) differs from hom")
        checks += 2
        for n in (-2, -1, 2, 3):
            _ensure(ext(n, ga, gb).is_zero(), f"ext({n}, {ga}, {gb}) is nonzero")
            checks += 1
    # compact p-groups see nothing in degree 1 unless the target has a Z part
    for p in (2, 3):
        a = FlcaGroup.of(pro_int(p))
        for gb in groups:
            if not filtration(gb).part_Z.is_zero():
                continue
            _ensure(ext(1, a, gb).is_zero(), f"ext(1, {a}, {gb}) should vanish")
            checks += 1
    # discrete divisible targets kill degree 1 for sources without a circle part
    targets = [FlcaGroup.of(RAT), FlcaGroup.of(pruefer(2)), FlcaGroup.of(pruefer(3))]
    for ga in groups:
        if not filtration(ga).part_S1.is_zero():
            continue
        for gb in targets:
            _ensure(ext(1, ga, gb).is_zero(), f"ext(1, {ga}, {gb}) should vanish")
            checks += 1
    return checks


def check_monoidal() -> int:
    checks = 0
    groups = _groups(atom_sample())
    unit = FlcaGroup.of(INT)
    for g in groups:
        _ensure(
            tensor(unit, g) == g and tensor(g, unit) == g,
            f"tensor unit law failed at {g}",
        )
        _ensure(hom(unit, g) == g, f"hom unit law failed at {g}")
        checks += 2
    for ga, gb in itertools.combinations_with_replacement(groups, 2):
        _ensure(tensor(ga, gb) == tensor(gb, ga), f"commutativity failed at ({ga}, {gb})")
        checks += 1
    triple_set = _groups(atom_sample(exps=(1,)))
    for ga, gb, gc in itertools.product(triple_set, repeat=3):
        _ensure(
            tensor(tensor(ga, gb), gc) == tensor(ga, tensor(gb, gc)),
            f"associativity failed at ({ga}, {gb}, {gc})",
        )
        _ensure(
            hom(tensor(ga, gb), gc) == hom(ga, hom(gb, gc)),
            f"adjunction failed at ({ga}, {gb}, {gc})",
        )
        checks += 2
    return checks


def _orders_mod(m: int) -> List[int]:
    """order of every element of Z/m, by direct search"""
    out = []
    for k in range(m):
        d = 1
        while (d * k) % m:
            d += 1
        out.append(d)
    return out


def _finite_order(g: FlcaGroup) -> int:
    n = 1
    for atom, count in g.terms:
        n *= (atom.p.value**atom.n) ** count
    return n


def check_finite_cyclic(limit: int = 64) -> int:
    checks = 0
    order_tables = {m: _orders_mod(m) for m in range(1, limit + 1)}
    sorted_tables = {m: sorted(t) for m, t in order_tables.items()}
    for a in range(1, limit + 1):
        ga = decompose_cyclic(a)
        for b in range(1, limit + 1):
            gb = decompose_cyclic(b)
            valid = [k for k in range(b) if (a * k) % b == 0]
            h = hom(ga, gb)
            _ensure(
                sorted(order_tables[b][k] for k in valid)
                == sorted_tables[_finite_order(h)],
                f"hom(Z/{a}, Z/{b}) has the wrong isomorphism type",
            )
            image_size = len({(a * k) % b for k in range(b)})
            e1 = ext(1, ga, gb)
            _ensure(
                e1.is_plain_group() and e1.group == decompose_cyclic(b // image_size),
                f"ext(1, Z/{a}, Z/{b}) disagrees with the cokernel of {a} on Z/{b}",
            )
            g = max(d for d in range(1, min(a, b) + 1) if a % d == 0 and b % d == 0)
            _ensure(
                tensor(ga, gb) == decompose_cyclic(g),
                f"tensor(Z/{a}, Z/{b}) is not Z/{g}",
            )
            checks += 3
    return checks


def _random_class(rng: random.Random):
    pair = lambda: (rng.randint(-3, 3), rng.randint(-3, 3))
    entries = {p: pair() for p in (2, 3, 5, 7) if rng.random() < 0.5}
    return make_k0(pair(), pair(), entries)


def check_k0_ring(count: int = 1000) -> int:
    checks = 0
    one = k0_of(FlcaGroup.of(INT))
    adelic_one = to_adelic(one)
    _ensure(
        adelic_one.at_infinity == (1, 1)
        and adelic_one.default == (1, 1)
        and not adelic_one.exceptions,
        "the unit is not all ones in the adelic basis",
    )
    checks += 1
    rng = random.Random(8151958)
    elements = [_random_class(rng) for _ in range(count)]
    for x in elements:
        _ensure(
            mul(one, x) == x and mul(x, one) == x, f"unit law failed at {x}"
        )
        _ensure(involution(involution(x)) == x, f"double involution failed at {x}")
        checks += 2
    for i in range(0, count - 2, 3):
        x, y, z = elements[i], elements[i + 1], elements[i + 2]
        _ensure(mul(x, y) == mul(y, x), "commutativity failed")
        _ensure(mul(mul(x, y), z) == mul(x, mul(y, z)), "associativity failed")
        _ensure(
            mul(x, y + z) == mul(x, y) + mul(x, z), "distributivity failed"
        )
        checks += 3
    return checks


def check_k0_mult() -> int:
    checks = 0
    groups = _groups(atom_sample())
    for ga, gb in itertools.product(groups, repeat=2):
        _ensure(
            mul(k0_of(ga), k0_of(gb)) == k0_of_derived(derived_tensor(ga, gb)),
            f"k0 multiplicativity failed at ({ga}, {gb})",
        )
        checks += 1
    t = k0_of(FlcaGroup.of(CIRCLE))
    one = k0_of(FlcaGroup.of(INT))
    _ensure(mul(t, t) == -t, "[T] squared is not -[T]")
    # the involution is additive but breaks multiplicativity
    _ensure(
        involution(mul(t, t)) == -one and mul(involution(t), involution(t)) == one,
        "involution witness failed",
    )
    checks += 2
    return checks


def check_resolutions() -> int:
    checks = 0
    extra = [
        FlcaGroup.of(INT) + FlcaGroup.of(CIRCLE),
        decompose_cyclic(12) + FlcaGroup.of(pro_int(2)),
        FlcaGroup.of(RAT) * 2 + FlcaGroup.of(pruefer(5)),
    ]
    for g in _groups(atom_sample()) + extra:
        ri = resolve_injective(g)
        rp = resolve_projective(g)
        for part in (ri.left, ri.right):
            _ensure(
                all(classify_atom(a).in_I for a, _ in part.terms),
                f"injective resolution of {g} leaves the injective class",
            )
        for part in (rp.left, rp.right):
            _ensure(
                all(classify_atom(a).in_P for a, _ in part.terms),
                f"projective resolution of {g} leaves the projective class",
            )
        _ensure(
            k0_of(g) == k0_of(ri.left) - k0_of(ri.right),
            f"injective Euler relation failed at {g}",
        )
        _ensure(
            k0_of(g) == k0_of(rp.right) - k0_of(rp.left),
            f"projective Euler relation failed at {g}",
        )
        dual_rp = resolve_projective(g.dual())
        _ensure(
            dual_rp.left == ri.right.dual() and dual_rp.right == ri.left.dual(),
            f"resolutions of {g} are not exchanged by duality",
        )
        checks += 7
    return checks


def check_left_inverse() -> int:
    winner = left_inverse_winner()
    checks = 1
    sums = [
        FlcaGroup.of(INT) + FlcaGroup.of(CIRCLE),
        FlcaGroup.of(RAT) + FlcaGroup.of(SOLENOID) + FlcaGroup.of(pro_int(2)),
        FlcaGroup.of(ADELE) + FlcaGroup.of(pruefer(3)) * 2,
        FlcaGroup.of(FIN_ADELE) + decompose_cyclic(8),
        FlcaGroup.of(REAL) * 2 + FlcaGroup.of(p_adic(5)),
    ]
    for g in _groups(atom_sample()) + sums:
        _ensure(
            k0_from_invariants(g) == k0_of(g),
            f"invariant reconstruction failed at {g}",
        )
        checks += 1
    losers = [f for f in ("literal", "corrected") if f != winner]
    for formula in losers:
        _ensure(
            any(_candidate(formula, g) != k0_of(g) for g in _generator_families()),
            f"rejected formula {formula!r} unexpectedly reconstructs every generator",
        )
        checks += 1
    return checks


SUITES: Dict[str, Callable[[], int]] = {
    "serialization": check_serialization,
    "duality": check_duality,
    "table": check_table,
    "ext": check_ext,
    "monoidal": check_monoidal,
    "finite_cyclic": check_finite_cyclic,
    "k0_ring": check_k0_ring,
    "k0_mult": check_k0_mult,
    "resolutions": check_resolutions,
    "left_inverse": check_left_inverse,
}


def run(names: Optional[List[str]] = None, write: Callable[[str], None] = print) -> bool:
    ok = True
    for name in names or list(SUITES):
        try:
            count = SUITES[name]()
        except CheckFailure as exc:
            write(f"FAIL {name}: {exc}")
            ok = False
            continue
        write(f"ok {name} ({count} checks)")
        if name == "left_inverse":
            write(
                f"note: the {left_inverse_winner()} invariant pair is the"
                " reconstruction left inverse"
            )
    return ok
