"""Eventually-constant maps from primes to integer pairs.

Rank profiles and K0 classes both store one pair per prime with a shared
default holding at almost all primes.  A map is kept as (default, exceptions)
where exceptions is a sorted tuple of (prime, pair) entries that never store
the default value, so structural equality is semantic equality.
"""
from __future__ import annotations

from typing import Callable, Dict, Tuple

Pair = Tuple[int, int]
Entries = Tuple[Tuple[int, Pair], ...]


def normalize(default: Pair, entries: Dict[int, Pair]) -> Entries:
    return tuple(
        (p, pair) for p, pair in sorted(entries.items()) if pair != default
    )


def at(default: Pair, entries: Entries, p: int) -> Pair:
    for q, pair in entries:
        if q == p:
            return pair
    return default


def combine(
    a: Tuple[Pair, Entries],
    b: Tuple[Pair, Entries],
    op: Callable[[int, int], int],
) -> Tuple[Pair, Entries]:
    (da, ea), (db, eb) = a, b
    default = (op(da[0], db[0]), op(da[1], db[1]))
    primes = {p for p, _ in ea} | {p for p, _ in eb}
    merged = {}
    for p in primes:
        xa, xb = at(da, ea, p), at(db, eb, p)
        merged[p] = (op(xa[0], xb[0]), op(xa[1], xb[1]))
    return default, normalize(default, merged)


def transform(
    a: Tuple[Pair, Entries], f: Callable[[Pair], Pair]
) -> Tuple[Pair, Entries]:
    default, entries = a
    new_default = f(default)
    return new_default, normalize(new_default, {p: f(pair) for p, pair in entries})
