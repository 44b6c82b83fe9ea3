"""Integer-partition combinatorics shared by the Weyl and character-table modules.

Partitions are plain tuples of weakly decreasing positive integers; the empty
partition is ``()``.  Conjugacy classes of the symmetric group S_m are indexed
by partitions of m (cycle types); classes of the hyperoctahedral group by
pairs of partitions (positive and negative cycle lengths).

The canonical class order used everywhere in this package puts the identity
first and then sorts by the number of non-fixed points, breaking ties by the
longest cycle first (and descending lexicographic order after that).  For
S_4 this yields (1), (12), (123), (1234), (12)(34).
"""

from __future__ import annotations

from functools import cache
from math import factorial


@cache
def partitions_of(m: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of m as weakly decreasing tuples."""
    if m < 0:
        raise ValueError("m must be non-negative")

    def gen(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(m, m))


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def multiplicities(parts: tuple[int, ...]) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in parts:
        out[p] = out.get(p, 0) + 1
    return out


def centralizer_order_sym(lam: tuple[int, ...]) -> int:
    """z_lambda = prod_i i^{a_i} a_i! for cycle type lambda in S_m."""
    z = 1
    for part, mult in multiplicities(lam).items():
        z *= part**mult * factorial(mult)
    return z


def centralizer_order_signed(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Centralizer order of signed cycle type (lam, mu) in the hyperoctahedral group."""
    z = 1
    for part, mult in multiplicities(lam).items():
        z *= (2 * part) ** mult * factorial(mult)
    for part, mult in multiplicities(mu).items():
        z *= (2 * part) ** mult * factorial(mult)
    return z


def moved_points(lam: tuple[int, ...]) -> int:
    return sum(p for p in lam if p > 1)


def class_sort_key(lam: tuple[int, ...]):
    largest = lam[0] if lam else 0
    return (moved_points(lam), -largest, tuple(-p for p in lam))


def conjugacy_partitions(m: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of m in the canonical class order (identity first)."""
    return tuple(sorted(partitions_of(m), key=class_sort_key))


def signed_class_sort_key(pair: tuple[tuple[int, ...], tuple[int, ...]]):
    lam, mu = pair
    return (sum(mu), len(mu), class_sort_key(lam), class_sort_key(mu))


def cycle_label(lam: tuple[int, ...]) -> str:
    """Representative cycle notation for a cycle type, e.g. (2,2) -> '(12)(34)'."""
    m = sum(lam)
    nontrivial = [p for p in lam if p > 1]
    if not nontrivial:
        return "(1)"
    sep = "" if m <= 9 else " "
    out = []
    nxt = 1
    for p in nontrivial:
        out.append("(" + sep.join(str(i) for i in range(nxt, nxt + p)) + ")")
        nxt += p
    return "".join(out)
