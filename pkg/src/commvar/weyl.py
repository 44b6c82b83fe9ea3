"""Weyl-group conjugacy-class data for the classical Cartan families.

For each family the module knows the group order, the degrees of the free
generators of the invariant polynomial algebra, and one record per conjugacy
class carrying the class size and the characteristic polynomial
det(1 - s*w) of a class representative w on the reflection representation.

Conventions:

* family A, rank r: W = S_{r+1} with the (r)-dimensional reflection
  representation.  Classes are cycle types, i.e. partitions of r+1, and
  det(1 - s*w) = prod_i (1 - s^{lambda_i}) / (1 - s), the division being exact.
* families B and C, rank r: the Weyl groups coincide (signed permutations of
  r coordinates); both labels are accepted.  Classes are pairs (lambda, mu)
  of positive/negative cycle lengths with |lambda| + |mu| = r, and
  det(1 - s*w) = prod_i (1 - s^{lambda_i}) * prod_j (1 + s^{mu_j}).
* family D, rank r: the subgroup with an even number of negative cycles, so
  descriptors are the B-type pairs with an even number of parts in mu.  The
  pairs whose cycles are all positive and even index two classes of equal
  size; they carry identical characteristic polynomials, so this module keeps
  one merged record whose size counts all elements of the signed cycle type.

Class records are listed identity-first in the canonical order of
:mod:`commvar.partitions`; for family A this order matches the character
table columns of :mod:`commvar.chartab`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from . import config
from .exact_poly import ExactPoly
from .partitions import (
    centralizer_order_signed,
    centralizer_order_sym,
    conjugacy_partitions,
    is_partition,
    partitions_of,
    signed_class_sort_key,
)

_FAMILY_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True)
class CartanType:
    """A classical family letter together with its rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILY_MIN_RANK:
            raise ValueError(f"unknown family {self.family!r}; expected one of A, B, C, D")
        low = _FAMILY_MIN_RANK[self.family]
        if not isinstance(self.rank, int) or self.rank < low:
            raise ValueError(f"family {self.family} requires integer rank >= {low}")

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.label


CARTAN_GRAMMAR = "<family letter A|B|C|D><rank digits> (case-insensitive), SU(m), or Sp(m)"

_TYPE_RE = re.compile(r"^([ABCDabcd])(\d+)$")
_SU_RE = re.compile(r"^su\((\d+)\)$", re.IGNORECASE)
_SP_RE = re.compile(r"^sp\((\d+)\)$", re.IGNORECASE)


def parse_cartan_type(text: str) -> CartanType:
    """Parse 'A2', 'b3', 'SU(4)' (-> A3) or 'Sp(3)' (-> C3)."""
    text = text.strip()
    m = _TYPE_RE.match(text)
    if m:
        return CartanType(m.group(1).upper(), int(m.group(2)))
    m = _SU_RE.match(text)
    if m:
        return CartanType("A", int(m.group(1)) - 1)
    m = _SP_RE.match(text)
    if m:
        return CartanType("C", int(m.group(1)))
    raise ValueError(f"cannot parse Cartan type {text!r}; accepted grammar: {CARTAN_GRAMMAR}")


@dataclass(frozen=True)
class ClassDescriptor:
    """Combinatorial label of one conjugacy class.

    Family A uses ``positive`` alone (a partition of rank+1); families B/C/D
    use the pair (positive cycle lengths, negative cycle lengths).
    """

    positive: tuple[int, ...]
    negative: tuple[int, ...] = ()

    def label(self) -> str:
        if not self.negative:
            if not self.positive:
                return "()"
            return "(" + ",".join(str(p) for p in self.positive) + ")"
        pos = ",".join(str(p) for p in self.positive) or "-"
        neg = ",".join(str(p) for p in self.negative)
        return f"(({pos}),({neg}))"


@dataclass(frozen=True)
class ConjClassData:
    descriptor: ClassDescriptor
    size: int
    det_poly: ExactPoly  # det(1 - s*w) on the reflection representation


@dataclass(frozen=True)
class WeylData:
    cartan: CartanType
    order: int
    degrees: tuple[int, ...]
    classes: tuple[ConjClassData, ...]

    @property
    def rank(self) -> int:
        return self.cartan.rank


def weyl_order(cartan: CartanType) -> int:
    if cartan.family == "A":
        return factorial(cartan.rank + 1)
    if cartan.family in ("B", "C"):
        return 2**cartan.rank * factorial(cartan.rank)
    return 2 ** (cartan.rank - 1) * factorial(cartan.rank)


def invariant_degrees(cartan: CartanType) -> tuple[int, ...]:
    """Degrees of the free generators of the W-invariant polynomials, ascending."""
    r = cartan.rank
    if cartan.family == "A":
        return tuple(range(2, r + 2))
    if cartan.family in ("B", "C"):
        return tuple(range(2, 2 * r + 1, 2))
    return tuple(sorted(list(range(2, 2 * r - 1, 2)) + [r]))


def _check_rank_cap(cartan: CartanType) -> None:
    cap = config.max_rank()
    if cartan.rank > cap:
        raise ValueError(
            f"rank {cartan.rank} exceeds the cap {cap}; set COMMVAR_MAX_RANK to override"
        )


def reflection_det_poly(cartan: CartanType, descriptor: ClassDescriptor) -> ExactPoly:
    """det(1 - s*w) as a polynomial in s, for w of the given signed cycle type."""
    _validate_descriptor(cartan, descriptor)
    one = ExactPoly.one()
    if cartan.family == "A":
        num = one
        for part in descriptor.positive:
            num = num * (one - ExactPoly.monomial(part))
        return num.div_exact(one - ExactPoly.monomial(1))
    out = one
    for part in descriptor.positive:
        out = out * (one - ExactPoly.monomial(part))
    for part in descriptor.negative:
        out = out * (one + ExactPoly.monomial(part))
    return out


def _validate_descriptor(cartan: CartanType, descriptor: ClassDescriptor) -> None:
    if not (is_partition(descriptor.positive) and is_partition(descriptor.negative)):
        raise ValueError(f"descriptor parts are not partitions: {descriptor}")
    if cartan.family == "A":
        if descriptor.negative:
            raise ValueError("family A descriptors carry no negative cycles")
        if sum(descriptor.positive) != cartan.rank + 1:
            raise ValueError(
                f"family A descriptor must partition {cartan.rank + 1}, got {descriptor}"
            )
        return
    total = sum(descriptor.positive) + sum(descriptor.negative)
    if total != cartan.rank:
        raise ValueError(f"descriptor must have total size {cartan.rank}, got {descriptor}")
    if cartan.family == "D" and len(descriptor.negative) % 2 != 0:
        raise ValueError("family D requires an even number of negative cycles")


def conjugacy_classes(cartan: CartanType) -> list[ConjClassData]:
    """One record per conjugacy class, identity first (see module docstring)."""
    _check_rank_cap(cartan)
    out: list[ConjClassData] = []
    if cartan.family == "A":
        m = cartan.rank + 1
        for lam in conjugacy_partitions(m):
            desc = ClassDescriptor(lam)
            size = factorial(m) // centralizer_order_sym(lam)
            out.append(ConjClassData(desc, size, reflection_det_poly(cartan, desc)))
        return out

    n = cartan.rank
    group_order = 2**n * factorial(n)  # hyperoctahedral count, also used for D sizes
    pairs = []
    for k in range(n + 1):
        for lam in partitions_of(n - k):
            for mu in partitions_of(k):
                if cartan.family == "D" and len(mu) % 2 != 0:
                    continue
                pairs.append((lam, mu))
    pairs.sort(key=signed_class_sort_key)
    for lam, mu in pairs:
        desc = ClassDescriptor(lam, mu)
        size = group_order // centralizer_order_signed(lam, mu)
        out.append(ConjClassData(desc, size, reflection_det_poly(cartan, desc)))
    return out


@lru_cache(maxsize=None)
def weyl_data(cartan: CartanType) -> WeylData:
    """Assembled and sanity-checked class data for one Cartan type (cached)."""
    order = weyl_order(cartan)
    degrees = invariant_degrees(cartan)
    classes = tuple(conjugacy_classes(cartan))
    assert sum(c.size for c in classes) == order, "class sizes do not sum to the group order"
    assert prod(degrees) == order, "invariant degrees do not multiply to the group order"
    assert len(degrees) == cartan.rank
    return WeylData(cartan, order, degrees, classes)
