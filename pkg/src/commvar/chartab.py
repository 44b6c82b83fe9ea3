"""Symmetric-group character tables and graded class-function decomposition.

Irreducible characters of S_m are computed by the Murnaghan-Nakayama rule
(recursive border-strip removal with sign (-1)^(height-1)), implemented on
beta-sets (first-column hook lengths), and labelled by partitions of m.

Table layout is canonical and documented here once:

* columns are the conjugacy classes in the canonical class order of
  :mod:`commvar.partitions` (identity first, then by moved points, longest
  cycle first among ties);
* rows are the irreducibles, numbered chi_1, chi_2, ... with
  chi_1 = trivial = (m), chi_2 = sign = (1^m), and the remaining partitions
  sorted by ascending dimension, descending lexicographic order on ties.
  In particular for m = 4: chi_3 = (2,2), chi_4 = (3,1), chi_5 = (2,1,1).

A ``GradedClassFunction`` packages, degree by degree, a class function on a
fixed Weyl group; ``decompose_graded`` rewrites each degree as a non-negative
integer combination of irreducible characters, which is where polynomials
with character coefficients such as

    chi_1 + chi_4*t + chi_5*t^2 + chi_2*t^3

come from.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, lru_cache
from math import factorial

from . import config
from .exact_poly import ExactPoly
from .partitions import (
    centralizer_order_sym,
    conjugacy_partitions,
    cycle_label,
    is_partition,
    partitions_of,
)
from .weyl import WeylData

Partition = tuple[int, ...]


class NotACharacterError(ValueError):
    """A class function failed to decompose integrally and non-negatively."""


def mn_character(lam, mu) -> int:
    """Irreducible character value chi_lambda(mu) for S_m, |lam| = |mu| = m."""
    lam = tuple(lam)
    mu = tuple(sorted(mu, reverse=True))
    if not (is_partition(lam) and is_partition(mu)):
        raise ValueError(f"not partitions: {lam}, {mu}")
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| = {sum(lam)} but |{mu}| = {sum(mu)}")
    return _mn(lam, mu)


@cache
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    strip, rest = mu[0], mu[1:]
    k = len(lam)
    beta = tuple(lam[i] + k - 1 - i for i in range(k))
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - strip
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        nbeta = sorted((bset - {b}) | {nb}, reverse=True)
        nlam = tuple(v - (len(nbeta) - 1 - i) for i, v in enumerate(nbeta))
        nlam = tuple(p for p in nlam if p > 0)
        total += (-1) ** height * _mn(nlam, rest)
    return total


def irreducible_order(m: int) -> tuple[Partition, ...]:
    """Row order chi_1, chi_2, ... as documented in the module docstring."""
    if m == 1:
        return ((1,),)
    trivial: Partition = (m,)
    sign: Partition = (1,) * m
    identity = sign  # class of the identity, as a cycle type
    rest = [p for p in partitions_of(m) if p not in (trivial, sign)]
    rest.sort(key=lambda p: (_mn(p, identity), tuple(-x for x in p)))
    return (trivial, sign, *rest)


@dataclass(frozen=True)
class CharacterTable:
    """Full integer character table of S_m in the canonical layout."""

    m: int
    rows: tuple[Partition, ...]  # irreducible labels, chi_i = rows[i-1]
    columns: tuple[Partition, ...]  # class labels (cycle types)
    class_sizes: tuple[int, ...]
    values: tuple[tuple[int, ...], ...]  # values[i][j] = chi_{rows[i]}(columns[j])

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.values[self.rows.index(tuple(lam))]

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.values[self.rows.index(tuple(lam))][self.columns.index(tuple(mu))]

    def dimension(self, lam: Partition) -> int:
        return self.values[self.rows.index(tuple(lam))][0]

    def chi_index(self, lam: Partition) -> int:
        """1-based chi numbering of an irreducible label."""
        return self.rows.index(tuple(lam)) + 1

    def column_labels(self) -> tuple[str, ...]:
        return tuple(cycle_label(mu) for mu in self.columns)


@lru_cache(maxsize=None)
def character_table(m: int) -> CharacterTable:
    cap = config.max_table_m()
    if not 1 <= m <= cap:
        raise ValueError(f"m must satisfy 1 <= m <= {cap} (COMMVAR_MAX_TABLE_M to override)")
    rows = irreducible_order(m)
    columns = conjugacy_partitions(m)
    sizes = tuple(factorial(m) // centralizer_order_sym(mu) for mu in columns)
    values = tuple(tuple(_mn(lam, mu) for mu in columns) for lam in rows)
    return CharacterTable(m, rows, columns, sizes, values)


def inner_product(f, g, weyl: WeylData) -> Fraction:
    """(1/|W|) sum_c size(c) f(c) g(c) for real-valued class functions on weyl."""
    f = list(f)
    g = list(g)
    if len(f) != len(weyl.classes) or len(g) != len(weyl.classes):
        raise ValueError(
            f"class-function length mismatch: {len(f)}, {len(g)} vs {len(weyl.classes)} classes"
        )
    total = Fraction(0)
    for cls, fv, gv in zip(weyl.classes, f, g):
        total += cls.size * Fraction(fv) * Fraction(gv)
    return total / weyl.order


@dataclass(frozen=True)
class GradedClassFunction:
    """A class function on ``weyl`` in each degree; zero vectors are not stored."""

    weyl: WeylData
    entries: tuple[tuple[int, tuple[Fraction, ...]], ...]  # (degree, vector), ascending

    @classmethod
    def from_class_polys(cls, weyl: WeylData, polys) -> GradedClassFunction:
        """Transpose one polynomial per class into per-degree class functions."""
        polys = list(polys)
        if len(polys) != len(weyl.classes):
            raise ValueError("need exactly one polynomial per conjugacy class")
        degrees = sorted({d for p in polys for d, _ in p.items()})
        entries = tuple(
            (d, tuple(p.coeff(d) for p in polys))
            for d in degrees
            if any(p.coeff(d) for p in polys)
        )
        return cls(weyl, entries)

    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.entries)

    def vector(self, degree: int) -> tuple[Fraction, ...]:
        for d, v in self.entries:
            if d == degree:
                return v
        return tuple(Fraction(0) for _ in self.weyl.classes)

    def class_polys(self) -> list[ExactPoly]:
        """Inverse of from_class_polys: one polynomial per class."""
        out = []
        for j in range(len(self.weyl.classes)):
            out.append(ExactPoly({d: v[j] for d, v in self.entries}))
        return out


def decompose_graded(
    gcf: GradedClassFunction, table: CharacterTable
) -> list[tuple[Partition, ExactPoly]]:
    """Express each degree of ``gcf`` as a sum of S_m irreducibles.

    Returns (partition label, multiplicity polynomial) pairs in chi order,
    omitting irreducibles that never occur.  Raises NotACharacterError if any
    multiplicity comes out negative or non-integral.
    """
    weyl = gcf.weyl
    if weyl.cartan.family != "A" or weyl.cartan.rank + 1 != table.m:
        raise ValueError("graded class function and table belong to different groups")
    columns = tuple(c.descriptor.positive for c in weyl.classes)
    if columns != table.columns:
        raise ValueError("class order of the Weyl data disagrees with the table")
    order = factorial(table.m)
    mults: dict[Partition, dict[int, int]] = {lam: {} for lam in table.rows}
    for degree, vec in gcf.entries:
        for lam, row in zip(table.rows, table.values):
            acc = Fraction(0)
            for size, chi, value in zip(table.class_sizes, row, vec):
                acc += size * chi * value
            m = acc / order
            if m.denominator != 1 or m < 0:
                raise NotACharacterError(
                    f"not a character: multiplicity of {lam} in degree {degree} is {m}"
                )
            if m:
                mults[lam][degree] = int(m)
    return [(lam, ExactPoly(mults[lam])) for lam in table.rows if mults[lam]]


def recombine_graded(
    decomposition, table: CharacterTable, weyl: WeylData
) -> GradedClassFunction:
    """Rebuild the graded class function from a decomposition (for round-trip checks)."""
    polys = [ExactPoly.zero() for _ in weyl.classes]
    for lam, mult_poly in decomposition:
        row = table.row(lam)
        for j, chi in enumerate(row):
            polys[j] = polys[j] + mult_poly * chi
    return GradedClassFunction.from_class_polys(weyl, polys)
