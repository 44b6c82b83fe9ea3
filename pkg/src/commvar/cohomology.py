"""Cohomology engine for the generic component of commuting n-tuples.

Let G be a compact simple group of classical type with maximal torus T, Weyl
group W of rank r, and invariant degrees d_1..d_r.  Write X for the connected
component of the identity in the space of commuting n-tuples in G (every
tuple in it lies in a common maximal torus).  The cohomology of X over a
field whose characteristic does not divide |W| is the W-invariant part of
H(G/T x T^n), and its G-equivariant cohomology is the W-invariant part of
H_T(T^n).  Both are computed here by exact character averaging over the
conjugacy classes of W, from two graded traces per class:

* the exterior trace E_c(t) = det(1 + t*w) on the torus factor, generators
  in degree 1, raised to the n-th power for T^n;
* the coinvariant trace C_c(t) = prod_i (1 - t^{2 d_i}) / det(1 - t^2 w),
  the graded character of H(G/T) with its doubled grading (an exact
  polynomial division; at t = 1 it degenerates to the regular character).

The Poincare polynomial is the trivial-isotypic average

    P(t) = (1/|W|) sum_c |c| * E_c(t)^n * C_c(t),

a polynomial with non-negative integer coefficients satisfying
P(1) = 2^(n*r).  The equivariant Hilbert series is P(t) / prod_i (1 - t^{2 d_i});
the same series arises as the per-class rational sum
(1/|W|) sum_c |c| * E_c(t)^n / det(1 - t^2 w), and the verification suite
compares the two routes.

Integral torsion in H^*(X, Z) can only involve primes dividing |W|;
``torsion_primes`` reports that prime set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import config
from .chartab import (
    GradedClassFunction,
    Partition,
    character_table,
    decompose_graded,
)
from .exact_poly import ExactPoly, RationalFunction
from .weyl import CartanType, ConjClassData, WeylData, weyl_data, weyl_order


class EngineConsistencyError(ArithmeticError):
    """An averaged series violated integrality or positivity (class-data bug)."""


@dataclass(frozen=True)
class PoincareResult:
    cartan: CartanType
    n: int
    poly: ExactPoly
    total_dim: int  # = poly evaluated at 1 = 2^(n*rank)


@dataclass(frozen=True)
class EquivariantResult:
    cartan: CartanType
    n: int
    series: RationalFunction
    truncation: tuple[int, ...]  # coefficients through the requested degree


@dataclass(frozen=True)
class WDecomposition:
    """Character-coefficient factors of H(G/T x T^n) for family A.

    ``exterior`` decomposes the degree-1-graded exterior algebra of the n-fold
    torus (for n = 1, the single factor chi_1 + chi_4 t + ... ); ``coinvariant``
    decomposes H(G/T) with its doubled grading.  Labels are partitions; the
    chi numbering comes from the character-table row order.
    """

    cartan: CartanType
    n: int
    exterior: tuple[tuple[Partition, ExactPoly], ...]
    coinvariant: tuple[tuple[Partition, ExactPoly], ...]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a non-negative integer")
    cap = config.max_n()
    if n > cap:
        raise ValueError(f"n = {n} exceeds the cap {cap}; set COMMVAR_MAX_N to override")


def exterior_char(cls: ConjClassData, n: int) -> ExactPoly:
    """Graded trace of a class representative on the exterior algebra of n tori.

    E_c(t) = det(1 + t*w) = det_poly(-t), with degree-1 generators; the n-fold
    torus contributes the n-th power.  n = 0 gives 1.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a non-negative integer")
    return cls.det_poly.substitute(scale=-1) ** n


def coinvariant_numerator(weyl: WeylData) -> ExactPoly:
    """prod_i (1 - t^{2 d_i}), the Hilbert-series numerator shared by all classes."""
    out = ExactPoly.one()
    for d in weyl.degrees:
        out = out * (ExactPoly.one() - ExactPoly.monomial(2 * d))
    return out


def coinvariant_graded_char(weyl: WeylData, cls: ConjClassData) -> ExactPoly:
    """Graded trace on the coinvariant algebra, doubled grading.

    C_c(t) = prod_i (1 - t^{2 d_i}) / det(1 - t^2 w); the division is exact for
    consistent class data and an inexact division signals corrupt data.
    """
    return coinvariant_numerator(weyl).div_exact(cls.det_poly.substitute(power=2))


def _as_nonneg_int_poly(p: ExactPoly, what: str) -> ExactPoly:
    for d, c in p.items():
        if c.denominator != 1:
            raise EngineConsistencyError(f"non-integer coefficient {c} at degree {d} in {what}")
        if c < 0:
            raise EngineConsistencyError(f"negative coefficient {c} at degree {d} in {what}")
    return p


def isotypic_poincare(cartan: CartanType, n: int, char_values) -> ExactPoly:
    """Graded multiplicity of one irreducible character in H(G/T x T^n).

    ``char_values`` lists the character on the classes of weyl_data(cartan), in
    order.  The result must have non-negative integer coefficients; anything
    else is reported as an engine consistency error.
    """
    _check_n(n)
    wd = weyl_data(cartan)
    values = list(char_values)
    if len(values) != len(wd.classes):
        raise ValueError("character values do not match the class list")
    acc = ExactPoly.zero()
    for cls, chi in zip(wd.classes, values):
        term = exterior_char(cls, n) * coinvariant_graded_char(wd, cls)
        acc = acc + term * (Fraction(chi) * cls.size)
    acc = acc * Fraction(1, wd.order)
    return _as_nonneg_int_poly(acc, f"isotypic series for {cartan.label}, n={n}")


def poincare_poly(cartan: CartanType, n: int) -> PoincareResult:
    """Poincare polynomial of the generic commuting component (trivial isotypic)."""
    wd = weyl_data(cartan)
    poly = isotypic_poincare(cartan, n, [1] * len(wd.classes))
    total = poly.eval(1)
    expected = 2 ** (n * cartan.rank)
    if total != expected:
        raise EngineConsistencyError(
            f"total dimension {total} != 2^(n*rank) = {expected} for {cartan.label}, n={n}"
        )
    return PoincareResult(cartan, n, poly, int(total))


def betti(cartan: CartanType, n: int, degree: int) -> int:
    """dim H^degree of the generic commuting component."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    c = poincare_poly(cartan, n).poly.coeff(degree)
    return int(c)


def su2_betti_oracle(n: int, degree: int) -> int:
    """Closed-form Betti numbers for the rank-one case: C(n, d) in even degree d,
    C(n, d-2) in odd degree.  Used as an independent cross-check of the engine."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("n must be a non-negative integer")
    if degree < 0:
        return 0
    if degree % 2 == 0:
        return comb(n, degree)
    return comb(n, degree - 2) if degree >= 2 else 0


def equivariant_hilbert(cartan: CartanType, n: int, truncate: int) -> EquivariantResult:
    """Equivariant Hilbert series as the factorized form P(t) / prod(1 - t^{2 d_i}).

    The truncation lists the series coefficients through degree ``truncate``;
    they must be non-negative integers.  The independent per-class route is
    ``equivariant_series_by_classes`` (compared in the verification suite).
    """
    if truncate < 0:
        raise ValueError("truncate must be non-negative")
    wd = weyl_data(cartan)
    result = poincare_poly(cartan, n)
    series = RationalFunction(result.poly, coinvariant_numerator(wd))
    coeffs = series.series_expand(truncate)
    out = []
    for d, c in enumerate(coeffs):
        if c.denominator != 1 or c < 0:
            raise EngineConsistencyError(
                f"equivariant coefficient {c} at degree {d} is not a non-negative integer"
            )
        out.append(int(c))
    return EquivariantResult(cartan, n, series, tuple(out))


def equivariant_series_by_classes(cartan: CartanType, n: int) -> RationalFunction:
    """Equivariant Hilbert series summed class by class:

        (1/|W|) sum_c |c| * E_c(t)^n / det(1 - t^2 w).

    Kept deliberately separate from the factorized route so the two can be
    compared as exact rational functions.
    """
    _check_n(n)
    wd = weyl_data(cartan)
    acc: RationalFunction | None = None
    for cls in wd.classes:
        term = RationalFunction(
            exterior_char(cls, n) * cls.size, cls.det_poly.substitute(power=2)
        )
        acc = term if acc is None else acc + term
    assert acc is not None
    return acc * Fraction(1, wd.order)


def torsion_primes(cartan: CartanType) -> set[int]:
    """Primes dividing |W|: the only primes where H^*(X, Z) can have torsion."""
    remaining = weyl_order(cartan)
    primes: set[int] = set()
    p = 2
    while remaining > 1:
        if remaining % p == 0:
            primes.add(p)
            while remaining % p == 0:
                remaining //= p
        p += 1 if p == 2 else 2
    return primes


def graded_w_decomposition(cartan: CartanType, n: int = 1) -> WDecomposition:
    """Character-coefficient factors for family A (see WDecomposition)."""
    if cartan.family != "A":
        raise ValueError(
            f"unsupported family {cartan.family}: irreducible decomposition is"
            " provided for family A only"
        )
    _check_n(n)
    wd = weyl_data(cartan)
    table = character_table(cartan.rank + 1)
    exterior = decompose_graded(
        GradedClassFunction.from_class_polys(wd, [exterior_char(c, n) for c in wd.classes]),
        table,
    )
    coinvariant = decompose_graded(
        GradedClassFunction.from_class_polys(
            wd, [coinvariant_graded_char(wd, c) for c in wd.classes]
        ),
        table,
    )
    return WDecomposition(cartan, n, tuple(exterior), tuple(coinvariant))
