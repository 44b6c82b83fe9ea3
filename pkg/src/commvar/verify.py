"""Self-verification: the internal consistency checks behind `commvar verify`.

Each check is a small named predicate over one Cartan type (and where it
matters, one n).  The CLI prints a line per check and fails the run if any
predicate is false.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .chartab import character_table, decompose_graded, recombine_graded, GradedClassFunction
from .cohomology import (
    coinvariant_graded_char,
    coinvariant_numerator,
    equivariant_hilbert,
    equivariant_series_by_classes,
    exterior_char,
    graded_w_decomposition,
    isotypic_poincare,
    poincare_poly,
    su2_betti_oracle,
)
from .exact_poly import ExactPoly, RationalFunction
from .weyl import CartanType, weyl_data

MOLIEN_DEGREE = 30


@dataclass(frozen=True)
class CheckResult:
    name: str
    context: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        suffix = f": {self.detail}" if (self.detail and not self.ok) else ""
        return f"{status} {self.name} [{self.context}]{suffix}"


def default_matrix() -> list[tuple[CartanType, int]]:
    types = [
        CartanType("A", 1),
        CartanType("A", 2),
        CartanType("A", 3),
        CartanType("A", 4),
        CartanType("B", 2),
        CartanType("B", 3),
        CartanType("C", 3),
        CartanType("D", 4),
    ]
    return [(t, n) for t in types for n in range(4)]


def _molien_ok(cartan: CartanType) -> bool:
    wd = weyl_data(cartan)
    total = [Fraction(0)] * (MOLIEN_DEGREE + 1)
    for cls in wd.classes:
        series = RationalFunction(ExactPoly.constant(cls.size), cls.det_poly)
        for d, c in enumerate(series.series_expand(MOLIEN_DEGREE)):
            total[d] += c
    total = [c / wd.order for c in total]
    target_den = ExactPoly.one()
    for d in wd.degrees:
        target_den = target_den * (ExactPoly.one() - ExactPoly.monomial(d))
    target = RationalFunction(ExactPoly.one(), target_den).series_expand(MOLIEN_DEGREE)
    return total == target


def run_checks(cartan: CartanType, n: int) -> list[CheckResult]:
    """All invariant checks for one (type, n) pair, in report order."""
    wd = weyl_data(cartan)
    ctx = cartan.label
    ctxn = f"{ctx}, n={n}"
    results: list[CheckResult] = []

    def add(name, context, ok, detail=""):
        results.append(CheckResult(name, context, bool(ok), detail))

    add(
        "class sizes sum to |W|",
        ctx,
        sum(c.size for c in wd.classes) == wd.order,
        f"sum={sum(c.size for c in wd.classes)}, |W|={wd.order}",
    )
    add(
        "invariant degrees multiply to |W|",
        ctx,
        prod(wd.degrees) == wd.order and len(wd.degrees) == cartan.rank,
        f"degrees={wd.degrees}",
    )

    identity = wd.classes[0]
    expected_det = (ExactPoly.one() - ExactPoly.monomial(1)) ** cartan.rank
    add(
        "identity class has size 1 and det (1-s)^rank",
        ctx,
        identity.size == 1 and identity.det_poly == expected_det,
        identity.descriptor.label(),
    )

    add(f"Molien series matches degree product (deg <= {MOLIEN_DEGREE})", ctx, _molien_ok(cartan))

    coinv = [coinvariant_graded_char(wd, c) for c in wd.classes]
    regular_ok = coinv[0].eval(1) == wd.order and all(
        p.eval(1) == 0 for p in coinv[1:]
    )
    add("coinvariant character at t=1 is the regular character", ctx, regular_ok)

    average = ExactPoly.zero()
    for cls, p in zip(wd.classes, coinv):
        average = average + p * cls.size
    add(
        "trivial-isotypic average of the coinvariant character is 1",
        ctx,
        average * Fraction(1, wd.order) == ExactPoly.one(),
    )

    try:
        result = poincare_poly(cartan, n)
        add("Poincare coefficients are non-negative integers", ctxn, True)
        add(
            "total dimension equals 2^(n*rank)",
            ctxn,
            result.total_dim == 2 ** (n * cartan.rank),
            f"P(1)={result.total_dim}",
        )
    except ArithmeticError as exc:
        add("Poincare coefficients are non-negative integers", ctxn, False, str(exc))
        result = None

    product = ExactPoly.one()
    for d in wd.degrees:
        product = product * (ExactPoly.one() + ExactPoly.monomial(2 * d - 1))
    add(
        "n=1 Poincare polynomial is the exterior product over degrees 2d_i - 1",
        ctx,
        poincare_poly(cartan, 1).poly == product,
    )

    if result is not None:
        factorized = RationalFunction(result.poly, coinvariant_numerator(wd))
        add(
            "equivariant series: class sum equals factorized form",
            ctxn,
            equivariant_series_by_classes(cartan, n) == factorized,
        )
        truncate = 2 * sum(wd.degrees)
        try:
            equivariant_hilbert(cartan, n, truncate)
            add(
                f"equivariant coefficients are non-negative integers (deg <= {truncate})",
                ctxn,
                True,
            )
        except ArithmeticError as exc:
            add("equivariant coefficients are non-negative integers", ctxn, False, str(exc))

    if cartan.family == "A":
        table = character_table(cartan.rank + 1)
        decomp = graded_w_decomposition(cartan, 1)
        ext_gcf = GradedClassFunction.from_class_polys(
            wd, [exterior_char(c, 1) for c in wd.classes]
        )
        add(
            "exterior decomposition recombines to its graded character",
            ctx,
            recombine_graded(decomp.exterior, table, wd) == ext_gcf,
        )
        dims_ok = all(
            mult.eval(1) == table.dimension(lam) for lam, mult in decomp.coinvariant
        ) and len(decomp.coinvariant) == len(table.rows)
        add("coinvariant decomposition at t=1 gives each dimension", ctx, dims_ok)

    if cartan.family == "A" and cartan.rank == 1:
        oracle_ok = all(
            poincare_poly(cartan, k).poly.coeff(d) == su2_betti_oracle(k, d)
            for k in range(9)
            for d in range(k + 3)
        )
        add("Betti numbers match the binomial closed form (n <= 8)", ctx, oracle_ok)

    if cartan.family == "A" and cartan.rank == 3:
        # The trivial-isotypic extraction is the Poincare polynomial; the
        # sign-isotypic variant is reported alongside it for comparison.
        table = character_table(4)
        sign_row = table.row((1, 1, 1, 1))
        trivial = poincare_poly(cartan, n).poly
        try:
            variant = isotypic_poincare(cartan, n, sign_row)
            add(
                "sign-isotypic variant is integral and non-negative",
                ctxn,
                True,
                f"trivial: {trivial}; sign: {variant}",
            )
        except ArithmeticError as exc:
            add("sign-isotypic variant is integral and non-negative", ctxn, False, str(exc))

    return results


def run_suite(pairs) -> tuple[list[CheckResult], bool]:
    results: list[CheckResult] = []
    for cartan, n in pairs:
        results.extend(run_checks(cartan, n))
    return results, all(r.ok for r in results)
