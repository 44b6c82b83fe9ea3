"""Command-line frontend.

Subcommands: classes, poincare, equivariant, betti, char-table, char-poly,
torsion-primes, verify.  Output formats are plain (default), latex, and json;
JSON documents carry a fixed field order (schema_version, query, result,
provenance) with polynomial coefficients as decimal strings in ascending
degree, so arbitrary-precision integers survive serialization and re-emitting
a parsed document is byte-identical.

Exit codes: 0 success, 1 verification or internal-consistency failure,
2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .chartab import CharacterTable, character_table
from .cohomology import (
    EquivariantResult,
    PoincareResult,
    betti,
    equivariant_hilbert,
    graded_w_decomposition,
    poincare_poly,
    torsion_primes,
)
from .exact_poly import ExactPoly
from .verify import default_matrix, run_suite
from .weyl import CARTAN_GRAMMAR, CartanType, parse_cartan_type, weyl_data

SCHEMA_VERSION = "1"


# -- polynomial / character rendering ---------------------------------------


def poly_latex(p: ExactPoly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for d, c in p.items():
        mag = -c if c < 0 else c
        if d == 0:
            body = str(mag)
        else:
            tp = var if d == 1 else f"{var}^{{{d}}}"
            body = tp if mag == 1 else f"{mag}{tp}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def poly_coeff_strings(p: ExactPoly) -> list[str]:
    return [str(c) for c in p.coefficients_list()]


def _chi_terms_by_degree(decomposition, table: CharacterTable):
    by_degree: dict[int, list[tuple[int, int]]] = {}
    for lam, mult in decomposition:
        idx = table.chi_index(lam)
        for d, c in mult.items():
            by_degree.setdefault(d, []).append((idx, int(c)))
    for d in by_degree:
        by_degree[d].sort()
    return dict(sorted(by_degree.items()))


def chi_poly_str(decomposition, table: CharacterTable, latex: bool = False) -> str:
    """Render a character-coefficient polynomial, e.g. chi_1 + chi_4*t + chi_2*t^3."""
    chunks = []
    for d, terms in _chi_terms_by_degree(decomposition, table).items():
        names = []
        for idx, mult in terms:
            chi = f"\\chi_{idx}" if latex else f"chi_{idx}"
            names.append(chi if mult == 1 else (f"{mult}{chi}" if latex else f"{mult}*{chi}"))
        body = " + ".join(names)
        if len(terms) > 1 and d > 0:
            body = f"({body})"
        if d == 0:
            chunks.append(body)
        elif latex:
            chunks.append(f"{body} t" if d == 1 else f"{body} t^{{{d}}}")
        else:
            chunks.append(f"{body}*t" if d == 1 else f"{body}*t^{d}")
    return " + ".join(chunks) if chunks else "0"


# -- JSON document -----------------------------------------------------------


def make_document(command: str, query: dict, result: dict, elapsed_ms: float) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "query": {"command": command, **query},
        "result": result,
        "provenance": {"engine": "commvar", "version": __version__, "elapsed_ms": elapsed_ms},
    }
    return json.dumps(doc, indent=2)


def _query_for(cartan: CartanType | None, **extra) -> dict:
    q: dict = {}
    if cartan is not None:
        q["type"] = cartan.label
        q["family"] = cartan.family
        q["rank"] = cartan.rank
    q.update(extra)
    return q


# -- emitters per command ----------------------------------------------------


def emit_poincare(result: PoincareResult, fmt: str, elapsed_ms: float) -> str:
    if fmt == "plain":
        return result.poly.to_str()
    if fmt == "latex":
        return poly_latex(result.poly)
    return make_document(
        "poincare",
        _query_for(result.cartan, n=result.n),
        {
            "coefficients": poly_coeff_strings(result.poly),
            "total_dimension": str(result.total_dim),
        },
        elapsed_ms,
    )


def emit_equivariant(result: EquivariantResult, truncate: int, fmt: str, elapsed_ms: float) -> str:
    degrees = weyl_data(result.cartan).degrees
    factors = "".join(f"(1 - t^{2 * d})" for d in degrees)
    if fmt == "plain":
        lines = [
            f"series: {result.series.to_str()}",
            f"denominator factors: {factors}",
            f"coefficients through degree {truncate}: {list(result.truncation)}",
        ]
        return "\n".join(lines)
    if fmt == "latex":
        num = poly_latex(result.series.numerator)
        den = "".join(f"(1 - t^{{{2 * d}}})" for d in degrees)
        return f"\\frac{{{num}}}{{{den}}}"
    return make_document(
        "equivariant",
        _query_for(result.cartan, n=result.n, truncate=truncate),
        {
            "numerator": poly_coeff_strings(result.series.numerator),
            "denominator": poly_coeff_strings(result.series.denominator),
            "denominator_factor_degrees": [2 * d for d in degrees],
            "truncation": [str(c) for c in result.truncation],
        },
        elapsed_ms,
    )


def emit_classes(cartan: CartanType, fmt: str, elapsed_ms: float) -> str:
    wd = weyl_data(cartan)
    if fmt == "json":
        return make_document(
            "classes",
            _query_for(cartan),
            {
                "order": str(wd.order),
                "invariant_degrees": list(wd.degrees),
                "classes": [
                    {
                        "descriptor": {
                            "positive": list(c.descriptor.positive),
                            "negative": list(c.descriptor.negative),
                        },
                        "size": str(c.size),
                        "det_poly": poly_coeff_strings(c.det_poly),
                    }
                    for c in wd.classes
                ],
            },
            elapsed_ms,
        )
    lines = [f"conjugacy classes of W({cartan.label}), order {wd.order}:"]
    width = max(len(c.descriptor.label()) for c in wd.classes)
    for c in wd.classes:
        det = poly_latex(c.det_poly, "s") if fmt == "latex" else c.det_poly.to_str("s")
        lines.append(f"{c.descriptor.label():<{width}}  size {c.size:<8} det(1 - s w) = {det}")
    return "\n".join(lines)


def emit_char_table(table: CharacterTable, fmt: str, elapsed_ms: float) -> str:
    if fmt == "json":
        return make_document(
            "char-table",
            {"m": table.m},
            {
                "irreducibles": [list(lam) for lam in table.rows],
                "classes": [list(mu) for mu in table.columns],
                "class_labels": list(table.column_labels()),
                "class_sizes": list(table.class_sizes),
                "values": [list(row) for row in table.values],
            },
            elapsed_ms,
        )
    if fmt == "latex":
        cols = table.column_labels()
        lines = [f"\\begin{{tabular}}{{c|{'c' * len(cols)}}}"]
        lines.append(" & " + " & ".join(cols) + "\\\\")
        lines.append("\\hline")
        for i, row in enumerate(table.values):
            lines.append(f"$\\chi_{i + 1}$ & " + " & ".join(str(v) for v in row) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    labels = [f"chi_{i + 1} = ({','.join(map(str, lam))})" for i, lam in enumerate(table.rows)]
    lwidth = max(len(s) for s in labels)
    cols = table.column_labels()
    widths = [
        max(len(cols[j]), max(len(str(row[j])) for row in table.values))
        for j in range(len(cols))
    ]
    lines = [f"character table of S_{table.m}"]
    lines.append(" " * lwidth + "  " + "  ".join(c.rjust(w) for c, w in zip(cols, widths)))
    for label, row in zip(labels, table.values):
        lines.append(
            label.ljust(lwidth) + "  " + "  ".join(str(v).rjust(w) for v, w in zip(row, widths))
        )
    return "\n".join(lines)


def emit_char_poly(cartan: CartanType, n: int, fmt: str, elapsed_ms: float) -> str:
    factors = graded_w_decomposition(cartan, 1)
    table = character_table(cartan.rank + 1)
    latex = fmt == "latex"
    ext = chi_poly_str(factors.exterior, table, latex)
    coinv = chi_poly_str(factors.coinvariant, table, latex)
    if latex:
        expr = f"\\langle \\chi_1, ({ext})^{{{n}}} ({coinv}) \\rangle"
    else:
        expr = f"<chi_1, ({ext})^{n} * ({coinv})>"
    if fmt == "json":

        def factor_json(decomp):
            return [
                {
                    "chi": table.chi_index(lam),
                    "partition": list(lam),
                    "multiplicity": poly_coeff_strings(mult),
                }
                for lam, mult in decomp
            ]

        return make_document(
            "char-poly",
            _query_for(cartan, n=n),
            {
                "expression": expr,
                "exterior": factor_json(factors.exterior),
                "coinvariant": factor_json(factors.coinvariant),
            },
            elapsed_ms,
        )
    lines = [f"P(t) = {expr}"]
    lines.append("exterior factor:")
    for lam, mult in factors.exterior:
        lines.append(f"  chi_{table.chi_index(lam)} = ({','.join(map(str, lam))}): {mult}")
    lines.append("coinvariant factor:")
    for lam, mult in factors.coinvariant:
        lines.append(f"  chi_{table.chi_index(lam)} = ({','.join(map(str, lam))}): {mult}")
    return "\n".join(lines)


def emit_torsion(cartan: CartanType, fmt: str, elapsed_ms: float) -> str:
    primes = sorted(torsion_primes(cartan))
    if fmt == "json":
        return make_document("torsion-primes", _query_for(cartan), {"primes": primes}, elapsed_ms)
    if fmt == "latex":
        return "\\{" + ", ".join(str(p) for p in primes) + "\\}"
    return " ".join(str(p) for p in primes)


# -- argument parsing --------------------------------------------------------


def _cartan_arg(text: str) -> CartanType:
    try:
        return parse_cartan_type(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commvar",
        description=(
            "Exact cohomology invariants of the generic component of commuting"
            " n-tuples in compact simple Lie groups (classical types)."
        ),
        epilog=f"Cartan type grammar: {CARTAN_GRAMMAR}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_fmt(p):
        p.add_argument(
            "--format", choices=("plain", "latex", "json"), default="plain", help="output format"
        )

    p = sub.add_parser("classes", help="conjugacy class descriptors, sizes, det polynomials")
    p.add_argument("--type", type=_cartan_arg, required=True, metavar="TYPE")
    add_fmt(p)

    p = sub.add_parser("poincare", help="Poincare polynomial of the commuting component")
    p.add_argument("--type", type=_cartan_arg, required=True, metavar="TYPE")
    p.add_argument("--n", type=int, required=True, help="number of torus factors")
    add_fmt(p)

    p = sub.add_parser("equivariant", help="equivariant Hilbert series with truncation")
    p.add_argument("--type", type=_cartan_arg, required=True, metavar="TYPE")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--truncate", type=int, required=True, help="expand through this degree")
    add_fmt(p)

    p = sub.add_parser("betti", help="a single Betti number")
    p.add_argument("--type", type=_cartan_arg, required=True, metavar="TYPE")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    add_fmt(p)

    p = sub.add_parser("char-table", help="symmetric group character table")
    p.add_argument("--m", type=int, required=True)
    add_fmt(p)

    p = sub.add_parser("char-poly", help="character-coefficient factors (family A)")
    p.add_argument("--type", type=_cartan_arg, required=True, metavar="TYPE")
    p.add_argument("--n", type=int, default=1)
    add_fmt(p)

    p = sub.add_parser("torsion-primes", help="primes where integral torsion is possible")
    p.add_argument("--type", type=_cartan_arg, required=True, metavar="TYPE")
    add_fmt(p)

    p = sub.add_parser("verify", help="run the invariant suites (nonzero exit on failure)")
    p.add_argument("--type", type=_cartan_arg, metavar="TYPE")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--all", action="store_true", help="run the full default matrix")

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()

    try:
        if args.command == "verify":
            if args.all:
                pairs = default_matrix()
            else:
                if args.type is None:
                    parser.error("verify requires --type unless --all is given")
                pairs = [(args.type, args.n)]
            results, ok = run_suite(pairs)
            for r in results:
                print(r.line())
            print(f"{'all checks passed' if ok else 'CHECKS FAILED'} ({len(results)} checks)")
            return 0 if ok else 1

        elapsed = lambda: round((time.perf_counter() - start) * 1000, 3)  # noqa: E731

        if args.command == "classes":
            print(emit_classes(args.type, args.format, elapsed()))
        elif args.command == "poincare":
            result = poincare_poly(args.type, args.n)
            print(emit_poincare(result, args.format, elapsed()))
        elif args.command == "equivariant":
            result = equivariant_hilbert(args.type, args.n, args.truncate)
            print(emit_equivariant(result, args.truncate, args.format, elapsed()))
        elif args.command == "betti":
            value = betti(args.type, args.n, args.degree)
            if args.format == "json":
                print(
                    make_document(
                        "betti",
                        _query_for(args.type, n=args.n, degree=args.degree),
                        {"value": str(value)},
                        elapsed(),
                    )
                )
            else:
                print(value)
        elif args.command == "char-table":
            print(emit_char_table(character_table(args.m), args.format, elapsed()))
        elif args.command == "char-poly":
            print(emit_char_poly(args.type, args.n, args.format, elapsed()))
        elif args.command == "torsion-primes":
            print(emit_torsion(args.type, args.format, elapsed()))
        return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
