"""Exact univariate polynomial and rational-function arithmetic over the rationals.

Polynomials are stored sparsely as a map from degree to a nonzero
``fractions.Fraction``; the zero polynomial is the empty map.  Sparse storage
keeps class polynomials such as ``1 + s^k`` cheap, while n-th powers are free
to densify into ordinary dense convolutions.  Every operation is a pure
function returning a new value, and no coefficient is ever a float.

``RationalFunction`` pairs a numerator and denominator polynomial and
normalizes the denominator so that its lowest-degree nonzero coefficient is 1;
equality is decided by cross multiplication, so no polynomial gcd is needed.
Power-series expansion requires a denominator with nonzero constant term.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

Rational = Union[int, Fraction]

_ZERO = Fraction(0)


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class PoleAtOriginError(ZeroDivisionError):
    """Series expansion requested for a denominator vanishing at the origin."""


class ExactPoly:
    """Univariate polynomial with exact rational coefficients.

    Canonical form: no stored coefficient is zero.  Instances are immutable
    and hashable; arithmetic goes through the usual operators, plus
    ``div_exact`` (division that must leave no remainder), ``eval`` and
    ``substitute`` (change of variable ``t -> c*t^k``).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Rational] | None = None):
        data: dict[int, Fraction] = {}
        if coeffs:
            for deg, c in coeffs.items():
                if not isinstance(deg, int) or deg < 0:
                    raise ValueError(f"degree must be a non-negative integer, got {deg!r}")
                f = Fraction(c)
                if f:
                    data[deg] = f
        object.__setattr__(self, "_coeffs", data)

    def __setattr__(self, name, value):
        raise AttributeError("ExactPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> ExactPoly:
        return cls()

    @classmethod
    def one(cls) -> ExactPoly:
        return cls({0: 1})

    @classmethod
    def constant(cls, c: Rational) -> ExactPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, degree: int, coeff: Rational = 1) -> ExactPoly:
        return cls({degree: coeff})

    @classmethod
    def from_coeffs(cls, seq) -> ExactPoly:
        """Build from a dense ascending coefficient list."""
        return cls({d: c for d, c in enumerate(seq)})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int | None:
        """Largest degree with nonzero coefficient, or None for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    def coeff(self, degree: int) -> Fraction:
        return self._coeffs.get(degree, _ZERO)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Yield (degree, coefficient) pairs in ascending degree order."""
        for d in sorted(self._coeffs):
            yield d, self._coeffs[d]

    def coefficients_list(self, through_degree: int | None = None) -> list[Fraction]:
        """Dense ascending coefficient list through ``through_degree`` (default: the degree)."""
        top = self.degree if through_degree is None else through_degree
        if top is None:
            return [_ZERO]
        return [self.coeff(d) for d in range(top + 1)]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> ExactPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            nv = out.get(d, _ZERO) + c
            if nv:
                out[d] = nv
            elif d in out:
                del out[d]
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> ExactPoly:
        return _raw({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other) -> ExactPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> ExactPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> ExactPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return ExactPoly()
        # convolution; iterate the sparser factor outside
        a, b = self._coeffs, other._coeffs
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, Fraction] = {}
        for da, ca in a.items():
            for db, cb in b.items():
                d = da + db
                nv = out.get(d, _ZERO) + ca * cb
                if nv:
                    out[d] = nv
                elif d in out:
                    del out[d]
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> ExactPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ExactPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def div_exact(self, q: ExactPoly) -> ExactPoly:
        """Return r with self = q*r, raising InexactDivisionError otherwise.

        Division runs in ascending degree (power-series style), which suits
        divisors with unit low-order coefficient; a remainder is detected as
        soon as the working residue drops below the divisor's valuation or
        the quotient would exceed its possible degree.
        """
        if q.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ExactPoly()
        qmin = min(q._coeffs)
        qlead = q._coeffs[qmin]
        bound = self.degree - q.degree  # max admissible quotient degree
        rem = dict(self._coeffs)
        out: dict[int, Fraction] = {}
        while rem:
            d = min(rem)
            k = d - qmin
            if k < 0 or k > bound:
                raise InexactDivisionError(
                    f"inexact division: remainder has a term of degree {d}"
                )
            f = rem[d] / qlead
            out[k] = f
            for e, c in q._coeffs.items():
                nd = k + e
                nv = rem.get(nd, _ZERO) - f * c
                if nv:
                    rem[nd] = nv
                elif nd in rem:
                    del rem[nd]
        return _raw(out)

    def eval(self, x: Rational) -> Fraction:
        """Exact evaluation at a rational point (sparse Horner scheme)."""
        x = Fraction(x)
        acc = _ZERO
        prev: int | None = None
        for d in sorted(self._coeffs, reverse=True):
            if prev is None:
                acc = self._coeffs[d]
            else:
                acc = acc * x ** (prev - d) + self._coeffs[d]
            prev = d
        if prev is None:
            return _ZERO
        return acc * x**prev

    def substitute(self, *, scale: Rational = 1, power: int = 1) -> ExactPoly:
        """Return p(scale * t^power)."""
        if not isinstance(power, int) or power < 1:
            raise ValueError("power must be a positive integer")
        scale = Fraction(scale)
        return _raw(
            {d * power: c * scale**d for d, c in self._coeffs.items() if c * scale**d}
        )

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def to_str(self, var: str = "t") -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for d in sorted(self._coeffs):
            c = self._coeffs[d]
            mag = -c if c < 0 else c
            if d == 0:
                body = str(mag)
            else:
                tp = var if d == 1 else f"{var}^{d}"
                body = tp if mag == 1 else f"{mag}*{tp}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"ExactPoly({self.to_str()!r})"


def _coerce(value) -> ExactPoly:
    if isinstance(value, ExactPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return ExactPoly({0: value})
    return NotImplemented


def _raw(coeffs: dict[int, Fraction]) -> ExactPoly:
    # internal fast path: coeffs already canonical (no zeros, Fraction values)
    p = ExactPoly.__new__(ExactPoly)
    object.__setattr__(p, "_coeffs", coeffs)
    return p


class RationalFunction:
    """Quotient of two ExactPoly values in a scalar-normalized form.

    The denominator's lowest-degree nonzero coefficient is scaled to 1 on
    construction (the numerator is scaled to match), so equal constructions
    print identically.  Equality is exact, by cross multiplication.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: ExactPoly, denominator: ExactPoly):
        if not isinstance(numerator, ExactPoly):
            numerator = _coerce(numerator)
        if not isinstance(denominator, ExactPoly):
            denominator = _coerce(denominator)
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        low = min(d for d, _ in denominator.items())
        lc = denominator.coeff(low)
        if lc != 1:
            inv = Fraction(1) / lc
            numerator = numerator * inv
            denominator = denominator * inv
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __add__(self, other: RationalFunction) -> RationalFunction:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(
                self.numerator * other.numerator, self.denominator * other.denominator
            )
        if isinstance(other, (int, Fraction, ExactPoly)):
            return RationalFunction(self.numerator * other, self.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def series_expand(self, max_degree: int) -> list[Fraction]:
        """Power-series coefficients through ``max_degree``.

        Uses the standard recurrence c_k = (num_k - sum_j den_j * c_{k-j}) / den_0
        and therefore needs den_0 != 0.
        """
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        den0 = self.denominator.coeff(0)
        if den0 == 0:
            raise PoleAtOriginError("pole at origin: denominator constant term is zero")
        den_tail = [(d, c) for d, c in self.denominator.items() if d > 0]
        coeffs: list[Fraction] = []
        for k in range(max_degree + 1):
            s = self.numerator.coeff(k)
            for d, c in den_tail:
                if d > k:
                    break
                s -= c * coeffs[k - d]
            coeffs.append(s / den0)
        return coeffs

    def to_str(self, var: str = "t") -> str:
        return f"({self.numerator.to_str(var)}) / ({self.denominator.to_str(var)})"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_str()!r})"


def series_expand(f: RationalFunction, max_degree: int) -> list[Fraction]:
    """Module-level alias for RationalFunction.series_expand."""
    return f.series_expand(max_degree)
