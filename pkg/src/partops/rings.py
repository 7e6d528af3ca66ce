"""Exact coefficient rings: rationals, univariate and multivariate polynomials
over the rationals, and univariate rational functions.

All values are immutable once built.  Rationals are plain ``fractions.Fraction``
(always reduced, positive denominator); the polynomial types normalise on
construction, so two equal values always have identical internal form.  Mixing
values from different rings (or different variables) raises
:class:`RingMismatchError` rather than guessing a coercion; plain ``int`` and
``Fraction`` scalars lift into every ring.

Canonical text rendering (the golden-file format): rationals as ``a/b`` (bare
``a`` when the denominator is 1), polynomials ascending by degree as
``c0 + c1*w + c2*w^2`` with unit coefficients elided, multivariate terms
ordered by total degree then lexicographic exponents.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

__all__ = [
    "Rational",
    "Polynomial",
    "MultiPoly",
    "RationalFunction",
    "RingMismatchError",
    "PoleError",
    "RingTag",
    "ring_of",
    "ring_add",
    "ring_mul",
    "ring_neg",
    "pochhammer",
    "poly_eval",
    "format_rational",
]

Rational = Fraction

Scalar = Union[int, Fraction]

_POLE_RTOL = 1e-12


class RingMismatchError(TypeError):
    """Raised when a binary operation mixes values from different rings."""


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at (or near) a pole."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise RingMismatchError(f"expected a rational scalar, got {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    """Render ``a/b``, or bare ``a`` for integers."""
    q = _as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _coeff_prefix(c: Fraction, head: str) -> str:
    # "w^2" for c=1, "-w^2" for c=-1, "3/2*w^2" otherwise
    if c == 1:
        return head
    if c == -1:
        return "-" + head
    return f"{format_rational(c)}*{head}"


def _join_terms(terms: Sequence[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


class Polynomial:
    """Dense univariate polynomial over the rationals.

    ``coeffs[i]`` is the coefficient of ``var**i``; the sequence is trimmed so
    the leading coefficient is nonzero (the zero polynomial stores ``()``).
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def variable(cls, var: str) -> "Polynomial":
        return cls(var, (0, 1))

    @classmethod
    def constant(cls, var: str, value) -> "Polynomial":
        return cls(var, (value,))

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def _check(self, other: "Polynomial"):
        if self.var != other.var:
            raise RingMismatchError(
                f"polynomials in different variables: {self.var!r} vs {other.var!r}")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.var, other)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.var,
                          [self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial) else -_as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return Polynomial(self.var, [c * q for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(self.var, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if q == 0:
                raise ZeroDivisionError("division of polynomial by zero scalar")
            return self * Fraction(1, 1) * (1 / q)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.var, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        """Exact Euclidean division (coefficients stay rational)."""
        if not isinstance(other, Polynomial):
            raise RingMismatchError("divmod requires a Polynomial divisor")
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.coeffs
        dd = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lead
            quot[i - dd] = f
            for j in range(dd + 1):
                rem[i - dd + j] -= f * dn[j]
        return Polynomial(self.var, quot), Polynomial(self.var, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- queries --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.degree <= 0 and self.coefficient(0) == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __call__(self, point):
        """Horner evaluation; accepts scalars, complex, or ring values."""
        if not self.coeffs:
            return Fraction(0) if not isinstance(point, complex) else 0j
        acc = self.coeffs[-1]
        if isinstance(point, complex):
            acc = complex(acc)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * point + c
        return acc

    def substitute(self, value):
        """Replace the variable with an arbitrary ring value."""
        result = None
        for c in reversed(self.coeffs):
            result = c if result is None else result * value + c
        if result is None:
            return Fraction(0)
        return result

    def monic(self) -> "Polynomial":
        if self.is_zero() or self.leading == 1:
            return self
        return self * (1 / self.leading)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd by the Euclidean algorithm in exact arithmetic."""
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.monic()

    def __repr__(self):
        return f"Polynomial({self.var!r}, {self.render()!r})"

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(format_rational(c))
            elif i == 1:
                terms.append(_coeff_prefix(c, self.var))
            else:
                terms.append(_coeff_prefix(c, f"{self.var}^{i}"))
        return _join_terms(terms)


class MultiPoly:
    """Sparse multivariate polynomial over the rationals.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    rational coefficients.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Tuple[int, ...], object] = ()):
        vs = tuple(vars)
        canon: Dict[Tuple[int, ...], Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != len(vs):
                raise ValueError(f"exponent tuple {exps} does not match variables {vs}")
            q = _as_fraction(c)
            if q == 0:
                continue
            q2 = canon.get(exps, Fraction(0)) + q
            if q2 == 0:
                canon.pop(exps, None)
            else:
                canon[exps] = q2
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", canon)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "MultiPoly":
        vs = tuple(vars)
        exps = tuple(1 if v == name else 0 for v in vs)
        if sum(exps) != 1:
            raise ValueError(f"{name!r} is not one of {vs}")
        return cls(vs, {exps: 1})

    @classmethod
    def constant(cls, vars: Sequence[str], value) -> "MultiPoly":
        vs = tuple(vars)
        return cls(vs, {(0,) * len(vs): value})

    @classmethod
    def monomial(cls, vars: Sequence[str], coeff, exps: Sequence[int]) -> "MultiPoly":
        return cls(vars, {tuple(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise RingMismatchError(
                f"multivariate polynomials over different variables: "
                f"{self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            q = out.get(exps, Fraction(0)) + c
            if q == 0:
                out.pop(exps, None)
            else:
                out[exps] = q
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-_as_fraction(other))
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if q == 0:
                return MultiPoly(self.vars)
            return MultiPoly(self.vars, {e: c * q for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: Dict[Tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                q = out.get(e, Fraction(0)) + c1 * c2
                if q == 0:
                    out.pop(e, None)
                else:
                    out[e] = q
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if q == 0:
                raise ZeroDivisionError("division of polynomial by zero scalar")
            return self * (1 / q)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def substitute(self, mapping: Mapping[str, object]) -> object:
        """Replace variables; values may be scalars or MultiPoly over the
        same variable tuple.  Unmapped variables stay symbolic."""
        for name in mapping:
            if name not in self.vars:
                raise ValueError(f"unknown variable {name!r}")
        result = MultiPoly.constant(self.vars, 0)
        for exps, c in self.terms.items():
            term = MultiPoly.constant(self.vars, c)
            for v, e in zip(self.vars, exps):
                if e == 0:
                    continue
                if v in mapping:
                    repl = mapping[v]
                    if isinstance(repl, (int, Fraction)):
                        repl = MultiPoly.constant(self.vars, repl)
                    factor = repl ** e
                else:
                    factor = MultiPoly.monomial(
                        self.vars, 1,
                        tuple(e if u == v else 0 for u in self.vars))
                term = term * factor
            result = result + term
        return result

    def to_polynomial(self, var: str) -> Polynomial:
        """Collapse to a univariate polynomial; every other variable must be
        absent from the surviving terms."""
        idx = self.vars.index(var)
        coeffs: Dict[int, Fraction] = {}
        for exps, c in self.terms.items():
            if any(e != 0 for i, e in enumerate(exps) if i != idx):
                raise ValueError(f"term {exps} still involves other variables")
            coeffs[exps[idx]] = c
        n = max(coeffs, default=-1)
        return Polynomial(var, [coeffs.get(i, Fraction(0)) for i in range(n + 1)])

    def sorted_terms(self):
        """Terms by ascending total degree, then lexicographic exponents."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = [f"{v}^{e}" if e > 1 else v
                       for v, e in zip(self.vars, exps) if e > 0]
            if not factors:
                parts.append(format_rational(c))
            else:
                parts.append(_coeff_prefix(c, "*".join(factors)))
        return _join_terms(parts)

    def __repr__(self):
        return f"MultiPoly({self.vars!r}, {self.render()!r})"


class RationalFunction:
    """Quotient of two univariate polynomials over the rationals.

    Normal form: numerator and denominator are coprime and the denominator is
    monic (its leading coefficient is absorbed into the numerator), so equal
    values have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial = None, *, _reduced=False):
        if not isinstance(num, Polynomial):
            raise RingMismatchError("numerator must be a Polynomial")
        if den is None:
            den = Polynomial.constant(num.var, 1)
        if not isinstance(den, Polynomial):
            raise RingMismatchError("denominator must be a Polynomial")
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            g = num.gcd(den)
            if not g.is_zero() and g.degree > 0:
                num = num // g
                den = den // g
            lead = den.leading
            if lead != 1:
                num = num * (1 / lead)
                den = den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_scalar(cls, var: str, value) -> "RationalFunction":
        return cls(Polynomial.constant(var, value))

    @property
    def var(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction.from_scalar(self.var, other)
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, RationalFunction):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        # coprime stays coprime under powers and monic stays monic
        return RationalFunction(self.num ** n, self.den ** n, _reduced=True)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # cross-multiplied equality avoids any gcd work
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, point):
        """Evaluate numerator/denominator at a point.

        Exact ``Fraction`` points stay exact and raise :class:`PoleError` only
        on an exact zero denominator.  Complex/float points use Horner in
        double precision with a relative pole test.
        """
        if isinstance(point, (int, Fraction)):
            dv = self.den(Fraction(point))
            if dv == 0:
                raise PoleError(f"pole at {point}")
            return self.num(Fraction(point)) / dv
        z = complex(point)
        dv = self.den(z)
        scale = max(abs(complex(c)) for c in self.den.coeffs)
        if abs(dv) <= _POLE_RTOL * max(scale, 1.0):
            raise PoleError(f"denominator vanishes near {point}")
        return self.num(z) / dv

    def render(self) -> str:
        if self.den == 1:
            return self.num.render()
        return f"({self.num.render()}) / ({self.den.render()})"

    def __repr__(self):
        return f"RationalFunction({self.render()!r})"


# -- ring-tag surface --------------------------------------------------------

class RingTag:
    RATIONAL = "rational"
    POLYNOMIAL = "polynomial"
    MULTIPOLY = "multipoly"
    RATIONAL_FUNCTION = "rational_function"
    COMPLEX = "complex"


def ring_of(value) -> str:
    if isinstance(value, (int, Fraction)):
        return RingTag.RATIONAL
    if isinstance(value, Polynomial):
        return RingTag.POLYNOMIAL
    if isinstance(value, MultiPoly):
        return RingTag.MULTIPOLY
    if isinstance(value, RationalFunction):
        return RingTag.RATIONAL_FUNCTION
    if isinstance(value, (float, complex)):
        return RingTag.COMPLEX
    raise RingMismatchError(f"not a ring value: {type(value).__name__}")


def _check_tags(a, b):
    ta, tb = ring_of(a), ring_of(b)
    if ta != tb and RingTag.RATIONAL not in (ta, tb):
        raise RingMismatchError(f"ring mismatch: {ta} vs {tb}")


def ring_add(a, b):
    _check_tags(a, b)
    return a + b


def ring_mul(a, b):
    _check_tags(a, b)
    return a * b


def ring_neg(a):
    ring_of(a)
    return -a


def one_like(value):
    """Multiplicative unit in the ring of ``value``."""
    tag = ring_of(value)
    if tag == RingTag.RATIONAL:
        return Fraction(1)
    if tag == RingTag.POLYNOMIAL:
        return Polynomial.constant(value.var, 1)
    if tag == RingTag.MULTIPOLY:
        return MultiPoly.constant(value.vars, 1)
    if tag == RingTag.RATIONAL_FUNCTION:
        return RationalFunction.from_scalar(value.var, 1)
    return 1.0


def pochhammer(x, n: int):
    """Rising factorial x(x+1)...(x+n-1); the empty product for n = 0.

    Works in any ring that supports scalar addition.
    """
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    if isinstance(x, int):
        x = Fraction(x)
    result = one_like(x)
    for i in range(n):
        result = result * (x + i)
    return result


def poly_eval(p, at: complex) -> complex:
    """Evaluate a Polynomial or RationalFunction at a complex double point."""
    if isinstance(p, Polynomial):
        return complex(p(complex(at)))
    if isinstance(p, RationalFunction):
        return complex(p(complex(at)))
    raise RingMismatchError("poly_eval expects a Polynomial or RationalFunction")
