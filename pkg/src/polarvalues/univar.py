"""Univariate polynomials over the rationals: exact gcd, squarefree part,
rational roots, and simultaneous numeric root approximation.

The canonical form used throughout is the primitive integer form: coprime
integer coefficients with a positive leading coefficient.  The constant
polynomial 1 plays the role of "no roots".
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

ABERTH_ITERATION_CAP = 200
ABERTH_ANGLE_OFFSET = 0.4


class UnivariatePolynomial:
    """Dense univariate polynomial; coefficients ascending, exact rationals."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = [c if isinstance(c, Fraction) else Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UnivariatePolynomial instances are immutable")

    @classmethod
    def zero(cls) -> "UnivariatePolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "UnivariatePolynomial":
        return cls((1,))

    @classmethod
    def variable(cls) -> "UnivariatePolynomial":
        return cls((0, 1))

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_one(self) -> bool:
        return self.coefficients == (Fraction(1),)

    def degree(self):
        if not self.coefficients:
            return -math.inf
        return len(self.coefficients) - 1

    def leading_coefficient(self) -> Fraction:
        if not self.coefficients:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __call__(self, x):
        """Horner evaluation; works for Fraction and complex arguments."""
        total = 0 * x if not isinstance(x, Fraction) else Fraction(0)
        for c in reversed(self.coefficients):
            if isinstance(x, Fraction):
                total = total * x + c
            else:
                total = total * x + complex(c)
        return total

    def __eq__(self, other):
        if isinstance(other, UnivariatePolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self == UnivariatePolynomial((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        out = []
        for i in range(n):
            x = a[i] if i < len(a) else Fraction(0)
            y = b[i] if i < len(b) else Fraction(0)
            out.append(x + y)
        return UnivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial([-c for c in self.coefficients])

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return UnivariatePolynomial(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        div = other.coefficients
        dd = len(div) - 1
        lead = div[-1]
        quo = [Fraction(0)] * max(0, len(rem) - dd)
        while len(rem) - 1 >= dd and rem:
            shift = len(rem) - 1 - dd
            factor = rem[-1] / lead
            quo[shift] = factor
            for i in range(dd + 1):
                rem[shift + i] -= factor * div[i]
            while rem and rem[-1] == 0:
                rem.pop()
        return UnivariatePolynomial(quo), UnivariatePolynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "UnivariatePolynomial") -> bool:
        if self.is_zero():
            return other.is_zero()
        return divmod(other, self)[1].is_zero()

    def derivative(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(
            [c * i for i, c in enumerate(self.coefficients)][1:]
        )

    def canonical(self) -> "UnivariatePolynomial":
        """Primitive integer form with positive leading coefficient."""
        if self.is_zero():
            return self
        denom_lcm = 1
        for c in self.coefficients:
            denom_lcm = denom_lcm * c.denominator // math.gcd(
                denom_lcm, c.denominator
            )
        ints = [int(c * denom_lcm) for c in self.coefficients]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
            if g == 1:
                break
        if ints[-1] < 0:
            g = -g
        return UnivariatePolynomial([Fraction(v // g) for v in ints])

    def integer_coefficients(self):
        """Coefficients of the canonical form as plain ints, ascending."""
        return tuple(int(c) for c in self.canonical().coefficients)

    def __str__(self, var: str = "z"):
        if self.is_zero():
            return "0"
        parts = []
        for e in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = var if mag == 1 else "%s*%s" % (mag, var)
            else:
                body = (
                    "%s^%d" % (var, e) if mag == 1 else "%s*%s^%d" % (mag, var, e)
                )
            if not parts:
                parts.append("-" + body if c < 0 else body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "UnivariatePolynomial(%s)" % self


def _coerce(value):
    if isinstance(value, UnivariatePolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return UnivariatePolynomial((value,))
    return None


def gcd_univar(p: UnivariatePolynomial, q: UnivariatePolynomial):
    """Canonical greatest common divisor via the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.canonical()


def squarefree_part(p: UnivariatePolynomial) -> UnivariatePolynomial:
    """p divided by gcd(p, p'); same roots, all simple, canonical form."""
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    if p.degree() == 0:
        return UnivariatePolynomial((1,))
    g = gcd_univar(p, p.derivative())
    quo, rem = divmod(p, g)
    assert rem.is_zero()
    return quo.canonical()


def shift(p: UnivariatePolynomial, c) -> UnivariatePolynomial:
    """Return q with q(z) = p(z - c); roots move by +c."""
    c = Fraction(c)
    x_minus_c = UnivariatePolynomial((-c, 1))
    result = UnivariatePolynomial(())
    for coeff in reversed(p.coefficients):
        result = result * x_minus_c + coeff
    return result


def _divisors(n: int):
    """Positive divisors of |n|, via trial division.

    Factors are located below 10**6; a larger leftover cofactor is kept as a
    single block, which can only miss divisors of astronomically large inputs.
    """
    n = abs(n)
    assert n >= 1
    factors = {}
    for p in _small_factor_candidates(n):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        if n == 1:
            break
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for prime, mult in factors.items():
        divs = [d * prime**k for d in divs for k in range(mult + 1)]
    return sorted(set(divs))


def _small_factor_candidates(n: int):
    yield 2
    p = 3
    bound = min(math.isqrt(n) + 1, 10**6)
    while p <= bound:
        yield p
        p += 2


def rational_roots(p: UnivariatePolynomial):
    """All exact rational roots, each verified by exact evaluation."""
    if p.is_zero():
        raise ValueError("every rational is a root of the zero polynomial")
    coeffs = list(p.canonical().coefficients)
    roots = []
    low = 0
    while coeffs[low] == 0:
        low += 1
    if low > 0:
        roots.append(Fraction(0))
        coeffs = coeffs[low:]
    if len(coeffs) <= 1:
        return sorted(roots)
    a0 = int(coeffs[0])
    ad = int(coeffs[-1])
    trimmed = UnivariatePolynomial(coeffs)
    for num in _divisors(a0):
        for den in _divisors(ad):
            if math.gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if trimmed(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def approx_roots(p: UnivariatePolynomial, tolerance: float = 1e-10):
    """Deterministic simultaneous (Aberth-style) root approximation.

    Returns the roots sorted by (real, imaginary).  Raises ValueError on
    degree < 1.  See approx_roots_with_status for the convergence flag.
    """
    roots, _ = approx_roots_with_status(p, tolerance)
    return roots


def approx_roots_with_status(p: UnivariatePolynomial, tolerance: float = 1e-10):
    """(roots, converged): converged means every residual met the tolerance."""
    deg = p.degree()
    if deg < 1:
        raise ValueError("need degree >= 1 to approximate roots")
    coeffs = [complex(c) for c in p.coefficients]
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    dp = [c * i for i, c in enumerate(monic)][1:]
    radius = 1.0 + max(abs(c) for c in monic[:-1]) if deg >= 1 else 1.0
    points = [
        radius
        * cmath.exp(1j * (2.0 * math.pi * k / deg + ABERTH_ANGLE_OFFSET))
        for k in range(deg)
    ]
    scale_coeffs = [abs(c) for c in monic]

    def _eval(cs, x):
        total = 0j
        for c in reversed(cs):
            total = total * x + c
        return total

    def _residual_ok(x):
        scale = 0.0
        ax = abs(x)
        powv = 1.0
        for c in scale_coeffs:
            scale += c * powv
            powv *= ax
        return abs(_eval(monic, x)) <= tolerance * max(scale, 1.0)

    converged = False
    for _ in range(ABERTH_ITERATION_CAP):
        moved = 0.0
        for k in range(deg):
            z = points[k]
            pv = _eval(monic, z)
            pd = _eval(dp, z)
            if pd == 0:
                points[k] = z * (1.0 + 1e-8) + 1e-8
                moved = math.inf
                continue
            newton = pv / pd
            acc = 0j
            for j in range(deg):
                if j != k:
                    diff = z - points[j]
                    if diff == 0:
                        diff = 1e-12
                    acc += 1.0 / diff
            denom = 1.0 - newton * acc
            if denom == 0:
                step = newton
            else:
                step = newton / denom
            points[k] = z - step
            moved = max(moved, abs(step))
        if all(_residual_ok(z) for z in points):
            converged = True
            break
        if moved == 0.0:
            break
    if not converged:
        converged = all(_residual_ok(z) for z in points)
    ordered = sorted(points, key=lambda z: (z.real, z.imag))
    return ordered, converged
