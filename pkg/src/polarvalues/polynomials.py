"""Sparse multivariate polynomial arithmetic over an exact field.

Polynomials are immutable maps from exponent tuples to nonzero field
coefficients, tagged with a ring descriptor (variable names plus field).
Monomial comparisons go through lexicographic orders given by a variable
permutation, so elimination orders are just permuted lex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .fields import QQ

NEG_INF = -math.inf


@dataclass(frozen=True)
class PolynomialRing:
    """Ring descriptor: an ordered tuple of variable names over a field."""

    variables: tuple
    field: object = QQ

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        names = self.variables
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names: %r" % (names,))
        for name in names:
            if not name or not isinstance(name, str):
                raise ValueError("variable names must be nonempty strings")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value) -> "Polynomial":
        c = self.field(value)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def gens(self) -> tuple:
        return tuple(self.variable(v) for v in self.variables)

    def polynomial(self, terms: dict) -> "Polynomial":
        """Build a polynomial from {exponent tuple: coefficient}."""
        clean = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != self.nvars or any(
                e < 0 or not isinstance(e, int) for e in exps
            ):
                raise ValueError("bad exponent tuple %r" % (exps,))
            c = self.field(coeff)
            if c:
                clean[exps] = c
        return Polynomial(self, clean)


@dataclass(frozen=True)
class LexOrder:
    """Lexicographic monomial order reading variables in `permutation` order.

    permutation[0] is the most significant variable index.  Elimination
    orders place the variables to keep at the tail of the permutation.
    """

    permutation: tuple

    def __post_init__(self):
        object.__setattr__(self, "permutation", tuple(self.permutation))
        n = len(self.permutation)
        if sorted(self.permutation) != list(range(n)):
            raise ValueError("permutation must be a bijection on 0..n-1")

    @classmethod
    def default(cls, nvars: int) -> "LexOrder":
        return cls(tuple(range(nvars)))

    @classmethod
    def eliminating(cls, nvars: int, tail) -> "LexOrder":
        """Lex order whose least significant block is `tail` (in given order)."""
        tail = tuple(tail)
        head = [i for i in range(nvars) if i not in set(tail)]
        return cls(tuple(head) + tail)

    def key(self, exps: tuple) -> tuple:
        perm = self.permutation
        return tuple(exps[i] for i in perm)

    def greater(self, a: tuple, b: tuple) -> bool:
        return self.key(a) > self.key(b)


def monomial_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def monomial_divides(a: tuple, b: tuple) -> bool:
    """True when the monomial with exponents `a` divides the one with `b`."""
    return all(x <= y for x, y in zip(a, b))


def monomial_sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def monomial_add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """An immutable sparse polynomial attached to a PolynomialRing."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: dict):
        if any(not c for c in terms.values()):
            terms = {m: c for m, c in terms.items() if c}
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial instances are immutable")

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_value(self):
        """The coefficient of the constant monomial (field zero if absent)."""
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def total_degree(self):
        """Largest exponent sum, or -inf for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(m) for m in self.terms)

    def degree_in(self, var_index: int) -> int:
        self._check_var(var_index)
        if not self.terms:
            return NEG_INF
        return max(m[var_index] for m in self.terms)

    def support_variables(self):
        """Indices of variables that actually occur."""
        seen = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    seen.add(i)
        return seen

    def coefficient_of(self, exps: tuple):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def leading_term(self, order: LexOrder):
        """(exponents, coefficient) of the largest monomial under `order`."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: LexOrder) -> tuple:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: LexOrder):
        return self.leading_term(order)[1]

    # -- arithmetic ---------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(
            self.ring.field.zero
        ):
            try:
                return self.ring.constant(other)
            except (TypeError, ValueError):
                return None
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            if s is None:
                terms[m] = c
            else:
                s = s + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = monomial_add(ma, mb)
                c = ca * cb
                s = terms.get(m)
                if s is None:
                    if c:
                        terms[m] = c
                else:
                    s = s + c
                    if s:
                        terms[m] = s
                    else:
                        del terms[m]
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.terms == coerced.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus and substitution ------------------------------------

    def _check_var(self, var_index: int):
        if not 0 <= var_index < self.ring.nvars:
            raise ValueError("variable index %d out of range" % var_index)

    def partial_derivative(self, var_index: int) -> "Polynomial":
        self._check_var(var_index)
        terms = {}
        for m, c in self.terms.items():
            e = m[var_index]
            if e == 0:
                continue
            dm = list(m)
            dm[var_index] = e - 1
            dc = c * e
            if dc:
                terms[tuple(dm)] = dc
        return Polynomial(self.ring, terms)

    def restrict_hyperplane(self, var_index: int) -> "Polynomial":
        """Set one variable to zero and drop it from the ring."""
        self._check_var(var_index)
        new_vars = (
            self.ring.variables[:var_index] + self.ring.variables[var_index + 1 :]
        )
        new_ring = PolynomialRing(new_vars, self.ring.field)
        terms = {}
        for m, c in self.terms.items():
            if m[var_index]:
                continue
            terms[m[:var_index] + m[var_index + 1 :]] = c
        return Polynomial(new_ring, terms)

    def substitute_linear(self, matrix) -> "Polynomial":
        """Replace variable i by sum_j matrix[i][j] * x_j; matrix must be invertible."""
        ring = self.ring
        n = ring.nvars
        field = ring.field
        rows = [[field(entry) for entry in row] for row in matrix]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("matrix shape must be %d x %d" % (n, n))
        if not _invertible(rows, field):
            raise ValueError("substitution matrix is singular")
        images = []
        for i in range(n):
            terms = {}
            for j, entry in enumerate(rows[i]):
                if entry:
                    exps = [0] * n
                    exps[j] = 1
                    terms[tuple(exps)] = entry
            images.append(Polynomial(ring, terms))
        result = ring.zero()
        for m, c in self.terms.items():
            term = ring.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * images[i] ** e
            result = result + term
        return result

    def evaluate(self, point):
        """Evaluate at a sequence of field elements (or ints/Fractions)."""
        field = self.ring.field
        values = [field(v) for v in point]
        if len(values) != self.ring.nvars:
            raise ValueError("point length mismatch")
        total = field.zero
        for m, c in self.terms.items():
            v = c
            for x, e in zip(values, m):
                for _ in range(e):
                    v = v * x
            total = total + v
        return total

    # -- display ------------------------------------------------------

    def sorted_terms(self, order: LexOrder = None):
        if order is None:
            order = LexOrder.default(self.ring.nvars)
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        signed = self.ring.field.characteristic == 0
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            if signed:
                negative = c < 0
                mag = -c if negative else c
                body = _coeff_text(mag, factors)
            else:
                negative = False
                body = _coeff_text(c, factors)
            if not parts:
                parts.append("-" + body if negative else body)
            else:
                parts.append(("- " if negative else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "Polynomial(%s)" % self

    def to_text(self) -> str:
        """Canonical text form; reparsing it reproduces the polynomial."""
        return str(self)


def _coeff_text(coeff, factors) -> str:
    if not factors:
        return str(coeff)
    if coeff == 1:
        return "*".join(factors)
    return str(coeff) + "*" + "*".join(factors)


def _invertible(rows, field) -> bool:
    """Gaussian elimination rank check with exact field arithmetic."""
    n = len(rows)
    a = [list(r) for r in rows]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            return False
        a[col], a[pivot] = a[pivot], a[col]
        inv_head = field.one / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] * inv_head
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return True


def make_primitive(p: Polynomial):
    """Split a nonzero rational polynomial into content times primitive part.

    The primitive part has coprime integer coefficients and a positive
    leading coefficient under the ring's default lex order.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no primitive part")
    if p.ring.field != QQ:
        raise ValueError("make_primitive expects rational coefficients")
    denom_lcm = 1
    for c in p.terms.values():
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = {m: int(c * denom_lcm) for m, c in p.terms.items()}
    g = 0
    for v in ints.values():
        g = math.gcd(g, v)
        if g == 1:
            break
    lead = max(ints, key=LexOrder.default(p.ring.nvars).key)
    if ints[lead] < 0:
        g = -g
    content = Fraction(g, denom_lcm)
    primitive = Polynomial(
        p.ring, {m: Fraction(v // g) for m, v in ints.items()}
    )
    return content, primitive


def fresh_variable_name(taken, base: str) -> str:
    """`base` if unused, else base2, base3, ..."""
    taken = set(taken)
    if base not in taken:
        return base
    k = 2
    while "%s%d" % (base, k) in taken:
        k += 1
    return "%s%d" % (base, k)


def extend_ring(ring: PolynomialRing, name: str, front: bool = False):
    """Ring with one extra variable, appended (or prepended when front)."""
    if name in ring.variables:
        raise ValueError("variable %r already present" % name)
    if front:
        variables = (name,) + ring.variables
    else:
        variables = ring.variables + (name,)
    return PolynomialRing(variables, ring.field)


def lift_polynomial(p: Polynomial, new_ring: PolynomialRing) -> Polynomial:
    """Reinterpret p inside a ring containing all of its variables (by name)."""
    if p.ring.field != new_ring.field:
        raise ValueError("field mismatch in lift")
    positions = []
    for name in p.ring.variables:
        if name not in new_ring.variables:
            raise ValueError("target ring lacks variable %r" % name)
        positions.append(new_ring.index(name))
    terms = {}
    for m, c in p.terms.items():
        exps = [0] * new_ring.nvars
        for pos, e in zip(positions, m):
            exps[pos] = e
        terms[tuple(exps)] = c
    return Polynomial(new_ring, terms)
