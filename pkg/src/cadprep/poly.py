"""Exact multivariate polynomial arithmetic over the rationals.

Variables live in a :class:`VariableContext`; a polynomial maps exponent
vectors to nonzero ``Fraction`` coefficients.  The representation is
canonical (no zero coefficients, exponent vectors aligned to the context),
so structural equality is mathematical equality.  All values are immutable
after construction and every operation is pure.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import ContextMismatchError

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

Rational = Union[int, Fraction]


class Variable:
    """A named slot of a :class:`VariableContext`.

    Variables compare by identity; the owning context creates each one
    exactly once, so identity agrees with (context, index) equality.
    """

    __slots__ = ("name", "index", "context")

    def __init__(self, name: str, index: int, context: "VariableContext"):
        self.name = name
        self.index = index
        self.context = context

    def __repr__(self) -> str:
        return self.name


class VariableContext:
    """An ordered collection of distinct variables."""

    __slots__ = ("variables", "_by_name", "_zero", "_one")

    def __init__(self, *names: str):
        if not names:
            raise ValueError("a variable context needs at least one variable")
        seen = set()
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name {name!r}")
            seen.add(name)
        self.variables = tuple(Variable(n, i, self) for i, n in enumerate(names))
        self._by_name = {v.name: v for v in self.variables}
        self._zero = None
        self._one = None

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def variable(self, name: str) -> Variable:
        try:
            return self._by_name[name]
        except KeyError:
            raise ContextMismatchError(f"unknown variable {name!r}") from None

    @property
    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.poly_for(v) for v in self.variables)

    def poly_for(self, v: Variable) -> "Polynomial":
        if v.context is not self:
            raise ContextMismatchError(f"variable {v.name} belongs to another context")
        exps = [0] * self.nvars
        exps[v.index] = 1
        return Polynomial(self, {Monomial(exps): Fraction(1)})

    @property
    def zero(self) -> "Polynomial":
        if self._zero is None:
            self._zero = Polynomial(self, {})
        return self._zero

    @property
    def one(self) -> "Polynomial":
        if self._one is None:
            self._one = self.constant(1)
        return self._one

    def constant(self, value: Rational) -> "Polynomial":
        c = Fraction(value)
        if not c:
            return self.zero
        return Polynomial(self, {Monomial([0] * self.nvars): c})

    def default_order(self) -> "MonomialOrder":
        return MonomialOrder(self, self.variables)

    def order(self, *names_or_vars: Union[str, Variable]) -> "MonomialOrder":
        precedence = tuple(
            v if isinstance(v, Variable) else self.variable(v) for v in names_or_vars
        )
        return MonomialOrder(self, precedence)

    def __repr__(self) -> str:
        return "VariableContext(%s)" % ", ".join(v.name for v in self.variables)


class Monomial(tuple):
    """Exponent vector aligned to a context's variable list."""

    __slots__ = ()

    def degree(self) -> int:
        return sum(self)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self, other))

    def quotient(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other!r} does not divide {self!r}")
        return Monomial(a - b for a, b in zip(self, other))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self, other))


class MonomialOrder:
    """A purely lexicographical order given by an explicit precedence list.

    ``precedence[0]`` is the highest variable (the one eliminated first by
    projection); comparison reads exponent vectors in precedence order.
    """

    __slots__ = ("context", "precedence", "_perm")

    def __init__(self, context: VariableContext, precedence: Sequence[Variable]):
        precedence = tuple(precedence)
        for v in precedence:
            if v.context is not context:
                raise ContextMismatchError(
                    f"variable {v.name} belongs to another context"
                )
        if sorted(v.index for v in precedence) != list(range(context.nvars)):
            raise ValueError("precedence must be a permutation of the context variables")
        self.context = context
        self.precedence = precedence
        self._perm = tuple(v.index for v in precedence)

    def key(self, m: Monomial) -> tuple:
        return tuple(m[i] for i in self._perm)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    def reversed(self) -> "MonomialOrder":
        return MonomialOrder(self.context, tuple(reversed(self.precedence)))

    @property
    def main_variable(self) -> Variable:
        return self.precedence[0]

    def spec_string(self) -> str:
        return ">".join(v.name for v in self.precedence)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialOrder)
            and self.context is other.context
            and self._perm == other._perm
        )

    def __hash__(self) -> int:
        return hash((id(self.context), self._perm))

    def __repr__(self) -> str:
        return f"MonomialOrder({self.spec_string()})"


def compare_monomials(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Three-way lexicographic comparison: -1, 0 or +1."""
    n = order.context.nvars
    if len(a) != n or len(b) != n:
        raise ContextMismatchError("monomial does not match the order's context")
    return order.compare(a, b)


class Polynomial:
    """Immutable multivariate polynomial with exact rational coefficients."""

    __slots__ = ("context", "_terms", "_hash")

    def __init__(self, context: VariableContext, terms: Mapping[Monomial, Rational]):
        cleaned: dict[Monomial, Fraction] = {}
        n = context.nvars
        for m, c in terms.items():
            c = Fraction(c)
            if not c:
                continue
            if len(m) != n:
                raise ContextMismatchError("exponent vector does not match context")
            cleaned[m if type(m) is Monomial else Monomial(m)] = c
        self.context = context
        self._terms = cleaned
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_terms(
        cls, context: VariableContext, terms: Mapping[Sequence[int], Rational]
    ) -> "Polynomial":
        return cls(context, {Monomial(m): c for m, c in terms.items()})

    @classmethod
    def from_coefficients(
        cls, v: Variable, coeffs: Sequence[Union["Polynomial", Rational]]
    ) -> "Polynomial":
        """Assemble ``sum(coeffs[i] * v**i)``; coefficients may not contain v."""
        ctx = v.context
        acc = ctx.zero
        vp = ctx.poly_for(v)
        power = ctx.one
        for c in coeffs:
            if not isinstance(c, Polynomial):
                c = ctx.constant(c)
            acc = acc + c * power
            power = power * vp
        return acc

    # -- basic structure -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_constant(self) -> bool:
        return all(m.degree() == 0 for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return next(iter(self._terms.values()))

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def variables(self) -> tuple[Variable, ...]:
        """Variables occurring with positive exponent, by context index."""
        present = set()
        for m in self._terms:
            for i, e in enumerate(m):
                if e:
                    present.add(i)
        return tuple(self.context.variables[i] for i in sorted(present))

    # -- equality / hashing ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.context is other.context and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == self.context.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((id(self.context), frozenset(self._terms.items())))
        return self._hash

    def canonical_key(self) -> tuple:
        """Deterministic sort key: term list sorted by exponent vector."""
        return tuple(sorted((tuple(m), (c.numerator, c.denominator)) for m, c in self._terms.items()))

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.context is not self.context:
                raise ContextMismatchError("polynomials from different contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.context.constant(other)
        return None

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            elif m in terms:
                del terms[m]
        return Polynomial(self.context, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.context, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.context.zero
            return Polynomial(self.context, {m: k * c for m, k in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1.times(m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                elif m in terms:
                    del terms[m]
        return Polynomial(self.context, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.context.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def term_mul(self, m: Monomial, c: Fraction) -> "Polynomial":
        """Multiply by the single term ``c * m``."""
        if not c:
            return self.context.zero
        return Polynomial(
            self.context, {k.times(m): v * c for k, v in self._terms.items()}
        )

    # -- degrees and counts ------------------------------------------------------

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no total degree")
        return max(m.degree() for m in self._terms)

    def sotd(self) -> int:
        """Sum of total degrees over all monomials; 0 for the zero polynomial."""
        return sum(m.degree() for m in self._terms)

    def noi(self) -> int:
        """Number of distinct indeterminates present."""
        return len(self.variables())

    def degree_in(self, v: Variable) -> int:
        if v.context is not self.context:
            raise ContextMismatchError(f"variable {v.name} belongs to another context")
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(m[v.index] for m in self._terms)

    # -- leading data --------------------------------------------------------------

    def leading(self, order: MonomialOrder) -> tuple[Monomial, Fraction]:
        """The order-maximal monomial with its coefficient."""
        if order.context is not self.context:
            raise ContextMismatchError("order belongs to another context")
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, c = self.leading(order)
        return self * (Fraction(1) / c)

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- calculus / evaluation --------------------------------------------------------

    def derivative(self, v: Variable) -> "Polynomial":
        if v.context is not self.context:
            raise ContextMismatchError(f"variable {v.name} belongs to another context")
        i = v.index
        terms: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                exps = list(m)
                exps[i] = e - 1
                terms[Monomial(exps)] = c * e
        return Polynomial(self.context, terms)

    def substitute(self, bindings: Mapping[Variable, Rational]) -> "Polynomial":
        """Exact partial evaluation; unbound variables stay untouched."""
        if not bindings:
            return self
        values = {}
        for v, q in bindings.items():
            if v.context is not self.context:
                raise ContextMismatchError(
                    f"variable {v.name} belongs to another context"
                )
            values[v.index] = Fraction(q)
        terms: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            exps = list(m)
            for i, q in values.items():
                e = exps[i]
                if e:
                    c = c * q**e
                    exps[i] = 0
            if not c:
                continue
            key = Monomial(exps)
            s = terms.get(key, 0) + c
            if s:
                terms[key] = s
            elif key in terms:
                del terms[key]
        return Polynomial(self.context, terms)

    def coefficients_in(self, v: Variable) -> list["Polynomial"]:
        """Dense coefficient list with respect to v, low power first.

        Returns [] for the zero polynomial.  Entries are polynomials free of v.
        """
        if v.context is not self.context:
            raise ContextMismatchError(f"variable {v.name} belongs to another context")
        if not self._terms:
            return []
        i = v.index
        d = max(m[i] for m in self._terms)
        buckets: list[dict[Monomial, Fraction]] = [dict() for _ in range(d + 1)]
        for m, c in self._terms.items():
            exps = list(m)
            e = exps[i]
            exps[i] = 0
            buckets[e][Monomial(exps)] = c
        return [Polynomial(self.context, b) for b in buckets]

    # -- formatting ---------------------------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)})"


def format_polynomial(p: Polynomial, order: MonomialOrder | None = None) -> str:
    """Canonical text form; parseable by :func:`cadprep.parse.parse_polynomial`."""
    if p.is_zero:
        return "0"
    if order is None:
        order = p.context.default_order()
    parts: list[str] = []
    for m, c in p.sorted_terms(order):
        factors = [
            v.name if m[v.index] == 1 else f"{v.name}^{m[v.index]}"
            for v in order.precedence
            if m[v.index]
        ]
        mag = abs(c)
        if not factors:
            body = _format_fraction(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_fraction(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
