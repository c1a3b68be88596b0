"""Division, gcd, resultant and squarefree machinery for exact polynomials.

Resultants use the subresultant polynomial remainder sequence over the
multivariate coefficient ring, so the value agrees with the Sylvester-matrix
determinant (the test suite cross-checks small cases against an independent
minor-expansion determinant).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import ContextMismatchError
from .poly import Monomial, Polynomial, Variable


# -- exact division -----------------------------------------------------------


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Quotient f/g when the division is exact, else None.  g must be nonzero."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.context is not g.context:
        raise ContextMismatchError("polynomials from different contexts")
    if f.is_zero:
        return f.context.zero
    order = f.context.default_order()
    gm, gc = g.leading(order)
    quo_terms: dict[Monomial, Fraction] = {}
    rem = f
    while not rem.is_zero:
        rm, rc = rem.leading(order)
        if not gm.divides(rm):
            return None
        qm = rm.quotient(gm)
        qc = rc / gc
        quo_terms[qm] = qc
        rem = rem - g.term_mul(qm, qc)
    return Polynomial(f.context, quo_terms)


def divide(
    f: Polynomial, divisors, order
) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division of f by an ordered divisor list.

    Returns (quotients, remainder) with f = sum(q_i * g_i) + r and no
    monomial of r divisible by any divisor's leading monomial.  The reducer
    is always the first applicable divisor, so the result is deterministic.
    """
    ctx = f.context
    divisors = list(divisors)
    leads = []
    for g in divisors:
        if g.context is not ctx:
            raise ContextMismatchError("divisor from another context")
        leads.append(g.leading(order))
    quotients = [ctx.zero for _ in divisors]
    rem_terms: dict[Monomial, Fraction] = {}
    p = f
    while not p.is_zero:
        pm, pc = p.leading(order)
        for i, (gm, gc) in enumerate(leads):
            if gm.divides(pm):
                qm = pm.quotient(gm)
                qc = pc / gc
                quotients[i] = quotients[i] + Polynomial(ctx, {qm: qc})
                p = p - divisors[i].term_mul(qm, qc)
                break
        else:
            rem_terms[pm] = pc
            p = p - Polynomial(ctx, {pm: pc})
    return quotients, Polynomial(ctx, rem_terms)


# -- scalar normalization ------------------------------------------------------


def scalar_normalize(p: Polynomial) -> tuple[Fraction, Polynomial]:
    """Write p = c * q with q primitive over the integers and q's leading
    coefficient (context default order) positive.  Returns (c, q); (0, 0) for 0."""
    if p.is_zero:
        return Fraction(0), p
    num = 0
    den = 1
    for _, c in p.terms():
        num = int_gcd(num, c.numerator)
        den = den * c.denominator // int_gcd(den, c.denominator)
    content = Fraction(num, den)
    _, lead = p.leading(p.context.default_order())
    if lead < 0:
        content = -content
    return content, p * (1 / content)


def normalized(p: Polynomial) -> Polynomial:
    """The canonical representative of p up to a nonzero rational factor."""
    if p.is_zero:
        return p
    return scalar_normalize(p)[1]


# -- pseudo-division ------------------------------------------------------------


def pseudo_rem(f: Polynomial, g: Polynomial, v: Variable) -> Polynomial:
    """Pseudo-remainder rem(c^(d-e+1) * f, g) with respect to v.

    c is g's leading coefficient in v, d = deg_v f, e = deg_v g >= 1.
    Returns f unchanged when d < e.
    """
    if g.is_zero or g.degree_in(v) < 1:
        raise ValueError("pseudo-division needs a divisor of positive degree in v")
    if f.is_zero:
        return f
    d = f.degree_in(v)
    e = g.degree_in(v)
    if d < e:
        return f
    gc = g.coefficients_in(v)
    c = gc[-1]
    vp = f.context.poly_for(v)
    r = f
    steps = 0
    while not r.is_zero and r.degree_in(v) >= e:
        k = r.degree_in(v)
        rl = r.coefficients_in(v)[-1]
        r = c * r - rl * vp ** (k - e) * g
        steps += 1
    for _ in range(d - e + 1 - steps):
        r = c * r
    return r


def sprem(f: Polynomial, g: Polynomial, v: Variable) -> tuple[Polynomial, int]:
    """Sparse pseudo-remainder: rem(c^m * f, g) with the smallest m making
    every division step's coefficient quotient exact.  Returns (remainder, m)."""
    if g.is_zero or g.degree_in(v) < 1:
        raise ValueError("pseudo-division needs a divisor of positive degree in v")
    if f.is_zero:
        return f, 0
    d = f.degree_in(v)
    e = g.degree_in(v)
    if d < e:
        return f, 0
    gc = g.coefficients_in(v)
    c = gc[-1]
    vp = f.context.poly_for(v)
    for m in range(d - e + 2):
        r = c**m * f
        ok = True
        while not r.is_zero and r.degree_in(v) >= e:
            k = r.degree_in(v)
            rl = r.coefficients_in(v)[-1]
            q = exact_div(rl, c)
            if q is None:
                ok = False
                break
            r = r - q * vp ** (k - e) * g
        if ok:
            return r, m
    raise AssertionError("prem exponent always succeeds")  # pragma: no cover


# -- gcd and squarefree part -----------------------------------------------------


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Greatest common divisor, canonically normalized (primitive, positive lead)."""
    if f.context is not g.context:
        raise ContextMismatchError("polynomials from different contexts")
    if f.is_zero:
        return normalized(g)
    if g.is_zero:
        return normalized(f)
    fv = {v.index for v in f.variables()}
    gv = {v.index for v in g.variables()}
    if not fv and not gv:
        return f.context.one
    common = fv | gv
    v = f.context.variables[min(common)]
    fd = 0 if v.index not in fv else f.degree_in(v)
    gd = 0 if v.index not in gv else g.degree_in(v)
    if fd == 0:
        return gcd(f, _content_in(g, v))
    if gd == 0:
        return gcd(_content_in(f, v), g)
    cf = _content_in(f, v)
    cg = _content_in(g, v)
    c = gcd(cf, cg)
    a = exact_div(f, cf)
    b = exact_div(g, cg)
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while True:
        r = pseudo_rem(a, b, v)
        if r.is_zero:
            break
        if r.degree_in(v) == 0:
            return normalized(c)
        a, b = b, exact_div(r, _content_in(r, v))
    return normalized(c * b)


def _content_in(p: Polynomial, v: Variable) -> Polynomial:
    """Gcd of p's coefficient polynomials with respect to v."""
    coeffs = [c for c in p.coefficients_in(v) if not c.is_zero]
    acc = coeffs[0]
    for c in coeffs[1:]:
        acc = gcd(acc, c)
        if acc.is_constant:
            break
    return normalized(acc)


def squarefree_part(p: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of p, normalized."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no squarefree part")
    if p.is_constant:
        return p.context.one
    d = p
    for v in p.variables():
        d = gcd(d, p.derivative(v))
        if d.is_constant:
            break
    return normalized(exact_div(p, d) if not d.is_constant else p)


# -- resultants ---------------------------------------------------------------------


def resultant(f: Polynomial, g: Polynomial, v: Variable) -> Polynomial:
    """Resultant with respect to v, equal to the Sylvester determinant.

    Computed by a subresultant polynomial remainder sequence over the
    coefficient ring, tracking the determinant's sign exactly.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of a zero polynomial")
    ctx = f.context
    if g.context is not ctx:
        raise ContextMismatchError("polynomials from different contexts")
    m = f.degree_in(v)
    n = g.degree_in(v)
    if m == 0 and n == 0:
        raise ValueError("resultant needs positive degree in v")
    if m == 0:
        return f**n
    if n == 0:
        return g**m
    sign = 1
    if m < n:
        f, g, m, n = g, f, n, m
        if (m * n) % 2:
            sign = -sign
    one = ctx.one
    gpoly, h = one, one
    a, b = f, g
    da, db = m, n
    while True:
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = pseudo_rem(a, b, v)
        if r.is_zero:
            return ctx.zero
        a, da = b, db
        divisor = gpoly * h**delta
        b = exact_div(r, divisor)
        if b is None:  # pragma: no cover - algebra guarantees exactness
            raise AssertionError("subresultant division not exact")
        db = b.degree_in(v) if not b.is_zero else 0
        gpoly = a.coefficients_in(v)[-1]
        if delta:
            h = exact_div(gpoly**delta, h ** (delta - 1))
        if db == 0:
            break
    delta = da
    res = exact_div(b**delta, h ** (delta - 1))
    return res * sign if sign < 0 else res


def discriminant(p: Polynomial, v: Variable) -> Polynomial:
    """res_v(p, dp/dv) divided exactly by p's leading coefficient in v.

    No alternating-sign factor is applied; only the zero set matters downstream
    and the fixed convention keeps outputs deterministic.
    """
    if p.is_zero or p.degree_in(v) < 2:
        raise ValueError("discriminant needs degree >= 2 in v")
    dp = p.derivative(v)
    lead = p.coefficients_in(v)[-1]
    res = resultant(p, dp, v)
    q = exact_div(res, lead)
    if q is None:  # pragma: no cover - lc always divides res(p, p')
        raise AssertionError("leading coefficient does not divide res(p, p')")
    return q


def subresultant_prs(f: Polynomial, g: Polynomial, v: Variable) -> list[Polynomial]:
    """The subresultant polynomial remainder sequence starting from (f, g)."""
    if f.is_zero or g.is_zero:
        raise ValueError("PRS of a zero polynomial")
    if f.degree_in(v) < g.degree_in(v):
        f, g = g, f
    seq = [f, g]
    one = f.context.one
    gpoly, h = one, one
    a, b = f, g
    da, db = a.degree_in(v), b.degree_in(v)
    while db > 0:
        delta = da - db
        r = pseudo_rem(a, b, v)
        if r.is_zero:
            break
        a, da = b, db
        b = exact_div(r, gpoly * h**delta)
        db = b.degree_in(v) if not b.is_zero else 0
        seq.append(b)
        gpoly = a.coefficients_in(v)[-1]
        if delta:
            h = exact_div(gpoly**delta, h ** (delta - 1))
    return seq


def subresultant_lead_coefficients(
    f: Polynomial, g: Polynomial, v: Variable
) -> list[Polynomial]:
    """Leading v-coefficients of the PRS tail.

    Up to nonzero polynomial-power factors these cover the zero sets of every
    nonzero principal subresultant coefficient of (f, g), which is all the
    Collins projection consumes.
    """
    out = []
    for r in subresultant_prs(f, g, v)[1:]:
        if r.is_zero:
            continue
        out.append(r.coefficients_in(v)[-1] if r.degree_in(v) > 0 else r)
    return out
