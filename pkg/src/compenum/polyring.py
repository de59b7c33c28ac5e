"""Exact arithmetic on integer polynomials and rational generating functions.

Coefficients are plain Python integers indexed by exponent, so everything
here is arbitrary precision and exact.  Rational functions are stored as
numerator/denominator pairs whose denominator has constant term 1, which
is the shape every composition generating function takes and guarantees
the power series expansion is well defined.

GCDs are computed with the primitive-part Euclidean algorithm:
pseudo-remainders keep intermediate results inside the integers, and
Gauss's lemma makes the final cancellation divisions exact.  Degrees in
this project stay small (tens, not thousands), so no asymptotically
clever multiplication is needed.
"""

from __future__ import annotations

import math
from fractions import Fraction


class IntPolynomial:
    """Dense integer polynomial, immutable value type.

    ``coeffs`` is the trimmed coefficient tuple with coeffs[i] the
    coefficient of x^i.  The zero polynomial has an empty tuple and
    degree -1 (the conventional stand-in for "minus infinity": every
    comparison the algorithms below make does the right thing with it).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * exponent + (coefficient,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate by Horner's rule; works for ints, Fractions, mpmath values."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def __repr__(self):
        return f"IntPolynomial({self.coeffs!r})"

    def __str__(self):
        """Ascending-power display: ``1 - x^2 - 2*x^3``."""
        if not self.coeffs:
            return "0"
        pieces = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{e}" if mag == 1 else f"{mag}*x^{e}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def content(p):
    """GCD of the coefficients (0 for the zero polynomial)."""
    return math.gcd(*p.coeffs) if p else 0


def primitive_part(p):
    """p divided by its content, sign-fixed to a positive leading coefficient."""
    if not p:
        return p
    c = content(p)
    if p.coeffs[-1] < 0:
        c = -c
    return IntPolynomial(a // c for a in p.coeffs)


def _pseudo_rem(a, b):
    # classic pseudo-remainder: scale by the leading coefficient of b at
    # every step so division never leaves the integers
    db = b.degree
    lead = b.coeffs[-1]
    r = a
    while r.degree >= db:
        shift = r.degree - db
        r = r * lead - IntPolynomial.monomial(shift, r.coeffs[-1]) * b
    return r


def poly_gcd(p, q):
    """Primitive GCD over the integers, positive leading coefficient.

    Returns the zero polynomial only when both inputs are zero; a
    nonzero constant gcd comes back as the constant 1.
    """
    a, b = primitive_part(p), primitive_part(q)
    while b:
        a, b = b, primitive_part(_pseudo_rem(a, b))
    return a


def exact_div(p, d):
    """Quotient p/d when the division is exact over Z; ValueError otherwise."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return IntPolynomial()
    dd = d.degree
    if p.degree < dd:
        raise ValueError("not an exact polynomial multiple")
    lead = d.coeffs[-1]
    rem = list(p.coeffs)
    quot = [0] * (p.degree - dd + 1)
    for i in range(p.degree - dd, -1, -1):
        c = rem[i + dd]
        if c % lead:
            raise ValueError("not an exact polynomial multiple")
        qi = c // lead
        quot[i] = qi
        if qi:
            for j, bc in enumerate(d.coeffs):
                rem[i + j] -= qi * bc
    if any(rem):
        raise ValueError("not an exact polynomial multiple")
    return IntPolynomial(quot)


def divmod_fractions(p, d):
    """(quotient, remainder) of p/d over the rationals.

    Both are returned as tuples of Fraction, index = exponent, trimmed.
    Used for the polynomial part of partial fractions, where the
    quotient is typically the constant 1/2 and not an integer.
    """
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    dd = d.degree
    lead = Fraction(d.coeffs[-1])
    rem = [Fraction(c) for c in p.coeffs]
    if p.degree < dd:
        return (), tuple(rem)
    quot = [Fraction(0)] * (p.degree - dd + 1)
    for i in range(p.degree - dd, -1, -1):
        qi = rem[i + dd] / lead
        quot[i] = qi
        if qi:
            for j, bc in enumerate(d.coeffs):
                rem[i + j] -= qi * bc
    while rem and rem[-1] == 0:
        rem.pop()
    while quot and quot[-1] == 0:
        quot.pop()
    return tuple(quot), tuple(rem)


class RationalGF:
    """Ratio of integer polynomials with denominator constant term 1.

    The constant-term condition makes the series expansion a simple
    convolution recurrence: with den = 1 - sum d_i x^i,

        c_n = num_n + sum_{i>=1} d_i c_{n-i}.

    ``reduce`` is not applied automatically; construction stays literal
    to whatever form the caller built (callers that need coprimality,
    like the closed-form machinery, reduce explicitly).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if isinstance(num, int):
            num = IntPolynomial((num,))
        if isinstance(den, int):
            den = IntPolynomial((den,))
        if den[0] != 1:
            raise ValueError("denominator constant term must be exactly 1")
        self.num = num
        self.den = den

    def reduce(self):
        """Cancel the polynomial GCD; the series expansion is unchanged.

        den(0) = 1 forces the denominator to be primitive, so by Gauss's
        lemma both cancellation divisions are exact over the integers.
        The cofactor constant terms multiply to 1, hence are both +1 or
        both -1; the latter case is renormalized by negating both parts.
        """
        g = poly_gcd(self.num, self.den)
        if g.degree < 1:
            return self
        num = exact_div(self.num, g)
        den = exact_div(self.den, g)
        if den[0] == -1:
            num, den = -num, -den
        return RationalGF(num, den)

    def series(self, order):
        """Truncated expansion c_0..c_order (a tuple of length order+1)."""
        if order < 0:
            raise ValueError("order must be nonnegative")
        num, den = self.num, self.den
        k = den.degree
        out = []
        for n in range(order + 1):
            c = num[n]
            for i in range(1, min(n, k) + 1):
                c -= den[i] * out[n - i]
            out.append(c)
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        # equality as rational functions, not as representations
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        g = self.reduce()
        return hash((g.num.coeffs, g.den.coeffs))

    def __repr__(self):
        return f"RationalGF({self.num!r}, {self.den!r})"

    def __str__(self):
        return f"({self.num}) / ({self.den})"
