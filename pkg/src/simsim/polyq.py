"""Exact polynomials in the symbol q, and the closed-form rational
generating functions for the tuple-class counts at n = 2, 3, 4.

Coefficients are Fractions internally because the 4x4 branching data
genuinely contains halved entries like (q^2 - q)/2; every final count is
asserted back into Z[q].
"""

from fractions import Fraction
import re


class PolyQ:
    """Polynomial in q with exact rational coefficients (dict exp -> coeff)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        out = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    out[int(e)] = c
        self.coeffs = out

    @staticmethod
    def const(c):
        return PolyQ({0: c})

    @staticmethod
    def q(power=1, coeff=1):
        return PolyQ({power: coeff})

    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyQ.const(other)
        return isinstance(other, PolyQ) and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = PolyQ.const(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return PolyQ(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyQ({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = PolyQ.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyQ({e: c * other for e, c in self.coeffs.items()})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = PolyQ.const(1)
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other):
        if not other:
            raise ZeroDivisionError("PolyQ division by zero")
        rem = dict(self.coeffs)
        quot = {}
        dlead = other.degree()
        clead = other.coeffs[dlead]
        while rem:
            d = max(rem)
            if d < dlead:
                break
            f = rem[d] / clead
            quot[d - dlead] = quot.get(d - dlead, Fraction(0)) + f
            for e, c in other.coeffs.items():
                ne = e + d - dlead
                v = rem.get(ne, Fraction(0)) - f * c
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return PolyQ(quot), PolyQ(rem)

    def exact_div(self, other):
        quot, rem = self.divmod(other)
        if rem:
            raise ValueError("inexact polynomial division: %s by %s" % (self, other))
        return quot

    def eval_at(self, q0):
        """Exact (big-integer/Fraction) value at q = q0."""
        acc = Fraction(0)
        for e, c in self.coeffs.items():
            acc += c * Fraction(q0) ** e
        if acc.denominator == 1:
            return int(acc)
        return acc

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs.values())

    def is_nonneg(self):
        return all(c > 0 for c in self.coeffs.values())

    def coeff(self, e):
        return self.coeffs.get(e, Fraction(0))

    def render(self):
        """Canonical text form: descending powers, e.g. 'q^4 + 2*q^2 + 1'."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if c.denominator != 1:
                raise ValueError("render requires integer coefficients, got %s" % c)
            mag = abs(c.numerator)
            if e == 0:
                term = str(mag)
            else:
                v = "q" if e == 1 else "q^%d" % e
                term = v if mag == 1 else "%d*%s" % (mag, v)
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    __str__ = render

    def __repr__(self):
        try:
            return "PolyQ(%s)" % self.render()
        except ValueError:
            return "PolyQ(%r)" % (self.coeffs,)


_TERM_RE = re.compile(
    r"^\s*([+-]?)\s*(?:(\d+)\s*\*\s*)?(?:q(?:\^(\d+))?|(\d+))\s*")


def parse_polyq(text):
    """Parse the canonical rendering back into a PolyQ."""
    text = text.strip()
    if text == "0":
        return PolyQ()
    pos = 0
    out = PolyQ()
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text[pos:])
        if not m:
            raise ValueError("cannot parse polynomial at: %r" % text[pos:])
        sign, coeff, power, lone = m.groups()
        if not first and sign == "":
            raise ValueError("missing +/- between terms in %r" % text)
        s = -1 if sign == "-" else 1
        if lone is not None:
            out = out + PolyQ.const(s * int(lone))
        else:
            c = s * (int(coeff) if coeff else 1)
            e = int(power) if power else 1
            out = out + PolyQ.q(e, c)
        pos += m.end()
        first = False
    return out


def eval_at(f, q0):
    return f.eval_at(q0)


class RatQ:
    """A quotient of PolyQ values; just enough arithmetic for the rcf
    probability averaging.  Not reduced; equality is cross-multiplied."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = PolyQ.const(num)
        if den is None:
            den = PolyQ.const(1)
        if isinstance(den, int):
            den = PolyQ.const(den)
        if not den:
            raise ZeroDivisionError("RatQ with zero denominator")
        self.num = num
        self.den = den

    def __add__(self, other):
        if isinstance(other, (int, PolyQ)):
            other = RatQ(other)
        return RatQ(self.num * other.den + other.num * self.den,
                    self.den * other.den)

    def __mul__(self, other):
        if isinstance(other, (int, PolyQ)):
            other = RatQ(other)
        return RatQ(self.num * other.num, self.den * other.den)

    def __eq__(self, other):
        if isinstance(other, (int, PolyQ)):
            other = RatQ(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatQ is not hashable")

    def as_polyq(self):
        return self.num.exact_div(self.den)

    def __repr__(self):
        return "RatQ((%r)/(%r))" % (self.num, self.den)


class RationalGF:
    """Rational generating function: numerator a polynomial in t with PolyQ
    coefficients, denominator a product of factors (1 - q^a t)."""

    def __init__(self, numerator, denominator_powers):
        self.numerator = {int(e): p for e, p in numerator.items() if p}
        self.denominator_powers = tuple(denominator_powers)

    def denominator_series(self, kmax):
        """Coefficients of prod 1/(1 - q^a t) up to t^kmax."""
        series = [PolyQ.const(1)] + [PolyQ() for _ in range(kmax)]
        for a in self.denominator_powers:
            # multiply by 1/(1 - q^a t): s'_k = s_k + q^a s'_{k-1}
            for k in range(1, kmax + 1):
                series[k] = series[k] + PolyQ.q(a) * series[k - 1]
        return series

    def series(self, kmax):
        den = self.denominator_series(kmax)
        out = [PolyQ() for _ in range(kmax + 1)]
        for e, p in self.numerator.items():
            for k in range(e, kmax + 1):
                out[k] = out[k] + p * den[k - e]
        return out


def closed_form(n):
    """The tabulated generating function for c_{n,k}, n in {2, 3, 4}."""
    if n == 2:
        return RationalGF({0: PolyQ.const(1)}, (1, 2))
    if n == 3:
        return RationalGF({0: PolyQ.const(1), 2: PolyQ.q(2)}, (1, 2, 3))
    if n == 4:
        r_plus = {
            0: PolyQ.const(1),
            1: PolyQ.q(2),
            2: PolyQ.q(2, 2) + PolyQ.q(3) + PolyQ.q(4, 2),
            3: PolyQ.q(6),
        }
        r_minus = {
            1: PolyQ.q(5),
            2: PolyQ.q(7),
            3: PolyQ.q(3) + PolyQ.q(7, 2) + PolyQ.q(9, 2),
            4: PolyQ.q(10),
        }
        num = {e: r_plus.get(e, PolyQ()) - r_minus.get(e, PolyQ())
               for e in set(r_plus) | set(r_minus)}
        return RationalGF(num, (1, 2, 3, 4, 5))
    raise ValueError("closed_form: n must be 2, 3 or 4, got %r" % (n,))


class ClosedFormReport:
    def __init__(self, n, kmax, ok, first_discrepancy=None):
        self.n = n
        self.kmax = kmax
        self.ok = ok
        self.first_discrepancy = first_discrepancy

    def __repr__(self):
        if self.ok:
            return "ClosedFormReport(n=%d, kmax=%d, verified)" % (self.n, self.kmax)
        return ("ClosedFormReport(n=%d, kmax=%d, FAILED at %r)"
                % (self.n, self.kmax, self.first_discrepancy))


def verify_closed_form(n, kmax):
    """Check that the branching series times the tabulated denominator
    reproduces the tabulated numerator, coefficient by coefficient in t."""
    from .branching import count

    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    gf = closed_form(n)
    series = [PolyQ.const(1)] + [count(n, k) for k in range(1, kmax + 1)]
    # multiply the series by each factor (1 - q^a t)
    prod = list(series)
    for a in gf.denominator_powers:
        nxt = [prod[0]]
        for k in range(1, kmax + 1):
            nxt.append(prod[k] - PolyQ.q(a) * prod[k - 1])
        prod = nxt
    for k in range(kmax + 1):
        expect = gf.numerator.get(k, PolyQ())
        if prod[k] != expect:
            return ClosedFormReport(n, kmax, False,
                                    (k, prod[k], expect))
    return ClosedFormReport(n, kmax, True)
