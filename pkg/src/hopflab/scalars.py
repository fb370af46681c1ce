"""Exact arithmetic in the field Q(q) of rational functions in one variable q.

Everything downstream (noncommutative rewriting, action matrices, echelon
forms) runs over these scalars, so canonical form is the whole contract here:
two QRat instances are structurally equal iff they represent the same rational
function.  Numerator and denominator are polynomials in q with nonnegative
exponents and exact rational coefficients, kept coprime with monic
denominator.  Negative powers of q exist only as denominators: q^-3 is
QRat({0:1}, {3:1}).

Polynomials are plain dicts {exponent: coefficient} with no zero coefficients
and no zero-polynomial entries (the zero polynomial is the empty dict).
Coefficients are exact rationals; gmpy2.mpq is used when available, stdlib
Fraction otherwise, both with identical semantics for what we do.
"""
from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    QQ = Fraction


class DivisionByZero(ZeroDivisionError):
    pass


class RangeError(ValueError):
    pass


class PoleAtPoint(ArithmeticError):
    pass


# -- QPoly: sparse dict {exp: QQ}, exps >= 0, no zero coefficients --

def pzero():
    return {}


def pconst(c):
    c = QQ(c)
    return {0: c} if c else {}


def pmono(k, c=1):
    if k < 0:
        raise RangeError("QPoly exponents must be nonnegative")
    c = QQ(c)
    return {k: c} if c else {}


def padd(f, g):
    out = dict(f)
    for k, c in g.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pneg(f):
    return {k: -c for k, c in f.items()}


def psub(f, g):
    return padd(f, pneg(g))


def pmul(f, g):
    if not f or not g:
        return {}
    if len(f) == 1:
        (k, c), = f.items()
        return {k + j: c * d for j, d in g.items()}
    if len(g) == 1:
        (k, c), = g.items()
        return {k + j: c * d for j, d in f.items()}
    out = {}
    for k, c in f.items():
        for j, d in g.items():
            e = k + j
            s = out.get(e, 0) + c * d
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def pscale(f, c):
    if not c:
        return {}
    return {k: v * c for k, v in f.items()}


def pdeg(f):
    return max(f) if f else -1


def plc(f):
    return f[max(f)] if f else QQ(0)


def pshift(f, k):
    """Multiply by q^k; k may push exponents negative only if they stay >= 0."""
    out = {}
    for e, c in f.items():
        if e + k < 0:
            raise RangeError("negative exponent in QPoly")
        out[e + k] = c
    return out


def pdivmod(f, g):
    """Exact polynomial division over Q: returns (quo, rem)."""
    if not g:
        raise DivisionByZero("polynomial division by zero")
    quo = {}
    rem = dict(f)
    dg = pdeg(g)
    lg = plc(g)
    while rem and pdeg(rem) >= dg:
        dr = pdeg(rem)
        c = rem[dr] / lg
        quo[dr - dg] = c
        for e, d in g.items():
            k = dr - dg + e
            s = rem.get(k, 0) - c * d
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return quo, rem


def pgcd(f, g):
    """Monic gcd via the Euclidean algorithm over Q."""
    a, b = f, g
    while b:
        a, b = b, pdivmod(a, b)[1]
    if not a:
        return {}
    lc = plc(a)
    if lc != 1:
        a = {k: c / lc for k, c in a.items()}
    return a


def pvaluation(f):
    """Largest k with q^k dividing f (0 for f == 0)."""
    return min(f) if f else 0


def peval(f, q0):
    q0 = QQ(Fraction(q0))
    acc = QQ(0)
    for k, c in f.items():
        acc += c * q0 ** k
    return Fraction(int(acc.numerator), int(acc.denominator))


def ptext(f):
    """Canonical text, exponent-descending: q^3 + 2*q - 3/2."""
    if not f:
        return "0"
    parts = []
    for k in sorted(f, reverse=True):
        c = f[k]
        neg = c < 0
        ac = -c if neg else c
        if k == 0:
            body = str(ac)
        else:
            var = "q" if k == 1 else "q^%d" % k
            body = var if ac == 1 else "%s*%s" % (ac, var)
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


class QRat:
    """Canonical ratio of q-polynomials: coprime, monic denominator.

    Structural equality coincides with equality in Q(q); instances are
    immutable by convention (nothing mutates .num/.den after construction).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _raw=False):
        if den is None:
            den = {0: QQ(1)}
        if _raw:
            self.num = num
            self.den = den
            return
        if not den:
            raise DivisionByZero("zero denominator in QRat")
        if not num:
            self.num = {}
            self.den = {0: QQ(1)}
            return
        # cancel common q-power cheaply, then full gcd
        v = min(pvaluation(num), pvaluation(den))
        if v:
            num = pshift(num, -v)
            den = pshift(den, -v)
        if len(den) == 1 or len(num) == 1:
            # after the q-power cancellation a monomial side forces gcd 1
            g = None
        else:
            g = pgcd(num, den)
        if g and pdeg(g) > 0:
            num = pdivmod(num, g)[0]
            den = pdivmod(den, g)[0]
        lc = plc(den)
        if lc != 1:
            num = {k: c / lc for k, c in num.items()}
            den = {k: c / lc for k, c in den.items()}
        self.num = num
        self.den = den

    # -- constructors --

    @staticmethod
    def from_int(n):
        return QRat(pconst(n))

    @staticmethod
    def q_power(k):
        """q^k for any integer k, negative powers via the denominator."""
        if k >= 0:
            return QRat(pmono(k), None, _raw=True)
        return QRat({0: QQ(1)}, pmono(-k), _raw=True)

    # -- predicates --

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == {0: 1} and self.den == {0: 1}

    def as_q_power(self):
        """Return k if self == q^k exactly, else None."""
        if len(self.num) != 1 or len(self.den) != 1:
            return None
        (kn, cn), = self.num.items()
        (kd, cd), = self.den.items()
        if cn != 1 or cd != 1:
            return None
        return kn - kd

    # -- arithmetic --

    def __add__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return QRat(padd(self.num, other.num), self.den)
        num = padd(pmul(self.num, other.den), pmul(other.num, self.den))
        return QRat(num, pmul(self.den, other.den))

    def __neg__(self):
        return QRat(pneg(self.num), self.den, _raw=True)

    def __sub__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        return QRat(pmul(self.num, other.num), pmul(self.den, other.den))

    def inverse(self):
        if not self.num:
            raise DivisionByZero("inverse of zero in Q(q)")
        return QRat(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        acc = ONE
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(sorted(self.num.items())),
                     tuple(sorted(self.den.items()))))

    def __repr__(self):
        return "QRat(%s)" % qrat_text(self)

    def __bool__(self):
        return bool(self.num)


ZERO = QRat({}, None, _raw=True)
ONE = QRat({0: QQ(1)}, None, _raw=True)


def qrat_text(x):
    """Canonical text: num, or (num)/(den) with parens on compound parts."""
    nt = ptext(x.num)
    if x.den == {0: 1}:
        return nt
    dt = ptext(x.den)
    if len(x.num) > 1:
        nt = "(" + nt + ")"
    if len(x.den) > 1:
        dt = "(" + dt + ")"
    return nt + "/" + dt


def qint(n):
    """Balanced q-integer [n] = (q^n - q^-n)/(q - q^-1); [0]=0, [-n]=-[n]."""
    if n == 0:
        return ZERO
    if n < 0:
        return -qint(-n)
    # [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}: clear to polynomial over q^{n-1}
    num = {2 * i: QQ(1) for i in range(n)}
    return QRat(num, pmono(n - 1))


def qfact(n):
    if n < 0:
        raise RangeError("q-factorial needs n >= 0")
    acc = ONE
    for i in range(1, n + 1):
        acc = acc * qint(i)
    return acc


def qbinom(m, n):
    """Balanced q-binomial [m choose n] via the q-factorial formula."""
    if n < 0 or m < 0 or n > m:
        raise RangeError("qbinom needs 0 <= n <= m")
    return qfact(m) / (qfact(n) * qfact(m - n))


def qrat_eval(x, q0):
    """Evaluate at a rational point q0; exact Fraction out.

    Raises PoleAtPoint when the canonical denominator vanishes at q0.
    Used as a probabilistic pre-filter only; equality claims are always
    certified structurally.
    """
    q0 = Fraction(q0)
    dv = peval(x.den, q0)
    if dv == 0:
        raise PoleAtPoint("denominator vanishes at q = %s" % q0)
    return peval(x.num, q0) / dv
