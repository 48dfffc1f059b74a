"""Exact univariate polynomials and rational functions over any field.

The code is generic over a small coefficient-field protocol: the field
object provides ``zero()``, ``one()`` and ``from_int(n)``, and its elements
carry arithmetic through operator overloading (exact, no floats).  Rational
functions are always held in canonical form: numerator and denominator
coprime, denominator monic.  Equality is therefore syntactic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd

from .errors import StructuralError


class _Pole:
    """Value of a reduced rational function at a zero of its denominator."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Pole"

    def __bool__(self):
        return False


POLE = _Pole()


class Polynomial:
    """Dense univariate polynomial; trailing zeros trimmed."""

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field, coeffs, var="x"):
        zero = field.zero()
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)
        self.var = var

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, field, var="x"):
        return cls(field, (), var)

    @classmethod
    def constant(cls, field, c, var="x"):
        return cls(field, (c,), var)

    @classmethod
    def gen(cls, field, var="x"):
        return cls(field, (field.zero(), field.one()), var)

    @classmethod
    def from_dict(cls, field, d, var="x"):
        if not d:
            return cls.zero(field, var)
        n = max(d)
        zero = field.zero()
        return cls(field, [d.get(i, zero) for i in range(n + 1)], var)

    # -- structure ---------------------------------------------------

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def leading(self):
        if not self.coeffs:
            raise StructuralError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def support(self):
        zero = self.field.zero()
        return [i for i, c in enumerate(self.coeffs) if c != zero]

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("poly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(self.field, out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field, self.var)
        zero = self.field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise StructuralError("negative power of a polynomial")
        result = Polynomial.constant(self.field, self.field.one(), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c):
        return Polynomial(self.field, [a * c for a in self.coeffs], self.var)

    def __divmod__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero():
            raise StructuralError("polynomial division by zero")
        zero = self.field.zero()
        rem = list(self.coeffs)
        q = [zero] * max(0, len(rem) - len(other.coeffs) + 1)
        inv_lead = self.field.one() / other.leading()
        dn = other.degree
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if c == zero:
                continue
            factor = c * inv_lead
            q[i - dn] = factor
            for j, b in enumerate(other.coeffs):
                rem[i - dn + j] = rem[i - dn + j] - factor * b
        return (Polynomial(self.field, q, self.var),
                Polynomial(self.field, rem, self.var))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading()
        if lead == self.field.one():
            return self
        return self.scale(self.field.one() / lead)

    @staticmethod
    def gcd(a, b):
        """Monic greatest common divisor by the Euclidean algorithm.

        Each remainder is rescaled to primitive form (integer content over
        the rationals, polynomial content over rational-function
        coefficients); without that the coefficient sizes of the remainder
        sequence explode on inputs of moderate degree.
        """
        while not b.is_zero():
            a, b = b, (a % b)._primitive()
        return a.monic()

    def _primitive(self):
        if not self.coeffs:
            return self
        c0 = self.coeffs[0]
        if isinstance(c0, Fraction):
            num_gcd = 0
            den_lcm = 1
            for c in self.coeffs:
                num_gcd = _igcd(num_gcd, c.numerator)
                den_lcm = den_lcm * c.denominator // _igcd(den_lcm, c.denominator)
            if num_gcd == 0:
                return self
            return self.scale(Fraction(den_lcm, num_gcd))
        if isinstance(c0, RationalFunction):
            # clear denominators, then divide out the numerator content
            den_lcm = None
            for c in self.coeffs:
                if den_lcm is None:
                    den_lcm = c.den
                elif not c.den.is_constant():
                    den_lcm = den_lcm * (c.den // Polynomial.gcd(den_lcm, c.den))
            cleared = self
            if not den_lcm.is_constant():
                cleared = self.scale(RationalFunction(den_lcm))
            content = None
            for c in cleared.coeffs:
                if c.is_zero():
                    continue
                content = c.num if content is None else Polynomial.gcd(content, c.num)
                if content.degree == 0:
                    content = None
                    break
            if content is not None and content.degree > 0:
                cleared = cleared.scale(RationalFunction(
                    Polynomial.constant(content.field, content.field.one(),
                                        content.var), content))
            return cleared
        return self

    # -- evaluation and substitution ----------------------------------

    def evaluate(self, a):
        """Horner evaluation at a field element (or anything with the ops)."""
        if not self.coeffs:
            return self.field.zero()
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * a + c
        return acc

    def compose(self, other):
        """Substitute a polynomial for the variable."""
        if not self.coeffs:
            return Polynomial.zero(self.field, other.var)
        acc = Polynomial.constant(self.field, self.coeffs[-1], other.var)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * other + Polynomial.constant(self.field, c, other.var)
        return acc

    def map_coeffs(self, fn, new_field=None):
        return Polynomial(new_field or self.field,
                          [fn(c) for c in self.coeffs], self.var)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.field, self.field.from_int(other), self.var)
        try:
            return Polynomial.constant(self.field, self.field.zero() + other, self.var)
        except TypeError:
            return NotImplemented

    # -- printing ------------------------------------------------------

    def __repr__(self):
        return self.to_str()

    def to_str(self):
        if not self.coeffs:
            return "0"
        one = self.field.one()
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == self.field.zero():
                continue
            cs = str(c)
            if i == 0:
                parts.append(_paren(cs))
            else:
                xs = self.var if i == 1 else f"{self.var}^{i}"
                parts.append(xs if c == one else f"{_paren(cs)}*{xs}")
        return " + ".join(parts)


def _paren(s):
    return f"({s})" if ("+" in s or "-" in s[1:] or "/" in s or " " in s) else s


class RationalFunction:
    """Reduced fraction of polynomials; denominator monic, never zero."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if den is None:
            den = Polynomial.constant(num.field, num.field.one(), num.var)
        if den.is_zero():
            raise StructuralError("zero denominator")
        if not _canonical:
            if num.is_zero():
                den = Polynomial.constant(num.field, num.field.one(), num.var)
            else:
                if num.degree > 0 and den.degree > 0:
                    g = Polynomial.gcd(num, den)
                    if g.degree > 0:
                        num = num // g
                        den = den // g
                lead = den.leading()
                if lead != num.field.one():
                    inv = num.field.one() / lead
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, field, var="x"):
        return cls(Polynomial.zero(field, var))

    @classmethod
    def one(cls, field, var="x"):
        return cls(Polynomial.constant(field, field.one(), var))

    @classmethod
    def constant(cls, field, c, var="x"):
        return cls(Polynomial.constant(field, c, var))

    @classmethod
    def gen(cls, field, var="x"):
        return cls(Polynomial.gen(field, var))

    @property
    def field(self):
        return self.num.field

    @property
    def var(self):
        return self.num.var

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def as_constant(self):
        if not self.is_constant():
            raise StructuralError("not a constant rational function")
        if self.num.is_zero():
            return self.field.zero()
        return self.num.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Polynomial, int)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(("ratfun", self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, int):
            return RationalFunction.constant(
                self.field, self.field.from_int(other), self.var)
        try:
            c = self.field.zero() + other
        except TypeError:
            return NotImplemented
        return RationalFunction.constant(self.field, c, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # gcd(num + c*den, den) = gcd(num, den), so adding a constant keeps
        # the fraction reduced
        if other.is_constant():
            c = other.as_constant()
            return RationalFunction(self.num + self.den.scale(c), self.den,
                                    _canonical=True)
        if self.is_constant():
            return other + self
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # scaling by a constant keeps the fraction reduced and the
        # denominator monic
        if other.is_constant():
            c = other.as_constant()
            if c == self.field.zero():
                return RationalFunction.zero(self.field, self.var)
            return RationalFunction(self.num.scale(c), self.den, _canonical=True)
        if self.is_constant():
            return other * self
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise StructuralError("division by the zero function")
        if other.is_constant():
            inv = self.field.one() / other.as_constant()
            return RationalFunction(self.num.scale(inv), self.den,
                                    _canonical=True)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self):
        if self.is_zero():
            raise StructuralError("zero has no inverse")
        return RationalFunction(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = RationalFunction.one(self.field, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- evaluation, composition ------------------------------------------

    def evaluate(self, a):
        """Value at a point; POLE where the reduced denominator vanishes."""
        d = self.den.evaluate(a)
        if d == self.field.zero():
            return POLE
        return self.num.evaluate(a) / d

    def compose(self, other):
        """Substitute a rational function (or polynomial) for the variable.

        Raises StructuralError when the substitution lands identically on a
        zero of the denominator (a constant filling a pole).
        """
        other = self._coerce(other)
        if other is NotImplemented:
            raise StructuralError(f"cannot compose with {other!r}")
        num = _compose_poly(self.num, other)
        den = _compose_poly(self.den, other)
        # num/den here are fractions with common denominator other.den^deg.
        d = max(self.num.degree, self.den.degree)
        nn = num[0] * other.den ** (d - self.num.degree)
        dd = den[0] * other.den ** (d - self.den.degree)
        if dd.is_zero():
            raise StructuralError("composition hits a pole identically")
        return RationalFunction(nn, dd)

    def __repr__(self):
        return self.to_str()

    def to_str(self):
        if self.den == Polynomial.constant(self.field, self.field.one(), self.var):
            return self.num.to_str()
        ns = self.num.to_str()
        ds = self.den.to_str()
        if len(self.num.support()) > 1:
            ns = f"({ns})"
        if len(self.den.support()) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"


def _compose_poly(p, other):
    """p(other.num/other.den) written over other.den**deg(p).

    Returns a 1-tuple with the numerator polynomial; the caller supplies the
    denominator power.
    """
    if p.is_zero():
        return (Polynomial.zero(p.field, other.var),)
    acc = Polynomial.constant(p.field, p.coeffs[-1], other.var)
    power = Polynomial.constant(p.field, p.field.one(), other.var)
    for c in reversed(p.coeffs[:-1]):
        power = power * other.den
        acc = acc * other.num + power.scale(c)
    return (acc,)


# -- module-level operation names -------------------------------------------

def parse_ratfun(field, text, var="x"):
    """Parse a rational function in ``var`` with coefficients in the field's
    element grammar (field symbols become constant functions)."""
    from .parsing import parse_expression
    env = {var: RationalFunction.gen(field, var)}
    for name, val in field.symbol_env().items():
        env[name] = RationalFunction.constant(field, val, var)
    value = parse_expression(
        text, env,
        lambda n: RationalFunction.constant(field, field.from_int(n), var))
    if isinstance(value, Polynomial):
        return RationalFunction(value)
    if not isinstance(value, RationalFunction):
        return RationalFunction.constant(field, value, var)
    return value


def normalize(f, g):
    """Reduced rational function f/g (idempotent)."""
    return RationalFunction(f, g)


def evaluate(phi, a):
    return phi.evaluate(a)


def identity_check(lhs, rhs):
    """Exact equality of canonical forms."""
    return lhs == rhs
