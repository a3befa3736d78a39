"""Exact coefficient domains and dense univariate polynomial arithmetic.

Scalars are plain ``int``, ``fractions.Fraction``, or :class:`RatFunc`
(a rational function in one named parameter).  Polynomials are dense
ascending coefficient lists over one of these domains.  Everything is
exact; no floats anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


class InexactDivisionError(ArithmeticError):
    """An exact division left a remainder.

    Inside fraction-free elimination this signals a logic bug rather than
    bad input, so it is kept distinct from ZeroDivisionError.
    """


# ---------------------------------------------------------------------------
# domains

class Domain:
    """One of the four supported coefficient domains.

    The set is closed: integers, rationals, and rational functions in "q"
    or "u" over the rationals.  ``param`` names the parameter for the
    rational-function domains and is None otherwise.
    """

    __slots__ = ("tag", "param")

    def __init__(self, tag: str, param: str | None = None):
        self.tag = tag
        self.param = param

    def __repr__(self) -> str:
        return f"Domain({self.tag})"

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def from_int(self, k: int):
        if self is ZZ:
            return k
        if self is QQ:
            return Fraction(k)
        return RatFunc.const(k, self.param)

    def coerce(self, value):
        """Convert ``value`` into a scalar of this domain, or raise TypeError."""
        if self is ZZ:
            if isinstance(value, bool):
                raise TypeError("bool is not a ring scalar")
            if isinstance(value, int):
                return value
            if isinstance(value, Fraction) and value.denominator == 1:
                return int(value)
            raise TypeError(f"cannot coerce {value!r} into {self.tag}")
        if self is QQ:
            if isinstance(value, bool):
                raise TypeError("bool is not a ring scalar")
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into {self.tag}")
        # rational-function domains
        if isinstance(value, RatFunc):
            if value.var_name != self.param:
                raise TypeError(f"parameter mismatch: {value.var} vs {self.param}")
            return value
        if isinstance(value, Poly):
            if value.var != self.param or value.domain is not QQ:
                raise TypeError(f"cannot coerce {value!r} into {self.tag}")
            return RatFunc(value)
        if isinstance(value, bool):
            raise TypeError("bool is not a ring scalar")
        if isinstance(value, (int, Fraction)):
            return RatFunc.const(value, self.param)
        raise TypeError(f"cannot coerce {value!r} into {self.tag}")


ZZ = Domain("Integer")
QQ = Domain("Rational")
QQ_Q = Domain("RatFuncQ", "q")
QQ_U = Domain("RatFuncU", "u")

_PARAM_DOMAINS = {"q": QQ_Q, "u": QQ_U}


def domain_for_param(param: str) -> Domain:
    try:
        return _PARAM_DOMAINS[param]
    except KeyError:
        raise ValueError(f"unsupported parameter {param!r}; expected 'q' or 'u'") from None


def param_scalar(param: str, value=None):
    """Return (scalar, domain) for a parameter that is symbolic or specialized.

    ``value=None`` gives the symbolic generator of Q(param); a number gives
    the Fraction specialization (the domain is then plain QQ).
    """
    if value is None:
        return RatFunc.var(param), domain_for_param(param)
    return Fraction(value), QQ


# ---------------------------------------------------------------------------
# scalar helpers

def scalar_is_zero(c) -> bool:
    if isinstance(c, RatFunc):
        return c.is_zero
    return c == 0


def exact_div(a, b):
    """Exact division in the scalar/polynomial ring of the operands.

    Raises ZeroDivisionError for b = 0 and InexactDivisionError when b does
    not divide a exactly (only possible over the integers / polynomials).
    """
    if isinstance(a, Poly) or isinstance(b, Poly):
        if not isinstance(a, Poly) or not isinstance(b, Poly):
            raise TypeError("mixed polynomial/scalar exact division")
        return a.exact_div(b)
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        return a / b
    if isinstance(a, Fraction) or isinstance(b, Fraction):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(a) / b
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        if r:
            raise InexactDivisionError(f"{b} does not divide {a} exactly")
        return q
    raise TypeError(f"unsupported operands for exact_div: {a!r}, {b!r}")


def format_scalar(c) -> str:
    if isinstance(c, RatFunc):
        return str(c)
    return str(c)


def _scalar_sign_split(c):
    """(is_negative, magnitude_string, needs_parens) for a printed coefficient."""
    if isinstance(c, RatFunc):
        neg = c.num.coeffs and c.num.coeffs[-1] < 0
        mag = -c if neg else c
        s = str(mag)
        return neg, s, not (mag.den_is_one and mag.num.degree <= 0)
    if c < 0:
        c = -c
        neg = True
    else:
        neg = False
    if isinstance(c, Fraction) and c.denominator != 1:
        return neg, str(c), True
    return neg, str(c), False


# ---------------------------------------------------------------------------
# polynomials

class Poly:
    """Dense univariate polynomial, coefficients ascending by degree.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.  Instances are immutable.
    """

    __slots__ = ("coeffs", "var", "domain")

    def __init__(self, coeffs, var: str, domain: Domain):
        cs = [domain.coerce(c) for c in coeffs]
        while cs and scalar_is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "domain", domain)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs, var, domain):
        # caller guarantees coerced coefficients with no trailing zeros
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        object.__setattr__(obj, "var", var)
        object.__setattr__(obj, "domain", domain)
        return obj

    @classmethod
    def zero(cls, var: str, domain: Domain) -> "Poly":
        return cls._raw((), var, domain)

    @classmethod
    def one(cls, var: str, domain: Domain) -> "Poly":
        return cls._raw((domain.one,), var, domain)

    @classmethod
    def constant(cls, c, var: str, domain: Domain) -> "Poly":
        return cls([c], var, domain)

    @classmethod
    def x(cls, var: str, domain: Domain) -> "Poly":
        return cls._raw((domain.zero, domain.one), var, domain)

    @classmethod
    def monomial(cls, k: int, c, var: str, domain: Domain) -> "Poly":
        return cls([domain.zero] * k + [c], var, domain)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.domain.zero

    def _check_compat(self, other: "Poly"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        if self.domain is not other.domain:
            raise ValueError(f"domain mismatch: {self.domain.tag} vs {other.domain.tag}")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other, self.var, self.domain)
        self._check_compat(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        while out and scalar_is_zero(out[-1]):
            out.pop()
        return Poly._raw(out, self.var, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs), self.var, self.domain)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other, self.var, self.domain)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scalar_mul(self, c) -> "Poly":
        c = self.domain.coerce(c)
        if scalar_is_zero(c):
            return Poly.zero(self.var, self.domain)
        return Poly._raw(tuple(a * c for a in self.coeffs), self.var, self.domain)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scalar_mul(other)
        self._check_compat(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.var, self.domain)
        a, b = self.coeffs, other.coeffs
        out = [None] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if scalar_is_zero(ca):
                continue
            for j, cb in enumerate(b):
                t = ca * cb
                k = i + j
                out[k] = t if out[k] is None else out[k] + t
        zero = self.domain.zero
        out = [zero if c is None else c for c in out]
        while out and scalar_is_zero(out[-1]):
            out.pop()
        return Poly._raw(out, self.var, self.domain)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.var, self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.constant(other, self.var, self.domain)
            except TypeError:
                return NotImplemented
        return (self.var == other.var and self.domain is other.domain
                and self.coeffs == other.coeffs)

    __hash__ = None

    # -- evaluation and substitution -----------------------------------------

    def eval_at(self, value):
        """Evaluate by Horner's rule; the result follows the value's arithmetic."""
        if not self.coeffs:
            # join of coefficient and point arithmetic, e.g. RatFunc zero
            return self.domain.zero + value * 0
        result = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            result = result * value + c
        return result

    def substitute_x_squared(self) -> "Poly":
        """Map sum(c_k x^k) to sum(c_k x^(2k))."""
        if self.is_zero:
            return self
        zero = self.domain.zero
        out = []
        for c in self.coeffs:
            out.append(c)
            out.append(zero)
        out.pop()
        return Poly._raw(out, self.var, self.domain)

    def compose(self, other: "Poly") -> "Poly":
        """Substitute ``other`` for the variable."""
        self._check_compat(other)
        result = Poly.zero(self.var, self.domain)
        for c in reversed(self.coeffs):
            result = result * other + c
        return result

    def map_coeffs(self, fn, var: str | None = None, domain: Domain | None = None) -> "Poly":
        return Poly([fn(c) for c in self.coeffs],
                    self.var if var is None else var,
                    self.domain if domain is None else domain)

    def shift_up(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero or k == 0:
            return self
        zero = self.domain.zero
        return Poly._raw((zero,) * k + self.coeffs, self.var, self.domain)

    def shift_down_exact(self, k: int) -> "Poly":
        """Divide by x^k, requiring the low-order coefficients to vanish."""
        if self.is_zero:
            return self
        for c in self.coeffs[:k]:
            if not scalar_is_zero(c):
                raise InexactDivisionError(f"x^{k} does not divide {self}")
        return Poly._raw(self.coeffs[k:], self.var, self.domain)

    # -- division -------------------------------------------------------------

    def __divmod__(self, other: "Poly"):
        self._check_compat(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(self.var, self.domain), self
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        zero = self.domain.zero
        quot = [zero] * (len(rem) - dq)
        for i in range(len(rem) - 1 - dq, -1, -1):
            c = rem[i + dq]
            if scalar_is_zero(c):
                continue
            factor = exact_div(c, lead) if isinstance(c, int) else _field_div(c, lead)
            quot[i] = factor
            for j, oc in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - factor * oc
        while rem and scalar_is_zero(rem[-1]):
            rem.pop()
        while quot and scalar_is_zero(quot[-1]):
            quot.pop()
        return Poly._raw(quot, self.var, self.domain), Poly._raw(rem, self.var, self.domain)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise InexactDivisionError(
                f"({self}) is not exactly divisible by ({other})")
        return q

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lc = self.leading
        if lc == self.domain.one:
            return self
        inv = _field_div(self.domain.one, lc)
        return self.scalar_mul(inv)

    # -- printing ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        one = self.domain.one
        pieces = []
        for k, c in enumerate(self.coeffs):
            if scalar_is_zero(c):
                continue
            if k == 0:
                xpart = ""
            elif k == 1:
                xpart = self.var
            else:
                xpart = f"{self.var}^{k}"
            if xpart and c == one:
                neg, body = False, xpart
            elif xpart and c == -one:
                neg, body = True, xpart
            else:
                neg, mag, parens = _scalar_sign_split(c)
                if xpart:
                    body = (f"({mag})" if parens else mag) + xpart
                else:
                    body = mag
            pieces.append((neg, body))
        first_neg, first_body = pieces[0]
        out = ("-" if first_neg else "") + first_body
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"Poly({self}, var={self.var!r}, domain={self.domain.tag})"


def _field_div(a, b):
    # coefficient-level division for field scalars; ints fall back to exact_div
    if isinstance(a, int) and isinstance(b, int):
        return exact_div(a, b)
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        return a / b
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(a) / b


# ---------------------------------------------------------------------------
# polynomial gcd over the rationals (primitive PRS on integer coefficients)

def _to_primitive_ints(p: Poly) -> list:
    scale = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * scale) for c in p.coeffs]
    g = math.gcd(*ints)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def _int_primitive(cs: list) -> list:
    g = math.gcd(*cs) if len(cs) > 1 else abs(cs[0])
    if g > 1:
        cs = [c // g for c in cs]
    return cs


def _int_prem(a: list, b: list) -> list:
    """Pseudo-remainder of dense ascending integer coefficient lists."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while a and len(a) - 1 >= db:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, bc in enumerate(b):
            a[shift + i] -= la * bc
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(p: Poly, r: Poly) -> Poly:
    """Monic gcd of polynomials with rational coefficients.

    gcd(p, 0) is monic(p); gcd(0, 0) is 0 by convention.
    """
    if p.var != r.var:
        raise ValueError(f"variable mismatch: {p.var} vs {r.var}")
    if p.domain not in (QQ, ZZ) or r.domain not in (QQ, ZZ):
        raise ValueError("poly_gcd requires rational coefficients")
    if p.domain is ZZ:
        p = p.map_coeffs(Fraction, domain=QQ)
    if r.domain is ZZ:
        r = r.map_coeffs(Fraction, domain=QQ)
    if p.is_zero:
        return r.monic()
    if r.is_zero:
        return p.monic()
    a = _to_primitive_ints(p)
    b = _to_primitive_ints(r)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _int_prem(a, b)
        if b:
            b = _int_primitive(b)
    lc = a[-1]
    return Poly._raw(tuple(Fraction(c, lc) for c in a), p.var, QQ)


def poly_lcm(p: Poly, r: Poly) -> Poly:
    if p.is_zero or r.is_zero:
        return Poly.zero(p.var, QQ)
    g = poly_gcd(p, r)
    return (p.exact_div(g) * r).monic()


# ---------------------------------------------------------------------------
# rational functions

class RatFunc:
    """Rational function in one parameter over the rationals.

    Canonical form: numerator and denominator coprime (by monic rational
    gcd), denominator monic, zero represented as 0/1.  Instances are
    immutable, so equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str | None = None):
        if isinstance(num, RatFunc):
            if den is not None:
                raise TypeError("RatFunc numerator cannot itself be a RatFunc")
            num, den, var = num.num, num.den, num.var
        if isinstance(num, Poly):
            var = num.var
        elif isinstance(den, Poly):
            var = den.var
        if var is None:
            raise TypeError("RatFunc needs a Poly argument or an explicit var")
        if not isinstance(num, Poly):
            num = Poly.constant(Fraction(num), var, QQ)
        if den is None:
            den = Poly.one(var, QQ)
        elif not isinstance(den, Poly):
            den = Poly.constant(Fraction(den), var, QQ)
        if num.var != den.var:
            raise ValueError(f"variable mismatch: {num.var} vs {den.var}")
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num = Poly.zero(var, QQ)
            den = Poly.one(var, QQ)
        else:
            if den.degree > 0:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.leading
            if lc != 1:
                inv = Fraction(1) / lc
                num = num.scalar_mul(inv)
                den = den.scalar_mul(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        # caller guarantees canonical form
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def var(cls, name: str) -> "RatFunc":
        return cls._raw(Poly.x(name, QQ), Poly.one(name, QQ))

    @classmethod
    def const(cls, value, name: str) -> "RatFunc":
        return cls._raw(Poly.constant(Fraction(value), name, QQ), Poly.one(name, QQ))

    # -- structure ---------------------------------------------------------

    @property
    def var_name(self) -> str:
        return self.num.var

    # kept short because it is used constantly in operator fast paths
    @property
    def den_is_one(self) -> bool:
        return self.den.degree == 0

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.var_name != self.var_name:
                raise ValueError(
                    f"parameter mismatch: {self.var_name} vs {other.var_name}")
            return other
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other, self.var_name)
        if isinstance(other, Poly):
            return RatFunc(other)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den_is_one and other.den_is_one:
            return RatFunc._raw(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

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
        if self.den_is_one and other.den_is_one:
            return RatFunc._raw(self.num * other.num, self.den)
        # cancel crosswise first to keep intermediate degrees down
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        g1 = poly_gcd(n1, d2) if (d2.degree > 0 and not n1.is_zero) else None
        if g1 is not None and g1.degree > 0:
            n1 = n1.exact_div(g1)
            d2 = d2.exact_div(g1)
        g2 = poly_gcd(n2, d1) if (d1.degree > 0 and not n2.is_zero) else None
        if g2 is not None and g2.degree > 0:
            n2 = n2.exact_div(g2)
            d1 = d1.exact_div(g2)
        return RatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverted(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("inverting the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        if self.den_is_one and other.den_is_one:
            # polynomial fast path: exact quotients need no gcd normalization
            q, r = divmod(self.num, other.num)
            if r.is_zero:
                return RatFunc._raw(q, Poly.one(self.var_name, QQ))
        return self * other.inverted()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverted() ** (-n)
        result = RatFunc.const(1, self.var_name)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def eval_at(self, value) -> Fraction:
        value = Fraction(value)
        dv = self.den.eval_at(value)
        if dv == 0:
            raise ZeroDivisionError(
                f"denominator of {self} vanishes at {self.var_name} = {value}")
        return self.num.eval_at(value) / dv

    def __str__(self) -> str:
        ns = str(self.num)
        if self.den_is_one:
            return ns
        ds = str(self.den)
        if " " in ns or ns.startswith("-"):
            ns = f"({ns})"
        if " " in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def specialize_param(value, point):
    """Specialize the parameter of a RatFunc or a Poly over a RatFunc domain.

    RatFuncs become Fractions; polynomials over Q(q)/Q(u) become polynomials
    over Q.  Plain rational values pass through unchanged.
    """
    if isinstance(value, RatFunc):
        return value.eval_at(point)
    if isinstance(value, Poly) and value.domain in (QQ_Q, QQ_U):
        return value.map_coeffs(lambda c: c.eval_at(point), domain=QQ)
    return value


# ---------------------------------------------------------------------------
# q-analog utilities

def binom(n: int, k: int) -> int:
    """Binomial coefficient with the convention C(n, 0) = 1 for every n."""
    if k == 0:
        return 1
    if n < 0:
        raise ValueError(f"binom({n}, {k}) undefined for n < 0, k != 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _one_minus_q_power(m: int) -> Poly:
    return Poly([1] + [0] * (m - 1) + [-1], "q", QQ)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> Poly:
    """Gaussian binomial as a polynomial in q; [n choose 0] = 1 for every n."""
    if k == 0:
        return Poly.one("q", QQ)
    if k < 0 or n < 0 or k > n:
        return Poly.zero("q", QQ)
    # incremental product formula; every partial product is itself Gaussian,
    # so each division is exact
    result = Poly.one("q", QQ)
    for i in range(1, k + 1):
        result = (result * _one_minus_q_power(n - k + i)).exact_div(
            _one_minus_q_power(i))
    return result


def q_int(n: int) -> Poly:
    """The q-integer 1 + q + ... + q^(n-1); q_int(0) = 0."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return Poly([1] * n, "q", QQ)
