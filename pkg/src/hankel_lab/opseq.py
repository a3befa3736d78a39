"""Orthogonal polynomial sequences from three-term recurrences.

Symmetric sequences follow p_n = x p_{n-1} - t_{n-2} p_{n-2} with p_0 = 1,
so t_0 first enters at p_2.  The general (non-symmetric) form is
P_n = (x - S_{n-1}) P_{n-1} - U_{n-2} P_{n-2}.  Also provides the named
Fibonacci/Lucas/Hermite/Schroeder-style families used by the identity checks,
each with an independent closed-form evaluator.
"""

from __future__ import annotations

from fractions import Fraction

from .ring import (QQ, QQ_Q, QQ_U, Domain, Poly, RatFunc, binom,
                   domain_for_param, param_scalar, q_binomial, q_int,
                   scalar_is_zero)


class SymRecurrence:
    """Lazily evaluated coefficient sequence t for the symmetric recurrence.

    Values are cached; a vanishing t_n raises at query time and names the
    offending index.
    """

    def __init__(self, t, domain: Domain, description: str = "t-sequence"):
        self._t = t
        self.domain = domain
        self.description = description
        self._cache: dict[int, object] = {}

    def t(self, n: int):
        if n < 0:
            raise IndexError(f"t index {n} out of range")
        try:
            return self._cache[n]
        except KeyError:
            pass
        value = self.domain.coerce(self._t(n))
        if scalar_is_zero(value):
            raise ValueError(
                f"t[{n}] vanishes for {self.description}; the recurrence degenerates")
        self._cache[n] = value
        return value

    @classmethod
    def from_list(cls, values, domain: Domain = QQ, cycle: bool = False,
                  description: str | None = None) -> "SymRecurrence":
        values = list(values)
        if not values:
            raise ValueError("empty t-sequence")
        if description is None:
            description = f"t={values}{'...' if cycle else ''}"

        def t(n, _v=values):
            if cycle:
                return _v[n % len(_v)]
            if n >= len(_v):
                raise IndexError(
                    f"t index {n} beyond supplied list of length {len(_v)}")
            return _v[n]

        return cls(t, domain, description)

    def shifted(self) -> "SymRecurrence":
        return SymRecurrence(lambda n: self.t(n + 1), self.domain,
                             f"shift of {self.description}")

    def __repr__(self) -> str:
        return f"SymRecurrence({self.description})"


class GeneralRecurrence:
    """S/U coefficient pair for the general three-term recurrence."""

    def __init__(self, S, U, domain: Domain, description: str = "S,U-sequence"):
        self._S = S
        self._U = U
        self.domain = domain
        self.description = description
        self._cache_s: dict[int, object] = {}
        self._cache_u: dict[int, object] = {}

    def S(self, n: int):
        if n < 0:
            raise IndexError(f"S index {n} out of range")
        if n not in self._cache_s:
            self._cache_s[n] = self.domain.coerce(self._S(n))
        return self._cache_s[n]

    def U(self, n: int):
        if n < 0:
            raise IndexError(f"U index {n} out of range")
        if n not in self._cache_u:
            value = self.domain.coerce(self._U(n))
            if scalar_is_zero(value):
                raise ValueError(
                    f"U[{n}] vanishes for {self.description}")
            self._cache_u[n] = value
        return self._cache_u[n]

    def __repr__(self) -> str:
        return f"GeneralRecurrence({self.description})"


def shift_t(rec: SymRecurrence) -> SymRecurrence:
    """The shifted sequence T with T_n = t_{n+1}."""
    return rec.shifted()


def sym_to_general(rec: SymRecurrence) -> GeneralRecurrence:
    """Collapse a symmetric t-sequence to the S/U pair of P_n(x) = p_2n(sqrt x)."""

    def S(n):
        if n == 0:
            return rec.t(0)
        return rec.t(2 * n - 1) + rec.t(2 * n)

    def U(n):
        return rec.t(2 * n) * rec.t(2 * n + 1)

    return GeneralRecurrence(S, U, rec.domain,
                             f"general form of {rec.description}")


def sym_polys(rec: SymRecurrence, n_max: int) -> list[Poly]:
    """p_0 .. p_n_max for the symmetric recurrence; p_n is monic of degree n."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    x = Poly.x("x", rec.domain)
    polys = [Poly.one("x", rec.domain)]
    if n_max >= 1:
        polys.append(x)
    for n in range(2, n_max + 1):
        polys.append(x * polys[n - 1] - polys[n - 2].scalar_mul(rec.t(n - 2)))
    return polys


def general_polys(rec: GeneralRecurrence, n_max: int) -> list[Poly]:
    """P_0 .. P_n_max for the general recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    x = Poly.x("x", rec.domain)
    polys = [Poly.one("x", rec.domain)]
    if n_max >= 1:
        polys.append(x - Poly.constant(rec.S(0), "x", rec.domain))
    for n in range(2, n_max + 1):
        head = (x - Poly.constant(rec.S(n - 1), "x", rec.domain)) * polys[n - 1]
        polys.append(head - polys[n - 2].scalar_mul(rec.U(n - 2)))
    return polys


class VTable:
    """Unsigned coefficient table: p_n = sum_k (-1)^k v(n,k) x^(n-2k)."""

    def __init__(self, rec: SymRecurrence, n_max: int):
        if n_max < 0:
            raise ValueError("n_max must be >= 0")
        self.domain = rec.domain
        self.n_max = n_max
        one = rec.domain.one
        rows: list[list] = [[one]]
        if n_max >= 1:
            rows.append([one])
        for n in range(2, n_max + 1):
            row = [one]
            for k in range(1, n // 2 + 1):
                a = rows[n - 1][k] if k < len(rows[n - 1]) else rec.domain.zero
                b = rows[n - 2][k - 1] if k - 1 < len(rows[n - 2]) else rec.domain.zero
                row.append(a + rec.t(n - 2) * b)
            rows.append(row)
        self._rows = tuple(tuple(row) for row in rows)

    def value(self, n: int, k: int):
        if n < 0 or n > self.n_max:
            raise IndexError(f"v({n}, {k}) outside computed range 0..{self.n_max}")
        if k < 0 or k > n // 2:
            return self.domain.zero
        return self._rows[n][k]


def v_table(rec: SymRecurrence, n_max: int) -> VTable:
    return VTable(rec, n_max)


# ---------------------------------------------------------------------------
# named recurrences

def catalan_recurrence() -> SymRecurrence:
    return SymRecurrence(lambda n: 1, QQ, "t = (1, 1, 1, ...) [Catalan moments]")


def central_binomial_recurrence() -> SymRecurrence:
    return SymRecurrence(lambda n: 2 if n == 0 else 1, QQ,
                         "t = (2, 1, 1, ...) [central binomial moments]")


def schroder_little_recurrence() -> SymRecurrence:
    return SymRecurrence.from_list([1, 2], cycle=True,
                                   description="t = (1, 2, 1, 2, ...) [little Schroeder]")


def schroder_large_recurrence() -> SymRecurrence:
    return SymRecurrence.from_list([2, 1], cycle=True,
                                   description="t = (2, 1, 2, 1, ...) [large Schroeder]")


def hermite_recurrence() -> SymRecurrence:
    return SymRecurrence(lambda n: n + 1, QQ, "t_n = n + 1 [Hermite]")


def carlitz_q_recurrence(q=None) -> SymRecurrence:
    qs, domain = param_scalar("q", q)
    return SymRecurrence(lambda n: qs ** n, domain,
                         f"t_n = q^n [Carlitz q-Catalan], q={'symbolic' if q is None else q}")


def andrews_q_recurrence(q=None) -> SymRecurrence:
    qs, domain = param_scalar("q", q)
    return SymRecurrence(
        lambda n: qs ** n / ((1 + qs ** (n + 1)) * (1 + qs ** (n + 2))),
        domain,
        f"t_n = q^n/((1+q^(n+1))(1+q^(n+2))) [Andrews q-Catalan], "
        f"q={'symbolic' if q is None else q}")


def q_central_binomial_recurrence(q=None) -> SymRecurrence:
    qs, domain = param_scalar("q", q)

    def t(n):
        if n == 0:
            return 1 / (1 + qs)
        return qs ** n / ((1 + qs ** n) * (1 + qs ** (n + 1)))

    return SymRecurrence(t, domain,
                         f"t_0 = 1/(1+q), t_n = q^n/((1+q^n)(1+q^(n+1))), "
                         f"q={'symbolic' if q is None else q}")


def schroder_q_recurrence(a, b, q=None) -> SymRecurrence:
    qs, domain = param_scalar("q", q)
    a = domain.coerce(Fraction(a))
    b = domain.coerce(Fraction(b))

    def t(n):
        half, parity = divmod(n, 2)
        return qs ** half * (a if parity == 0 else b)

    return SymRecurrence(t, domain,
                         f"t_2n = q^n a, t_2n+1 = q^n b with a={a}, b={b}")


# ---------------------------------------------------------------------------
# polynomial families

def _family_domain(*scalars) -> Domain:
    for s in scalars:
        if isinstance(s, RatFunc):
            return domain_for_param(s.var_name)
    return QQ


def fibonacci_poly(n: int, s, domain: Domain | None = None, var: str = "x") -> Poly:
    """Bivariate Fibonacci polynomial F_n(x, s) with s specialized to a scalar.

    F_0 = 0, F_1 = 1, F_n = x F_{n-1} + s F_{n-2}.
    """
    if n < 0:
        raise ValueError("fibonacci_poly needs n >= 0")
    if domain is None:
        domain = _family_domain(s)
    s = domain.coerce(s)
    x = Poly.x(var, domain)
    prev, cur = Poly.zero(var, domain), Poly.one(var, domain)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur + prev.scalar_mul(s)
    return cur


def lucas_poly(n: int, s, domain: Domain | None = None, var: str = "x") -> Poly:
    """Bivariate Lucas polynomial: L_0 = 2, L_1 = x, L_n = x L_{n-1} + s L_{n-2}."""
    if n < 0:
        raise ValueError("lucas_poly needs n >= 0")
    if domain is None:
        domain = _family_domain(s)
    s = domain.coerce(s)
    x = Poly.x(var, domain)
    prev = Poly.constant(2, var, domain)
    if n == 0:
        return prev
    cur = x
    for _ in range(n - 1):
        prev, cur = cur, x * cur + prev.scalar_mul(s)
    return cur


def q_fibonacci(n: int, s, q=None, var: str = "x") -> Poly:
    """Carlitz q-Fibonacci: F_n = x F_{n-1} + q^(n-3) s F_{n-2}, F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError("q_fibonacci needs n >= 0")
    qs, domain = param_scalar("q", q)
    s = domain.coerce(s)
    x = Poly.x(var, domain)
    prev, cur = Poly.zero(var, domain), Poly.one(var, domain)
    if n == 0:
        return prev
    for m in range(2, n + 1):
        prev, cur = cur, x * cur + prev.scalar_mul(qs ** (m - 3) * s)
    return cur


def q_fibonacci_closed(n: int, s, q=None, var: str = "x") -> Poly:
    """Closed form sum_k s^k q^(k^2-k) [n-1-k, k] x^(n-1-2k); oracle for q_fibonacci."""
    if n < 0:
        raise ValueError("q_fibonacci_closed needs n >= 0")
    qs, domain = param_scalar("q", q)
    s = domain.coerce(s)
    result = Poly.zero(var, domain)
    if n == 0:
        return result
    for k in range((n - 1) // 2 + 1):
        qb = _qbinom_scalar(n - 1 - k, k, qs, domain)
        coeff = s ** k * qs ** (k * k - k) * qb
        result = result + Poly.monomial(n - 1 - 2 * k, coeff, var, domain)
    return result


def qb_fibonacci(n: int, b, s, q=None, var: str = "x") -> Poly:
    """Al-Salam/Ismail-style variant with denominator factors (1 - q^j b).

    F_n = x F_{n-1} + q^(n-3) s / ((1 - q^(n-2) b)(1 - q^(n-1) b)) F_{n-2}.
    """
    if n < 0:
        raise ValueError("qb_fibonacci needs n >= 0")
    qs, domain = param_scalar("q", q)
    s = domain.coerce(s)
    b = domain.coerce(b)
    x = Poly.x(var, domain)
    prev, cur = Poly.zero(var, domain), Poly.one(var, domain)
    if n == 0:
        return prev
    for m in range(2, n + 1):
        d1 = 1 - qs ** (m - 2) * b
        d2 = 1 - qs ** (m - 1) * b
        if scalar_is_zero(d1) or scalar_is_zero(d2):
            raise ZeroDivisionError(
                f"denominator (1 - q^j b) vanishes at step {m} with q={q}, b={b}")
        prev, cur = cur, x * cur + prev.scalar_mul(qs ** (m - 3) * s / (d1 * d2))
    return cur


def qb_fibonacci_closed(n: int, b, s, q=None, var: str = "x") -> Poly:
    """Closed form with the two (1 - q^j b) product tails; oracle for qb_fibonacci."""
    if n < 0:
        raise ValueError("qb_fibonacci_closed needs n >= 0")
    qs, domain = param_scalar("q", q)
    s = domain.coerce(s)
    b = domain.coerce(b)
    result = Poly.zero(var, domain)
    if n == 0:
        return result
    for k in range((n - 1) // 2 + 1):
        denom = domain.one
        for j in range(1, k + 1):
            denom = denom * (1 - qs ** j * b)
        for j in range(n - k, n):
            denom = denom * (1 - qs ** j * b)
        if scalar_is_zero(denom):
            raise ZeroDivisionError(f"(1 - q^j b) tail vanishes for q={q}, b={b}")
        qb = _qbinom_scalar(n - 1 - k, k, qs, domain)
        coeff = s ** k * qs ** (k * k - k) * qb / denom
        result = result + Poly.monomial(n - 1 - 2 * k, coeff, var, domain)
    return result


def q_lucas(n: int, s, q=None, var: str = "x") -> Poly:
    """Generalized q-Lucas: L_0 = 2, L_1 = x,
    L_n = x L_{n-1} + q^(n-2) s / ((1+q^(n-2))(1+q^(n-1))) L_{n-2}."""
    if n < 0:
        raise ValueError("q_lucas needs n >= 0")
    qs, domain = param_scalar("q", q)
    s = domain.coerce(s)
    x = Poly.x(var, domain)
    prev = Poly.constant(2, var, domain)
    if n == 0:
        return prev
    cur = x
    for m in range(2, n + 1):
        factor = qs ** (m - 2) * s / ((1 + qs ** (m - 2)) * (1 + qs ** (m - 1)))
        prev, cur = cur, x * cur + prev.scalar_mul(factor)
    return cur


def q_lucas_closed(n: int, s, q=None, var: str = "x") -> Poly:
    """Closed-form q-Lucas coefficients; oracle for q_lucas (n >= 1)."""
    if n < 1:
        raise ValueError("q_lucas_closed needs n >= 1")
    qs, domain = param_scalar("q", q)
    s = domain.coerce(s)
    result = Poly.zero(var, domain)
    for k in range(n // 2 + 1):
        denom = domain.one
        for j in range(1, k + 1):
            denom = denom * (1 + qs ** j)
        for j in range(n - k, n):
            denom = denom * (1 + qs ** j)
        ratio = (_qint_scalar(n, qs, domain)
                 / _qint_scalar(n - k, qs, domain))
        qb = _qbinom_scalar(n - k, k, qs, domain)
        coeff = qs ** (k * k - k) * s ** k * ratio * qb / denom
        result = result + Poly.monomial(n - 2 * k, coeff, var, domain)
    return result


def hermite_poly(n: int) -> Poly:
    """Hermite-type polynomials H_n = x H_{n-1} - (n-1) H_{n-2}, H_0 = 1, H_1 = x."""
    if n < 0:
        raise ValueError("hermite_poly needs n >= 0")
    x = Poly.x("x", QQ)
    prev, cur = Poly.one("x", QQ), x
    if n == 0:
        return prev
    for m in range(2, n + 1):
        prev, cur = cur, x * cur - prev.scalar_mul(m - 1)
    return cur


def schroder_sym_polys(n: int, a, b, q=None, var: str = "x") -> Poly:
    """Closed form for p_n of the t_2n = q^n a, t_2n+1 = q^n b recurrence.

    Even and odd degrees use the two companion double sums; must agree with
    sym_polys of schroder_q_recurrence(a, b, q).
    """
    if n < 0:
        raise ValueError("schroder_sym_polys needs n >= 0")
    qs, domain = param_scalar("q", q)
    a = domain.coerce(Fraction(a))
    b = domain.coerce(Fraction(b))
    if scalar_is_zero(a) or scalar_is_zero(b):
        raise ValueError("a and b must be nonzero")
    m, parity = divmod(n, 2)
    result = Poly.zero(var, domain)
    for k in range(m + 1):
        inner = domain.zero
        for j in range(m - k + 1):
            first = _qbinom_scalar(m - j, k, qs, domain)
            second = _qbinom_scalar(k + j - 1 + parity, j, qs, domain)
            inner = inner + first * second * (b / a) ** j
        outer = (-a) ** (m - k) * qs ** binom(m - k, 2)
        result = result + Poly.monomial(2 * k + parity, outer * inner, var, domain)
    return result


def _qbinom_scalar(n: int, k: int, qs, domain: Domain):
    """Gaussian binomial as a scalar of the working domain (symbolic or value)."""
    p = q_binomial(n, k)
    if domain in (QQ_Q, QQ_U):
        return domain.coerce(RatFunc(p.map_coeffs(lambda c: c, var=domain.param)))
    return p.eval_at(qs)


def _qint_scalar(n: int, qs, domain: Domain):
    p = q_int(n)
    if domain in (QQ_Q, QQ_U):
        return domain.coerce(RatFunc(p.map_coeffs(lambda c: c, var=domain.param)))
    return p.eval_at(qs)
