"""Moment sequences of symmetric and general orthogonal polynomial recurrences.

Moments are computed by expanding powers of x in the orthogonal basis
(a division-free tridiagonal transfer iteration), so they work over any
of the exact domains.  Named sequences come with independent generators:
convolution recursions extracted from their generating-function equations,
or explicit closed forms.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .opseq import (GeneralRecurrence, SymRecurrence, catalan_recurrence,
                    central_binomial_recurrence, fibonacci_poly,
                    schroder_large_recurrence, schroder_little_recurrence)
from .ring import (QQ, Domain, Poly, RatFunc, binom, param_scalar, q_binomial,
                   q_int, scalar_is_zero)


class MomentSeq:
    """Memoized scalar sequence; extension is serialized, reads are lock-free."""

    def __init__(self, generator, domain: Domain, description: str = "moments"):
        self._gen = generator
        self.domain = domain
        self.description = description
        self._values: list = []
        self._lock = threading.Lock()

    def at(self, n: int):
        if n < 0:
            raise IndexError(f"moment index {n} out of range")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while n >= len(self._values):
                self._values.append(next(self._gen))
        return self._values[n]

    def __call__(self, n: int):
        return self.at(n)

    def prefix(self, count: int) -> list:
        return [self.at(i) for i in range(count)]

    @classmethod
    def from_func(cls, f, domain: Domain, description: str = "moments") -> "MomentSeq":
        def gen():
            n = 0
            while True:
                yield domain.coerce(f(n))
                n += 1
        return cls(gen(), domain, description)

    def __repr__(self) -> str:
        return f"MomentSeq({self.description})"


def sym_moments(rec: SymRecurrence, n_max: int | None = None) -> MomentSeq:
    """a(n) = Lambda(x^(2n)) for the functional with Lambda(p_n) = [n = 0].

    Expands x^(2n) in the p-basis via x p_k = p_{k+1} + t_{k-1} p_{k-1} and
    reads off the p_0 coefficient.
    """
    domain = rec.domain

    def gen():
        coeffs = {0: domain.one}
        yield domain.one
        while True:
            for _ in range(2):
                nxt: dict[int, object] = {}
                for k, val in coeffs.items():
                    if k + 1 in nxt:
                        nxt[k + 1] = nxt[k + 1] + val
                    else:
                        nxt[k + 1] = val
                    if k >= 1:
                        term = val * rec.t(k - 1)
                        if k - 1 in nxt:
                            nxt[k - 1] = nxt[k - 1] + term
                        else:
                            nxt[k - 1] = term
                coeffs = {k: v for k, v in nxt.items() if not scalar_is_zero(v)}
            yield coeffs.get(0, domain.zero)

    seq = MomentSeq(gen(), domain, f"moments of {rec.description}")
    if n_max is not None:
        seq.at(n_max)
    return seq


def general_moments(rec: GeneralRecurrence, n_max: int | None = None) -> MomentSeq:
    """mu(n) = L(x^n) via x P_k = P_{k+1} + S_k P_k + U_{k-1} P_{k-1}."""
    domain = rec.domain

    def gen():
        coeffs = {0: domain.one}
        yield domain.one
        while True:
            nxt: dict[int, object] = {}

            def add(k, v):
                if k in nxt:
                    nxt[k] = nxt[k] + v
                else:
                    nxt[k] = v

            for k, val in coeffs.items():
                add(k + 1, val)
                add(k, val * rec.S(k))
                if k >= 1:
                    add(k - 1, val * rec.U(k - 1))
            coeffs = {k: v for k, v in nxt.items() if not scalar_is_zero(v)}
            yield coeffs.get(0, domain.zero)

    seq = MomentSeq(gen(), domain, f"moments of {rec.description}")
    if n_max is not None:
        seq.at(n_max)
    return seq


def aerate(seq: MomentSeq) -> MomentSeq:
    """Interleave zeros: A(2n) = a(n), A(2n+1) = 0."""
    zero = seq.domain.zero
    return MomentSeq.from_func(
        lambda n: seq.at(n // 2) if n % 2 == 0 else zero,
        seq.domain, f"aeration of {seq.description}")


def apply_functional(seq: MomentSeq, poly: Poly):
    """Lambda applied to a polynomial in x: even moments from seq, odd ones 0."""
    total = seq.domain.zero
    for k, c in enumerate(poly.coeffs):
        if k % 2 == 0 and not scalar_is_zero(c):
            total = total + c * seq.at(k // 2)
    return total


def apply_general_functional(seq: MomentSeq, poly: Poly):
    """L applied to a polynomial in x: L(x^n) = mu(n)."""
    total = seq.domain.zero
    for k, c in enumerate(poly.coeffs):
        if not scalar_is_zero(c):
            total = total + c * seq.at(k)
    return total


# ---------------------------------------------------------------------------
# named sequences

def catalan_formula(n: int) -> Fraction:
    """Closed form C_n = binom(2n, n)/(n+1); oracle for the t = 1 moments."""
    return Fraction(binom(2 * n, n), n + 1)


def central_binomial_formula(n: int) -> Fraction:
    return Fraction(binom(2 * n, n))


def motzkin_formula(n: int) -> Fraction:
    """M_n = sum_k binom(n, 2k) C_k; oracle for the Motzkin moments."""
    return sum(Fraction(binom(n, 2 * k)) * catalan_formula(k)
               for k in range(n // 2 + 1))


def schroder_large_formula(n: int) -> Fraction:
    """Large Schroeder numbers as binomial-weighted Catalan sums."""
    return sum(Fraction(binom(n + k, 2 * k)) * catalan_formula(k)
               for k in range(n + 1))


def schroder_little_formula(n: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    return schroder_large_formula(n) / 2


def motzkin_recurrence() -> GeneralRecurrence:
    """S = (1, 1, ...), U = (1, 1, ...): mu(n) are the Motzkin numbers."""
    return GeneralRecurrence(lambda n: 1, lambda n: 1, QQ, "Motzkin (S=1, U=1)")


def carlitz_q_catalan(q=None, n_max: int | None = None) -> MomentSeq:
    """Carlitz q-Catalan numbers via C_{n+1} = sum_{i+j=n} C_i q^j C_j.

    The recursion is coefficient extraction from f(z) = 1 + z f(z) f(qz).
    """
    qs, domain = param_scalar("q", q)

    def gen():
        values = [domain.one]
        yield values[0]
        while True:
            n = len(values) - 1
            total = domain.zero
            for i in range(n + 1):
                j = n - i
                total = total + values[i] * qs ** j * values[j]
            values.append(total)
            yield total

    seq = MomentSeq(gen(), domain,
                    f"Carlitz q-Catalan, q={'symbolic' if q is None else q}")
    if n_max is not None:
        seq.at(n_max)
    return seq


def andrews_q_catalan(n: int, q=None):
    """Andrews q-Catalan number: the closed-form q-deformation of C_n."""
    if n < 0:
        raise ValueError("andrews_q_catalan needs n >= 0")
    qs, domain = param_scalar("q", q)
    qb = _scalarize(q_binomial(2 * n, n), qs, domain)
    head = qb / _scalarize(q_int(n + 1), qs, domain)
    head = head * (1 + qs) / (1 + qs ** (n + 1))
    denom = domain.one
    for j in range(1, n + 1):
        denom = denom * (1 + qs ** j) ** 2
    return head / denom


def q_central_binomial_moments(n: int, q=None):
    """q-deformed central binomial coefficient over the (1+q^j)^2 products."""
    if n < 0:
        raise ValueError("q_central_binomial_moments needs n >= 0")
    qs, domain = param_scalar("q", q)
    qb = _scalarize(q_binomial(2 * n, n), qs, domain)
    denom = domain.one
    for j in range(1, n + 1):
        denom = denom * (1 + qs ** j) ** 2
    return qb / denom


def andrews_q_catalan_seq(q=None) -> MomentSeq:
    qs, domain = param_scalar("q", q)
    return MomentSeq.from_func(lambda n: andrews_q_catalan(n, q), domain,
                               f"Andrews q-Catalan, q={'symbolic' if q is None else q}")


def q_central_binomial_seq(q=None) -> MomentSeq:
    qs, domain = param_scalar("q", q)
    return MomentSeq.from_func(lambda n: q_central_binomial_moments(n, q), domain,
                               f"q-central binomial, q={'symbolic' if q is None else q}")


def motzkin_u(u=None, n_max: int | None = None) -> MomentSeq:
    """M_n(u) via M_{n+1} = u M_n + sum_{i+j=n-1} M_i M_j.

    The recursion is coefficient extraction from f = 1 + u z f + z^2 f^2.
    """
    us, domain = param_scalar("u", u)

    def gen():
        values = [domain.one]
        yield values[0]
        while True:
            n = len(values) - 1
            total = us * values[n]
            for i in range(n):
                total = total + values[i] * values[n - 1 - i]
            values.append(total)
            yield total

    seq = MomentSeq(gen(), domain,
                    f"Motzkin polynomials M_n(u), u={'symbolic' if u is None else u}")
    if n_max is not None:
        seq.at(n_max)
    return seq


def motzkin_t(u=None) -> SymRecurrence:
    """The t-sequence whose general form has S = u, U = 1:
    t_2n = F_{n+2}(u, -1)/F_{n+1}(u, -1), t_2n+1 = 1/t_2n.

    Only defined symbolically or at u-values where no F_{m}(u, -1) in range
    vanishes; at u = 1 the Fibonacci values hit 0 and no such t exists.
    """
    us, domain = param_scalar("u", u)

    def fib_at(m):
        p = fibonacci_poly(m, -1, domain=QQ, var="u")
        value = domain.coerce(RatFunc(p)) if u is None else p.eval_at(us)
        return value

    def t(n):
        half, parity = divmod(n, 2)
        num, den = fib_at(half + 2), fib_at(half + 1)
        if parity:
            num, den = den, num
        if scalar_is_zero(num) or scalar_is_zero(den):
            raise ValueError(
                f"t[{n}] undefined at u={u}: a Fibonacci value F(u,-1) vanishes, "
                "so no symmetric recurrence exists for this specialization")
        return num / den

    return SymRecurrence(t, domain,
                         f"Motzkin t-sequence, u={'symbolic' if u is None else u}")


def double_factorial_moments(n: int) -> Fraction:
    """(2n-1)!! with (-1)!! = 1; the even moments of the Hermite recurrence."""
    if n < 0:
        raise ValueError("double_factorial_moments needs n >= 0")
    result = 1
    for odd in range(1, 2 * n, 2):
        result *= odd
    return Fraction(result)


def _scalarize(p: Poly, qs, domain: Domain):
    if domain is QQ:
        return p.eval_at(qs)
    return domain.coerce(RatFunc(p))


# ---------------------------------------------------------------------------
# registry for the CLI and checks

SEQUENCE_NAMES = (
    "catalan", "central-binomial", "motzkin", "motzkin-u",
    "schroder-little", "schroder-large", "carlitz-q-catalan",
    "andrews-q-catalan", "q-central-binomial", "double-factorial",
)


def named_sequence(name: str, param=None) -> MomentSeq:
    """Resolve a sequence name (including "from-t:<list>") to a MomentSeq.

    ``param`` specializes q/u for the parameterized families; plain integer
    families ignore it.
    """
    if name.startswith("from-t:"):
        listing = name[len("from-t:"):]
        try:
            values = [Fraction(part) for part in listing.split(",") if part]
        except ValueError:
            raise KeyError(f"bad t-list in {name!r}") from None
        if not values:
            raise KeyError(f"empty t-list in {name!r}")
        rec = SymRecurrence.from_list(values, cycle=True)
        return sym_moments(rec)
    if name == "catalan":
        return sym_moments(catalan_recurrence())
    if name == "central-binomial":
        return sym_moments(central_binomial_recurrence())
    if name == "motzkin":
        return general_moments(motzkin_recurrence())
    if name == "motzkin-u":
        return motzkin_u(param)
    if name == "schroder-little":
        return sym_moments(schroder_little_recurrence())
    if name == "schroder-large":
        return sym_moments(schroder_large_recurrence())
    if name == "carlitz-q-catalan":
        return carlitz_q_catalan(param)
    if name == "andrews-q-catalan":
        return andrews_q_catalan_seq(param)
    if name == "q-central-binomial":
        return q_central_binomial_seq(param)
    if name == "double-factorial":
        return MomentSeq.from_func(double_factorial_moments, QQ,
                                   "double factorials (2n-1)!!")
    raise KeyError(f"unknown sequence {name!r}")
