"""Dense univariate polynomial arithmetic over the prime field F_p.

A polynomial a_0 + a_1 t + ... + a_n t^n is stored as the tuple
(a_0, ..., a_n) of residues in [0, p) with a_n != 0; the zero polynomial
is the empty tuple and reports degree NEG_INF.  All operations are pure
and return new values, so polynomials can be shared freely.

The prime p is capped below 2**16 so every scalar product fits well
inside machine integers before reduction.
"""

from __future__ import annotations

from dataclasses import dataclass

NEG_INF = float("-inf")
INFINITE = float("inf")

MAX_PRIME = 1 << 16


def is_prime(n: int) -> bool:
    """Trial-division primality check, adequate for p < 2**16."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldConfig:
    """The prime modulus shared by every value of one computation."""

    p: int

    def __post_init__(self):
        if not 2 <= self.p < MAX_PRIME:
            raise ValueError(f"prime modulus must lie in [2, 2^16), got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")


class FpPoly:
    """Immutable dense polynomial over F_p in one variable (written t).

    Supports +, -, *, divmod, //, %, ** and ==/hash.  Construction
    reduces coefficients mod p and strips trailing zeros.
    """

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("FpPoly is immutable")

    @classmethod
    def zero(cls, p):
        return cls((), p)

    @classmethod
    def one(cls, p):
        return cls((1,), p)

    @classmethod
    def const(cls, c, p):
        return cls((c,), p)

    @classmethod
    def x(cls, p):
        """The polynomial t."""
        return cls((0, 1), p)

    @property
    def degree(self):
        """Degree of the polynomial; NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        """Coefficient of t^i (zero beyond the stored degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def _check(self, other):
        if not isinstance(other, FpPoly):
            raise TypeError(f"expected FpPoly, got {type(other).__name__}")
        if other.p != self.p:
            raise ValueError("mixed moduli")
        return other

    def __add__(self, other):
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return FpPoly(out, self.p)

    def __neg__(self):
        return FpPoly([-c for c in self.coeffs], self.p)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPoly.zero(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return FpPoly(out, self.p)

    def scale(self, c):
        """Multiply by the scalar c."""
        return FpPoly([c * a for a in self.coeffs], self.p)

    def shift(self, k):
        """Multiply by t^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero():
            return self
        return FpPoly((0,) * k + self.coeffs, self.p)

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        lb_inv = pow(other.leading(), -1, p)
        q = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] % p
            if c == 0:
                continue
            factor = (c * lb_inv) % p
            q[i - db] = factor
            for j, bc in enumerate(other.coeffs):
                rem[i - db + j] = (rem[i - db + j] - factor * bc) % p
        return FpPoly(q, p), FpPoly(rem, p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        """True when self divides other exactly."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = FpPoly.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self):
        """Scale so the leading coefficient is 1 (zero stays zero)."""
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        return self.scale(pow(self.coeffs[-1], -1, self.p))

    def eval(self, x):
        """Value at the scalar x (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, FpPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"FpPoly({self.to_string()!r}, p={self.p})"

    def to_string(self, var="t"):
        """Canonical string, terms by increasing degree, e.g. '1+t^2'."""
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                exp = "" if i == 1 else f"^{i}"
                parts.append(f"{head}{var}{exp}")
        return "+".join(parts)


def gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic greatest common divisor (gcd(0, 0) = 0)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def content(polys) -> FpPoly:
    """Monic gcd of a collection of polynomials; all-zero input is an error."""
    acc = None
    for q in polys:
        if q.is_zero():
            continue
        acc = q if acc is None else gcd(acc, q)
        if acc.degree == 0:
            return acc.monic()
    if acc is None:
        raise ValueError("content of an all-zero collection is undefined")
    return acc.monic()


def frobenius_pow(a: FpPoly, e: int) -> FpPoly:
    """a**(p**e), computed by spreading exponents by a factor p**e.

    Coefficients are fixed by the p-th power map on F_p, so the result is
    a with t replaced by t**(p**e).
    """
    if e < 0:
        raise ValueError("negative Frobenius exponent")
    if e == 0 or a.is_zero():
        return a
    step = a.p**e
    out = [0] * (a.degree * step + 1)
    for i, c in enumerate(a.coeffs):
        out[i * step] = c
    return FpPoly(out, a.p)


def ord_at(a: FpPoly, g: FpPoly):
    """Multiplicity of g in a: the largest m with g**m | a.

    Returns INFINITE for a = 0.  g must be non-constant (and should be
    irreducible for the valuation reading).
    """
    if g.degree == NEG_INF or g.degree < 1:
        raise ValueError("ord_at needs a non-constant divisor")
    if a.is_zero():
        return INFINITE
    m = 0
    while True:
        q, r = divmod(a, g)
        if not r.is_zero():
            return m
        a = q
        m += 1


def neg_log_infinity_norm(a: FpPoly):
    """-deg(a), the Newton-point ordinate for the degree norm; INFINITE at 0."""
    if a.is_zero():
        return INFINITE
    return -a.degree


def _pth_power_mod(a: FpPoly, mod: FpPoly) -> FpPoly:
    # a^p mod `mod`, via exponent spreading (coefficients are Frobenius-fixed)
    return frobenius_pow(a, 1) % mod


def is_irreducible(a: FpPoly) -> bool:
    """Deterministic irreducibility test over F_p.

    A reducible polynomial of degree n has an irreducible factor of degree
    at most n//2, and t^(p^i) - t is the product of all monic irreducibles
    of degree dividing i; so a is irreducible iff gcd(a, t^(p^i) - t) is
    constant for every i <= n//2.
    """
    n = a.degree
    if n == NEG_INF or n < 1:
        raise ValueError("irreducibility is only defined for non-constant polynomials")
    if n == 1:
        return True
    t = FpPoly.x(a.p)
    h = t % a
    for _ in range(n // 2):
        h = _pth_power_mod(h, a)
        if gcd(a, h - t).degree >= 1:
            return False
    return True


def factor_monic(a: FpPoly) -> dict:
    """Factor a != 0 into monic irreducibles, {factor: multiplicity}.

    Trial division against monic irreducibles of increasing degree; fine
    at desk-scale degrees.
    """
    if a.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    factors = {}
    rest = a.monic()
    d = 1
    while rest.degree >= 1:
        if d > rest.degree // 2:
            factors[rest] = factors.get(rest, 0) + 1
            break
        for g in _monic_polys_of_degree(d, rest.p):
            if not is_irreducible(g):
                continue
            while g.divides(rest):
                factors[g] = factors.get(g, 0) + 1
                rest = rest // g
        d += 1
    return factors


def monic_divisors(a: FpPoly):
    """All monic divisors of a != 0, sorted by coefficient tuple."""
    divisors = [FpPoly.one(a.p)]
    for g, m in factor_monic(a).items():
        divisors = [d0 * g**k for d0 in divisors for k in range(m + 1)]
    return sorted(set(divisors), key=lambda q: q.coeffs)


def _monic_polys_of_degree(d, p):
    # all monic polynomials of degree d over F_p, lexicographic in coefficients
    total = p**d
    for code in range(total):
        cs = []
        c = code
        for _ in range(d):
            cs.append(c % p)
            c //= p
        cs.append(1)
        yield FpPoly(cs, p)


def irreducibles_up_to_degree(dmax, p):
    """Monic irreducible polynomials of degree 1..dmax, in degree-lex order."""
    out = []
    for d in range(1, dmax + 1):
        for g in _monic_polys_of_degree(d, p):
            if is_irreducible(g):
                out.append(g)
    return out
