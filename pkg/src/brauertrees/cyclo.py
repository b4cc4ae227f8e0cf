"""Exact arithmetic in cyclotomic fields, cyclotomic-type polynomials, and
certified sign computation for real cyclotomic numbers.

Everything here is exact: cyclotomic field elements are stored on the power
basis of Q(zeta_N) with Fraction coefficients, roots of unity are tracked as
rational exponents (fractions of a full turn), and signs of real values are
decided by interval refinement with certified error bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        if math.gcd(k, n) == 1:
            count += 1
    return count


@lru_cache(maxsize=None)
def cyclotomic_int(d: int) -> tuple[int, ...]:
    """Integer coefficients (low to high) of the d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    # x^d - 1 divided by all proper cyclotomic factors
    num = [-1] + [0] * (d - 1) + [1]
    for e in divisors(d):
        if e == d:
            continue
        den = cyclotomic_int(e)
        num = _zpoly_exact_div(num, list(den))
    return tuple(num)


def _zpoly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], den[-1])
        if r:
            raise ArithmeticError("non-exact integer polynomial division")
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact integer polynomial division")
    return out


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row k expresses zeta_n^(phi(n)+k) on the power basis 1..zeta^(phi(n)-1)."""
    deg = euler_phi(n)
    phi_n = cyclotomic_int(n)
    rows: list[tuple[Fraction, ...]] = []
    # zeta^deg = -(phi_n[0] + ... + phi_n[deg-1] zeta^(deg-1)); leading coeff is 1
    prev = [Fraction(-c) for c in phi_n[:deg]]
    rows.append(tuple(prev))
    for _ in range(deg, n):
        shifted = [ZERO] + prev[:-1]
        if prev[-1]:
            head = rows[0]
            shifted = [s + prev[-1] * h for s, h in zip(shifted, head)]
        prev = shifted
        rows.append(tuple(prev))
    return tuple(rows[: n - deg])


class CycNumber:
    """An element of Q(zeta_N), reduced modulo the N-th cyclotomic polynomial.

    Immutable; arithmetic between different conductors lifts to the lcm.
    """

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs: Sequence[Fraction]):
        deg = euler_phi(n)
        raw = [Fraction(x) for x in coeffs]
        if len(raw) > deg:
            folded = [ZERO] * n
            for k, coeff in enumerate(raw):
                if coeff:
                    folded[k % n] += coeff
            rows = _reduction_rows(n)
            vec = folded[:deg]
            for k, coeff in enumerate(folded[deg:]):
                if coeff:
                    row = rows[k]
                    vec = [b + coeff * r for b, r in zip(vec, row)]
        else:
            vec = raw + [ZERO] * (deg - len(raw))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", tuple(vec))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("CycNumber is immutable")

    # --- constructors -------------------------------------------------
    @staticmethod
    def from_rational(x) -> "CycNumber":
        return CycNumber(1, [Fraction(x)])

    @staticmethod
    def zeta_power(n: int, k: int) -> "CycNumber":
        k %= n
        return CycNumber(n, [ZERO] * k + [ONE])

    @staticmethod
    def root_of_unity(exponent: Fraction) -> "CycNumber":
        """e^(2*pi*i*exponent) for a rational exponent."""
        e = Fraction(exponent) % 1
        return CycNumber.zeta_power(e.denominator, e.numerator)

    # --- structure ----------------------------------------------------
    def lift(self, m: int) -> "CycNumber":
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("can only lift to a multiple of the conductor")
        step = m // self.n
        vec = [ZERO] * (self.n * step)
        for k, coeff in enumerate(self.c):
            vec[k * step] = coeff
        return CycNumber(m, vec)

    def _pair(self, other: "CycNumber") -> tuple["CycNumber", "CycNumber"]:
        m = self.n * other.n // math.gcd(self.n, other.n)
        return self.lift(m), other.lift(m)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.c[0] if self.c else ZERO

    # --- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "CycNumber":
        if isinstance(other, CycNumber):
            return other
        return CycNumber.from_rational(other)

    def __add__(self, other):
        a, b = self._pair(self._coerce(other))
        return CycNumber(a.n, [x + y for x, y in zip(a.c, b.c)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.n, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        b = self._coerce(other)
        if b.is_rational():
            r = b.as_rational()
            return CycNumber(self.n, [x * r for x in self.c])
        if self.is_rational():
            r = self.as_rational()
            return CycNumber(b.n, [x * r for x in b.c])
        a, b = self._pair(b)
        prod = [ZERO] * (2 * len(a.c) - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        prod[i + j] += x * y
        return CycNumber(a.n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycNumber.from_rational(1 / self.as_rational())
        # extended Euclid against Phi_n in Q[x]
        phi_n = [Fraction(c) for c in cyclotomic_int(self.n)]
        a = list(self.c)
        r0, r1 = phi_n, a
        s0, s1 = [ZERO], [ONE]
        while any(x != 0 for x in r1):
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        # r0 = gcd (a nonzero constant since Phi_n is irreducible)
        const = r0[0]
        inv = [x / const for x in s0]
        return CycNumber(self.n, inv)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNumber.from_rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, k: int) -> "CycNumber":
        """Apply zeta_n -> zeta_n^k (k coprime to the conductor)."""
        if math.gcd(k, self.n) != 1:
            raise ValueError("galois exponent must be coprime to the conductor")
        vec = [ZERO] * self.n
        for i, coeff in enumerate(self.c):
            vec[(i * k) % self.n] += coeff
        return CycNumber(self.n, vec)

    def conjugate(self) -> "CycNumber":
        if self.n == 1:
            return self
        return self.galois(self.n - 1)

    def is_real(self) -> bool:
        return self == self.conjugate()

    # --- canonical form -------------------------------------------------
    def minimal(self) -> "CycNumber":
        """Rewrite over the smallest cyclotomic subfield that contains self."""
        for d in divisors(self.n):
            if d == self.n:
                return self
            if self._descends_to(d):
                return self._rewrite(d)
        return self

    def _descends_to(self, d: int) -> bool:
        for k in range(2, self.n + 1):
            if math.gcd(k, self.n) == 1 and k % d == 1 % d:
                if self.galois(k) != self:
                    return False
        return True

    def _rewrite(self, d: int) -> "CycNumber":
        basis = _subfield_basis(self.n, d)
        target = list(self.c)
        sol = _solve_exact(basis, target)
        if sol is None:  # pragma: no cover - guarded by _descends_to
            raise ArithmeticError("subfield rewrite failed")
        return CycNumber(d, sol)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_rational(other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        a, b = self._pair(other)
        return a.c == b.c

    def __hash__(self):
        m = self.minimal()
        return hash((m.n, m.c))

    def __repr__(self):
        m = self.minimal()
        if m.is_rational():
            return str(m.as_rational())
        terms = []
        for k, coeff in enumerate(m.c):
            if coeff == 0:
                continue
            if k == 0:
                terms.append(str(coeff))
            else:
                terms.append(f"{coeff}*z{m.n}^{k}" if k > 1 else f"{coeff}*z{m.n}")
        return "(" + " + ".join(terms) + ")"

    # --- numeric enclosure ----------------------------------------------
    def real_interval(self, prec: int) -> tuple[Fraction, Fraction]:
        """Certified enclosure of the real part, width about 10^-prec."""
        lo = hi = ZERO
        for k, coeff in enumerate(self.c):
            if coeff == 0:
                continue
            clo, chi = cos_interval(Fraction(k, self.n), prec)
            tlo, thi = _scale_interval(clo, chi, coeff)
            lo += tlo
            hi += thi
        return lo, hi

    def imag_interval(self, prec: int) -> tuple[Fraction, Fraction]:
        lo = hi = ZERO
        for k, coeff in enumerate(self.c):
            if coeff == 0:
                continue
            slo, shi = sin_interval(Fraction(k, self.n), prec)
            tlo, thi = _scale_interval(slo, shi, coeff)
            lo += tlo
            hi += thi
        return lo, hi


@lru_cache(maxsize=None)
def _subfield_basis(n: int, d: int) -> tuple[tuple[Fraction, ...], ...]:
    cols = []
    for j in range(euler_phi(d)):
        cols.append(CycNumber.zeta_power(d, j).lift(n).c)
    return tuple(cols)


def _solve_exact(cols: Sequence[Sequence[Fraction]], target: Sequence[Fraction]):
    """Solve sum_j x_j cols[j] = target over Q, or None if inconsistent."""
    m = len(target)
    k = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])]
           for i in range(m)]
    piv_cols: list[int] = []
    row = 0
    for col in range(k):
        sel = None
        for r in range(row, m):
            if aug[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        piv_cols.append(col)
        row += 1
    sol = [ZERO] * k
    for r, col in enumerate(piv_cols):
        sol[col] = aug[r][k]
    for r in range(row, m):
        if aug[r][k] != 0:
            return None
    # verify (columns may be rank deficient)
    for i in range(m):
        acc = ZERO
        for j in range(k):
            acc += sol[j] * cols[j][i]
        if acc != target[i]:
            return None
    return sol


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError
    q = [ZERO] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        pos = len(a) - len(b)
        q[pos] = f
        for i, bc in enumerate(b):
            a[pos + i] -= f * bc
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _qpoly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _qpoly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = list(a) + [ZERO] * (n - len(a))
    b = list(b) + [ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# --- certified trigonometric enclosures -------------------------------


@lru_cache(maxsize=None)
def pi_interval(prec: int) -> tuple[Fraction, Fraction]:
    """Machin's formula with alternating-series error bounds."""
    def arctan_inv(x: int) -> tuple[Fraction, Fraction]:
        total = ZERO
        k = 0
        bound = Fraction(1, 10 ** (prec + 4))
        while True:
            term = Fraction(1, (2 * k + 1) * x ** (2 * k + 1))
            if k % 2:
                total -= term
            else:
                total += term
            nxt = Fraction(1, (2 * k + 3) * x ** (2 * k + 3))
            if nxt < bound:
                if k % 2:
                    return total, total + nxt
                return total - nxt, total
            k += 1

    a5 = arctan_inv(5)
    a239 = arctan_inv(239)
    lo = 16 * a5[0] - 4 * a239[1]
    hi = 16 * a5[1] - 4 * a239[0]
    return lo, hi


def _scale_interval(lo: Fraction, hi: Fraction, c: Fraction):
    if c >= 0:
        return lo * c, hi * c
    return hi * c, lo * c


def _cos_taylor(tlo: Fraction, thi: Fraction, terms: int):
    """cos on the interval [tlo, thi] subset of [0, 7] by Taylor with remainder."""
    def at(t: Fraction) -> tuple[Fraction, Fraction]:
        acc = ZERO
        power = ONE
        fact = 1
        for k in range(terms):
            if k:
                power *= t * t
                fact *= (2 * k - 1) * (2 * k)
            acc += (-1) ** k * power / fact
        rem_p = power * t * t
        rem_f = fact * (2 * terms - 1) * (2 * terms)
        rem = rem_p / rem_f
        return acc - rem, acc + rem

    lo1, hi1 = at(tlo)
    lo2, hi2 = at(thi)
    # cos is not monotone on [0, 2pi); take the hull and clip to [-1, 1]
    lo = min(lo1, lo2)
    hi = max(hi1, hi2)
    # widen by function variation bound: |cos(a)-cos(b)| <= |a-b|
    spread = thi - tlo
    lo = max(Fraction(-1), lo - spread)
    hi = min(Fraction(1), hi + spread)
    return lo, hi


@lru_cache(maxsize=None)
def cos_interval(turns: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    """Certified enclosure of cos(2*pi*turns)."""
    f = Fraction(turns) % 1
    if f == 0:
        return ONE, ONE
    if 2 * f == 1:
        return Fraction(-1), Fraction(-1)
    if 4 * f == 1 or 4 * f == 3:
        return ZERO, ZERO
    plo, phi_ = pi_interval(prec)
    tlo, thi = _scale_interval(2 * plo, 2 * phi_, f)
    terms = 8
    while True:
        # remainder t^(2k)/(2k)! must be small; grow terms until
        # (2*pi)^(2*terms)/(2*terms)! < 10^-(prec+2)
        bound = Fraction(7) ** (2 * terms)
        fact = math.factorial(2 * terms)
        if bound / fact < Fraction(1, 10 ** (prec + 2)):
            break
        terms += 4
    return _cos_taylor(tlo, thi, terms)


@lru_cache(maxsize=None)
def sin_interval(turns: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    return cos_interval(Fraction(turns) - Fraction(1, 4), prec)


def sign_of_real(x) -> int:
    """Exact sign of a real cyclotomic number (-1, 0, +1).

    Decided by interval refinement with adaptive precision doubling; the
    loop terminates because a nonzero value has a fixed distance from 0.
    """
    if isinstance(x, (int, Fraction)):
        v = Fraction(x)
        return 0 if v == 0 else (1 if v > 0 else -1)
    if not isinstance(x, CycNumber):
        raise TypeError("expected a CycNumber or rational")
    if not x.is_real():
        raise ValueError("sign is only defined for real values")
    if x.is_zero():
        return 0
    if x.is_rational():
        v = x.as_rational()
        return 1 if v > 0 else -1
    prec = 20
    while True:
        lo, hi = x.real_interval(prec)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        prec *= 2


# --- polynomials over cyclotomic numbers -------------------------------


def _coerce_cyc(x) -> CycNumber:
    if isinstance(x, CycNumber):
        return x
    return CycNumber.from_rational(x)


class QPoly:
    """Polynomial in q with CycNumber coefficients (low to high)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        vec = [_coerce_cyc(c) for c in coeffs]
        while vec and vec[-1].is_zero():
            vec.pop()
        object.__setattr__(self, "coeffs", tuple(vec))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("QPoly is immutable")

    @staticmethod
    def zero() -> "QPoly":
        return QPoly([])

    @staticmethod
    def one() -> "QPoly":
        return QPoly([1])

    @staticmethod
    def monomial(k: int, coeff=1) -> "QPoly":
        return QPoly([0] * k + [coeff])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if self.is_zero():
            raise ValueError("degree of the zero polynomial")
        return len(self.coeffs) - 1

    def valuation(self) -> int:
        if self.is_zero():
            raise ValueError("valuation of the zero polynomial")
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        raise AssertionError

    def leading(self) -> CycNumber:
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = other if isinstance(other, QPoly) else QPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [_coerce_cyc(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [_coerce_cyc(0)] * (n - len(other.coeffs))
        return QPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = other if isinstance(other, QPoly) else QPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return QPoly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            return QPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return QPoly.zero()
        out = [_coerce_cyc(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return QPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if other.is_zero():
            raise ZeroDivisionError
        rem = list(self.coeffs)
        quot = [_coerce_cyc(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = other.leading()
        while len(rem) >= len(other.coeffs):
            f = rem[-1] / dlead
            pos = len(rem) - len(other.coeffs)
            quot[pos] = f
            for i, oc in enumerate(other.coeffs):
                rem[pos + i] = rem[pos + i] - f * oc
            while rem and rem[-1].is_zero():
                rem.pop()
        return QPoly(quot), QPoly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "QPoly") -> "QPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("non-exact polynomial division")
        return q

    def derivative(self) -> "QPoly":
        return QPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = _coerce_cyc(0)
        for c in reversed(self.coeffs):
            acc = acc * _coerce_cyc(x) + c
        return acc

    def reverse(self, n: int | None = None) -> "QPoly":
        """q^n * p(1/q); n defaults to deg p."""
        if self.is_zero():
            return self
        if n is None:
            n = self.degree()
        if n < self.degree():
            raise ValueError("reversal length below degree")
        vec = [_coerce_cyc(0)] * (n + 1)
        for k, c in enumerate(self.coeffs):
            vec[n - k] = c
        return QPoly(vec)

    def shift(self, k: int) -> "QPoly":
        if self.is_zero():
            return self
        return QPoly([0] * k + list(self.coeffs))

    def has_real_coeffs(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if k == 0:
                parts.append(repr(c))
            elif k == 1:
                parts.append(f"{c!r}*q")
            else:
                parts.append(f"{c!r}*q^{k}")
        return " + ".join(parts)


def gcd_poly(a: QPoly, b: QPoly) -> QPoly:
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a * a.leading().inverse()


def squarefree_part(p: QPoly) -> QPoly:
    g = gcd_poly(p, p.derivative())
    if g.is_zero() or (len(g.coeffs) == 1):
        return p
    return p.exact_div(g)


def _sturm_chain(p: QPoly) -> list[QPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and len(chain[-1].coeffs) > 1:
        rem = chain[-2] % chain[-1]
        if rem.is_zero():
            break
        chain.append(-rem)
    if chain[-1].is_zero():
        chain.pop()
    return chain

def _sign_variations(signs: list[int]) -> int:
    seq = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a * b < 0)


def count_roots_above(p: QPoly, lower: Fraction) -> int:
    """Number of distinct real roots of p in the open interval (lower, inf)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = squarefree_part(p)
    lower = Fraction(lower)
    # strip roots exactly at the endpoint so the count is over the open ray
    lin = QPoly([-lower, 1])
    while not p.is_zero() and p(lower).is_zero():
        p = p.exact_div(lin)
    if len(p.coeffs) <= 1:
        return 0
    chain = _sturm_chain(p)
    at_lower = [sign_of_real(f(lower)) for f in chain]
    at_inf = [sign_of_real(f.leading()) for f in chain]
    return _sign_variations(at_lower) - _sign_variations(at_inf)


def positive_on_ray(p: QPoly, lower) -> bool:
    """True iff p(q) > 0 for every real q > lower, decided exactly."""
    if not p.has_real_coeffs():
        raise ValueError("positive_on_ray needs real coefficients")
    if p.is_zero():
        return False
    if len(p.coeffs) == 1:
        return sign_of_real(p.coeffs[0]) > 0
    if sign_of_real(p.leading()) <= 0:
        return False
    return count_roots_above(p, Fraction(lower)) == 0


# --- cyclotomic-type factor labels -------------------------------------

SPLIT_D = (5, 10, 15, 20, 30)


@dataclass(frozen=True, order=True)
class CycFactorLabel:
    """A cyclotomic-type irreducible factor over the relevant real subfield.

    kind is one of "phi" (Phi_d over Q), "phi1" (the primed split factor),
    "phi2" (the double-primed factor, the one vanishing at zeta_d), or
    "phin" (the dihedral factor with roots zeta_n^(+-i)).
    """

    kind: str
    d: int
    i: int = 0

    def __post_init__(self):
        if self.kind not in ("phi", "phi1", "phi2", "phin"):
            raise ValueError(f"bad factor kind {self.kind!r}")
        if self.kind in ("phi1", "phi2") and self.d not in SPLIT_D:
            raise ValueError(f"Phi_{self.d} does not split over Q(sqrt5)")
        if self.kind == "phin" and not (1 <= self.i < Fraction(self.d, 2)):
            raise ValueError("phin label needs 1 <= i < n/2")

    def roots(self) -> tuple[Fraction, ...]:
        """Exact root exponents (fractions of a full turn)."""
        if self.kind == "phi":
            return tuple(Fraction(k, self.d) % 1 for k in range(1, self.d + 1)
                         if math.gcd(k, self.d) == 1)
        if self.kind in ("phi1", "phi2"):
            want = (1, 4) if self.kind == "phi2" else (2, 3)
            return tuple(Fraction(k, self.d) for k in range(1, self.d + 1)
                         if math.gcd(k, self.d) == 1 and k % 5 in want)
        return (Fraction(self.i, self.d), Fraction(self.d - self.i, self.d))

    def poly_degree(self) -> int:
        return len(self.roots())

    def defining_root(self) -> Fraction:
        return min(self.roots())

    def __str__(self):
        if self.kind == "phi":
            return f"Phi{self.d}"
        if self.kind == "phi1":
            return f"Phi{self.d}'"
        if self.kind == "phi2":
            return f"Phi{self.d}''"
        return f"Phi{self.d}^({self.i})"

    @staticmethod
    def parse(s: str) -> "CycFactorLabel":
        s = s.strip()
        if not s.startswith("Phi"):
            raise ValueError(f"bad factor label {s!r}")
        body = s[3:]
        if body.endswith("''"):
            return CycFactorLabel("phi2", int(body[:-2]))
        if body.endswith("'"):
            return CycFactorLabel("phi1", int(body[:-1]))
        if "^" in body:
            dpart, ipart = body.split("^")
            return CycFactorLabel("phin", int(dpart), int(ipart.strip("()")))
        return CycFactorLabel("phi", int(body))


def phi(d: int) -> CycFactorLabel:
    return CycFactorLabel("phi", d)


def phi_prime(d: int) -> CycFactorLabel:
    return CycFactorLabel("phi1", d)


def phi_dprime(d: int) -> CycFactorLabel:
    return CycFactorLabel("phi2", d)


def phi_n(n: int, i: int) -> CycFactorLabel:
    return CycFactorLabel("phin", n, i)


def cyclotomic(d: int) -> QPoly:
    """The monic integer d-th cyclotomic polynomial as a QPoly."""
    return QPoly([Fraction(c) for c in cyclotomic_int(d)])


@lru_cache(maxsize=None)
def split_factors(label: CycFactorLabel) -> QPoly:
    """Expand a factor label from its root convention, not from a lookup table.

    The result is monic with coefficients in the appropriate real subfield.
    """
    if label.kind == "phi":
        return cyclotomic(label.d)
    out = QPoly.one()
    for r in label.roots():
        out = out * QPoly([-CycNumber.root_of_unity(r), 1])
    if not out.has_real_coeffs():  # pragma: no cover - convention guarantees it
        raise ArithmeticError(f"{label} did not descend to the real subfield")
    return QPoly([c.minimal() for c in out.coeffs])


def sqrt5() -> CycNumber:
    """sqrt(5) = 1 + 2*zeta5 + 2*zeta5^4, exactly."""
    return CycNumber(5, [ONE, Fraction(2), ZERO, ZERO]) + \
        CycNumber.zeta_power(5, 4) * 2
