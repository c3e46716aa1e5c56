"""Finite and eventually periodic continued fractions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError
from .matrix import UniModMatrix
from .quadratic import QuadraticIrrational, isqrt, qi_mobius


class ConvergentTable:
    """Numerators p_n and denominators q_n of [a0, ..., a_n], indexed from -2."""

    def __init__(self, terms: Sequence[int]):
        p = [0, 1]
        q = [1, 0]
        for a in terms:
            p.append(a * p[-1] + p[-2])
            q.append(a * q[-1] + q[-2])
        self.p = p
        self.q = q

    def __len__(self):
        return len(self.p) - 2

    def __getitem__(self, n: int) -> tuple[int, int]:
        if n < -2 or n >= len(self):
            raise IndexError(n)
        return self.p[n + 2], self.q[n + 2]

    def matrix(self, n: int) -> tuple[int, int, int, int]:
        """Entries (p_n, p_{n-1}, q_n, q_{n-1}) of the map x -> [a0, ..., a_n, x]."""
        p1, q1 = self[n]
        p2, q2 = self[n - 1]
        return p1, p2, q1, q2


def convergents(terms: Sequence[int], n: int) -> tuple[int, int]:
    return ConvergentTable(terms[: max(n + 1, 0)])[n]


def _check_terms(terms, start=1):
    for i in range(start, len(terms)):
        if terms[i] < 1:
            raise DomainError(f"partial quotient at index {i} must be >= 1, got {terms[i]}")


@dataclass(frozen=True)
class FiniteCF:
    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        if not terms:
            raise DomainError("finite continued fraction needs at least one term")
        _check_terms(terms)
        object.__setattr__(self, "terms", terms)

    def __len__(self):
        return len(self.terms)

    def value(self) -> Fraction:
        p, q = ConvergentTable(self.terms)[len(self.terms) - 1]
        return Fraction(p, q)


def rational_expansions(a: int, c: int) -> tuple[FiniteCF, FiniteCF]:
    """Both expansions of a/c: the Euclidean one and its length +-1 variant."""
    if c <= 0:
        raise DomainError(f"denominator must be positive, got {c}")
    terms = []
    while c:
        q, r = divmod(a, c)
        terms.append(q)
        a, c = c, r
    if len(terms) == 1:
        variant = [terms[0] - 1, 1]
    else:
        variant = terms[:-1] + [terms[-1] - 1, 1]
    return FiniteCF(tuple(terms)), FiniteCF(tuple(variant))


def _rotate(seq, s):
    s %= len(seq)
    return seq[s:] + seq[:s]


def _primitive_root(period):
    m = len(period)
    for k in range(1, m):
        if m % k == 0 and period[:k] * (m // k) == period:
            return period[:k]
    return period


@dataclass(frozen=True)
class PeriodicCF:
    """The sequence preperiod + period + period + ..., kept in canonical form.

    Canonical: the period is primitive and the preperiod cannot be shortened
    by rolling its last entry into the period. Two PeriodicCFs are equal
    exactly when they describe the same sequence.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        pre = tuple(int(t) for t in self.preperiod)
        per = tuple(int(t) for t in self.period)
        if not per:
            raise DomainError("period must be nonempty")
        _check_terms(pre)
        _check_terms(per, start=0)
        m = len(per)
        t = 0
        while t < len(pre) and pre[-1 - t] == per[(m - 1 - t) % m]:
            t += 1
        if t:
            pre, per = pre[: len(pre) - t], _rotate(per, -t)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", _primitive_root(per))

    def term(self, n: int) -> int:
        k = len(self.preperiod)
        if n < k:
            return self.preperiod[n]
        return self.period[(n - k) % len(self.period)]

    def terms(self, count: int) -> list[int]:
        return [self.term(n) for n in range(count)]

    def unrolled(self, length: int) -> tuple[list[int], tuple[int, ...]]:
        """A prefix of at least `length` terms and the period that follows it."""
        k = len(self.preperiod)
        n = max(length, k)
        return self.terms(n), _rotate(self.period, n - k)

    @property
    def a0(self) -> int:
        return self.term(0)


def expand(x: QuadraticIrrational) -> PeriodicCF:
    """Continued fraction of x, via the integer recurrence on (P, Q)."""
    P, D, Q = x.P, x.D, x.Q
    s = isqrt(D)
    seen = {}
    terms = []
    while (P, Q) not in seen:
        seen[P, Q] = len(terms)
        # same as qi_floor of the complete quotient (P + sqrt D)/Q
        a = (P + s) // Q if Q > 0 else -((P + s) // -Q) - 1
        terms.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[P, Q]
    return PeriodicCF(tuple(terms[:start]), tuple(terms[start:]))


def value(cf: PeriodicCF) -> QuadraticIrrational:
    m = len(cf.period)
    p1, p2, q1, q2 = ConvergentTable(cf.period).matrix(m - 1)
    # the tail y = [period, y] solves q1 y^2 + (q2 - p1) y - p2 = 0, y > 1
    b = p1 - q2
    tail = QuadraticIrrational(b, b * b + 4 * q1 * p2, 2 * q1)
    if not cf.preperiod:
        return tail
    k = len(cf.preperiod)
    return qi_mobius(UniModMatrix(*ConvergentTable(cf.preperiod).matrix(k - 1)), tail)


def negate(cf: PeriodicCF) -> PeriodicCF:
    prefix, period = cf.unrolled(3)
    a0, a1 = prefix[0], prefix[1]
    if a1 > 1:
        new = [-a0 - 1, 1, a1 - 1] + prefix[2:]
    else:
        new = [-a0 - 1, prefix[2] + 1] + prefix[3:]
    return PeriodicCF(tuple(new), period)


def invert(cf: PeriodicCF) -> PeriodicCF:
    a0 = cf.a0
    if a0 >= 1:
        return PeriodicCF((0,) + cf.preperiod, cf.period)
    if a0 == 0:
        return head_peel(cf)
    return negate(invert(negate(cf)))


def translate(cf: PeriodicCF, r: int) -> PeriodicCF:
    prefix, period = cf.unrolled(1)
    prefix[0] += r
    return PeriodicCF(tuple(prefix), period)


def head_peel(cf: PeriodicCF) -> PeriodicCF:
    """Drop a0: the continued fraction of the first complete quotient."""
    prefix, period = cf.unrolled(1)
    return PeriodicCF(tuple(prefix[1:]), period)


def _find_rotation(period_x, period_y) -> Optional[int]:
    # s with period_x rotated left by s == period_y
    if len(period_x) != len(period_y):
        return None
    hay = "," + ",".join(map(str, period_x + period_x)) + ","
    pos = hay.find("," + ",".join(map(str, period_y)) + ",")
    if pos < 0:
        return None
    return hay.count(",", 0, pos)


def tail_match(cf_x: PeriodicCF, cf_y: PeriodicCF) -> Optional[tuple[int, int]]:
    """Lexicographically least (i, j) with x_i == y_j, or None."""
    s0 = _find_rotation(cf_x.period, cf_y.period)
    if s0 is None:
        return None
    m = len(cf_x.period)
    kx, ky = len(cf_x.preperiod), len(cf_y.preperiod)
    # Far along a diagonal i - j = d the tails agree iff d = s0 + kx - ky mod m.
    # A least match has i < kx + m and j < ky + m.
    best = None
    d0 = (s0 + kx - ky) % m
    d = -(ky + m) + ((d0 + ky + m) % m)
    while d < kx + m:
        i = max(kx, ky + d)
        j = i - d
        while i > 0 and j > 0 and cf_x.term(i - 1) == cf_y.term(j - 1):
            i -= 1
            j -= 1
        if best is None or (i, j) < best:
            best = (i, j)
        d += m
    return best
