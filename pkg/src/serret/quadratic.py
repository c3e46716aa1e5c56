"""Exact arithmetic on quadratic irrationals (P + sqrt(D)) / Q."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


def isqrt(n: int) -> int:
    """Largest k with k*k <= n."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


@dataclass(frozen=True, eq=False)
class QuadraticIrrational:
    """The real number (P + sqrt(D)) / Q.

    Construction rescales the fields so that Q divides D - P**2, which is
    what the integer-only expansion recurrence needs. Equality compares
    values, not fields.
    """

    P: int
    D: int
    Q: int

    def __post_init__(self):
        P, D, Q = int(self.P), int(self.D), int(self.Q)
        if Q == 0:
            raise DomainError("denominator Q must be nonzero")
        if D <= 0 or is_perfect_square(D):
            raise DomainError(f"value is rational (D={D} is a perfect square)"
                              if D >= 0 else f"radicand must be positive, got {D}")
        if (D - P * P) % Q:
            aq = abs(Q)
            P, D, Q = P * aq, D * Q * Q, Q * aq
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "Q", Q)

    def __eq__(self, other):
        if not isinstance(other, QuadraticIrrational):
            return NotImplemented
        return qi_equal(self, other)

    __hash__ = None

    def __neg__(self):
        return QuadraticIrrational(self.P, self.D, -self.Q)

    def __float__(self):
        return (self.P + math.sqrt(self.D)) / self.Q

    def floor(self) -> int:
        return qi_floor(self)

    def __repr__(self):
        return f"QuadraticIrrational(P={self.P}, D={self.D}, Q={self.Q})"


def qi_floor(x: QuadraticIrrational) -> int:
    # floor((P + sqrt D)/|Q|) == (P + isqrt D) // |Q|; for Q < 0 the value
    # is never an integer, so floor(-y) = -floor(y) - 1.
    s = math.isqrt(x.D)
    if x.Q > 0:
        return (x.P + s) // x.Q
    return -((x.P + s) // -x.Q) - 1


def qi_equal(x: QuadraticIrrational, y: QuadraticIrrational) -> bool:
    # sqrt(D) is irrational, so rational and irrational parts match separately.
    return (
        _sign(x.Q) == _sign(y.Q)
        and x.D * y.Q * y.Q == y.D * x.Q * x.Q
        and x.P * y.Q == y.P * x.Q
    )


def qi_mobius(M, x: QuadraticIrrational) -> QuadraticIrrational:
    """Exact value of (a*x + b) / (c*x + d) for a matrix M with det +-1."""
    a, b, c, d = M.a, M.b, M.c, M.d
    det = a * d - b * c
    if det not in (1, -1):
        raise DomainError(f"matrix determinant must be +-1, got {det}")
    P, D, Q = x.P, x.D, x.Q
    # x = (P + sqrt D)/Q, so y = (A + a sqrt D) / (C + c sqrt D)
    A = a * P + b * Q
    C = c * P + d * Q
    num = A * C - a * c * D
    k = det * Q  # coefficient of sqrt D after multiplying by the conjugate
    den = C * C - c * c * D
    g = math.gcd(num, k, den)
    num, k, den = num // g, k // g, den // g
    if k < 0:
        num, k, den = -num, -k, -den
    return QuadraticIrrational(num, k * k * D, den)


def qi_add_int(x: QuadraticIrrational, r: int) -> QuadraticIrrational:
    return QuadraticIrrational(x.P + r * x.Q, x.D, x.Q)


def qi_reciprocal(x: QuadraticIrrational) -> QuadraticIrrational:
    # Q/(P + sqrt D) = Q(sqrt D - P)/(D - P^2); Q | D - P^2 by construction
    return QuadraticIrrational(-x.P, x.D, (x.D - x.P * x.P) // x.Q)
