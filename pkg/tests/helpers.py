"""Random generators and oracles that do not go through the code under test."""

import math
import random
from decimal import Decimal, getcontext

from serret import GeneratorWord, PeriodicCF, QuadraticIrrational, is_perfect_square

getcontext().prec = 120


def random_qi(rng: random.Random, bound=1000) -> QuadraticIrrational:
    while True:
        P = rng.randint(-bound, bound)
        D = rng.randint(2, bound)
        Q = rng.choice((-1, 1)) * rng.randint(1, bound)
        if math.isqrt(D) ** 2 != D:
            return QuadraticIrrational(P, D, Q)


def random_word(rng: random.Random, max_blocks=8, max_exp=10) -> GeneratorWord:
    n = rng.randint(0, max_blocks - 1)
    if n == 0:
        return GeneratorWord(rng.randint(0, 1), (rng.randint(-max_exp, max_exp),))
    exps = [rng.randint(-max_exp, max_exp)]
    exps += [rng.randint(1, max_exp) for _ in range(n - 1)]
    exps.append(rng.randint(-max_exp, max_exp))
    return GeneratorWord(0, tuple(exps))


def random_cf(rng: random.Random, max_pre=4, max_per=4, max_term=10) -> PeriodicCF:
    pre = [rng.randint(1, max_term) for _ in range(rng.randint(0, max_pre))]
    if pre:
        pre[0] = rng.randint(-max_term, max_term)
    per = [rng.randint(1, max_term) for _ in range(rng.randint(1, max_per))]
    return PeriodicCF(tuple(pre), tuple(per))


def sign_minus_int(x: QuadraticIrrational, m: int) -> int:
    """Exact sign of x - m, by squaring only after the sign analysis."""
    u = x.P - m * x.Q  # x - m = (u + sqrt D)/Q
    s = 1 if u >= 0 else (1 if x.D > u * u else -1)
    return s if x.Q > 0 else -s


def dec(x: QuadraticIrrational) -> Decimal:
    return (Decimal(x.P) + Decimal(x.D).sqrt()) / Decimal(x.Q)


def dec_cf_terms(x: QuadraticIrrational, count: int) -> list:
    """Leading partial quotients from a 120-digit decimal approximation."""
    v = dec(x)
    out = []
    for _ in range(count):
        a = int(v.to_integral_value(rounding="ROUND_FLOOR"))
        out.append(a)
        v = 1 / (v - a)
    return out


def min_poly(x: QuadraticIrrational):
    """Coefficients (A, B, C) with A x^2 + B x + C = 0."""
    return x.Q * x.Q, -2 * x.P * x.Q, x.P * x.P - x.D


def proportional(u, v) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i in range(3) for j in range(3))


def image_is(M, x: QuadraticIrrational, y: QuadraticIrrational) -> bool:
    """y == (a x + b)/(c x + d), checked through minimal polynomials plus a
    high-precision comparison to pick the right root."""
    A, B, C = min_poly(x)
    a, b, c, d = M.a, M.b, M.c, M.d
    # x = (d y - b)/(a - c y), substitute and clear denominators
    poly = (
        A * d * d - B * d * c + C * c * c,
        -2 * A * d * b + B * (d * a + b * c) - 2 * C * a * c,
        A * b * b - B * b * a + C * a * a,
    )
    if not proportional(poly, min_poly(y)):
        return False
    xv = dec(x)
    return abs((a * xv + b) / (c * xv + d) - dec(y)) < Decimal("1e-60")


def convergents_naive(terms):
    """p_n, q_n for n = -2 .. len-1 as dicts."""
    p = {-2: 0, -1: 1}
    q = {-2: 1, -1: 0}
    for n, a in enumerate(terms):
        p[n] = a * p[n - 1] + p[n - 2]
        q[n] = a * q[n - 1] + q[n - 2]
    return p, q


def tail_match_bruteforce(cx: PeriodicCF, cy: PeriodicCF):
    mx, my = len(cx.period), len(cy.period)
    kx, ky = len(cx.preperiod), len(cy.preperiod)
    window = max(kx, ky) + 2 * math.lcm(mx, my) + 4
    xs = cx.terms(kx + mx + window)
    ys = cy.terms(ky + my + window)
    for i in range(kx + mx):
        for j in range(ky + my):
            if xs[i:i + window] == ys[j:j + window]:
                return i, j
    return None
