"""
Class Counting

Closed-form counts for ZM(m, n, r): k' (automorphism-conjugacy classes) and k
(conjugacy classes) by Burnside's lemma over Aut(G) and Inn(G), their special cases
and bounds, and the orbit sizes of single elements under both actions.

All Burnside averages are integer sums divided exactly at the end; a remainder means
an inconsistency and raises ConsistencyError.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from zmtool.config import get_settings
from zmtool.exceptions import CapacityError, ConsistencyError, PreconditionError
from zmtool.services.automorphism import enumerate_aut, fix_size, inner_aut
from zmtool.services.numtheory import (divisors, euler_phi, f_closed, factorize,
                                       gcd, geom_sum_mod, is_prime, lcm,
                                       mult_order, pow_mod,
                                       smallest_prime_factor, tau)
from zmtool.services.zm_core import GroupElement, ZmParams, geom_sums

logger = logging.getLogger(__name__)


class CountBounds(BaseModel):
    model_config = ConfigDict(frozen=True)

    lower: int
    upper: int

    @model_validator(mode="after")
    def _ordered(self) -> "CountBounds":
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        return self


def _exact_divide(total: int, divisor: int, what: str) -> int:
    quotient, remainder = divmod(total, divisor)
    if remainder:
        raise ConsistencyError(
            f"{what}: {total} is not divisible by {divisor}")
    return quotient


def _ceil(value: Fraction) -> int:
    return math.ceil(value)


def _floor(value: Fraction) -> int:
    return math.floor(value)


# ---------------------------------------------------------------------------
# automorphism-conjugacy classes
# ---------------------------------------------------------------------------

def k_prime(p: ZmParams, budget: Optional[int] = None) -> int:
    """k'(G) as (sum of |Fix(phi)| over Aut(G)) / |Aut(G)|."""
    if budget is None:
        budget = get_settings().aut_enumeration_budget
    if p.aut_order > budget:
        raise CapacityError(
            f"{p.label()} has {p.aut_order} automorphisms, above the enumeration budget {budget}")
    logger.info(f"Summing fixed points over {p.aut_order} automorphisms of {p.label()}")
    total = sum(fix_size(p, phi) for phi in enumerate_aut(p))
    return _exact_divide(total, p.aut_order, f"k' of {p.label()}")


def _unit_x1_count(p: ZmParams, e: int) -> int:
    """Number of units x1 mod m with gcd(m, x1 - 1) = e, multiplied over prime powers."""
    count = 1
    for prime, exponent in factorize(p.m):
        b = 0
        while b < exponent and e % prime ** (b + 1) == 0:
            b += 1
        if b == 0:
            count *= prime ** (exponent - 1) * (prime - 2)
        elif b < exponent:
            count *= euler_phi(prime ** (exponent - b))
    return count


@lru_cache(maxsize=256)
def _y_profile(p: ZmParams) -> Dict[int, int]:
    """How many admissible y give each value of n / gcd(n, y - 1), counted per prime
    power of n from the exact p-adic valuation of y - 1."""
    local = []
    for prime, exponent in factorize(p.n):
        least = 0
        while least < exponent and p.d % prime ** (least + 1) == 0:
            least += 1
        choices = []
        for b in range(least, exponent + 1):
            if b == exponent:
                count = 1
            elif b == 0:
                # y - 1 and y both prime to the prime
                count = prime ** (exponent - 1) * (prime - 2)
            else:
                count = euler_phi(prime ** (exponent - b))
            if count:
                choices.append((prime ** (exponent - b), count))
        local.append(choices)
    profile: Dict[int, int] = {}
    for combo in product(*local):
        q = math.prod(part for part, _ in combo)
        profile[q] = profile.get(q, 0) + math.prod(count for _, count in combo)
    return profile


def k_prime_fast(p: ZmParams) -> int:
    """k'(G) with the Burnside sum regrouped by e = gcd(m, x1 - 1), g = e/gcd(e, x2)
    and q = n/gcd(n, y - 1); cost grows with the divisor counts, not with |Aut|."""
    profile = _y_profile(p)
    total = 0
    for e in divisors(p.m):
        x1_count = _unit_x1_count(p, e)
        if not x1_count:
            continue
        for g in divisors(e):
            # x2 in [0, m) with e/gcd(e, x2) = g: (m/e) phi(g) of them
            x2_count = p.m // e * euler_phi(g)
            order = mult_order(p.r, g)
            fixed = sum(count * (p.n * e // lcm(q, order)) for q, count in profile.items())
            total += x1_count * x2_count * fixed
    return _exact_divide(total, p.aut_order, f"regrouped k' of {p.label()}")


def k_prime_prime_n(p: ZmParams) -> int:
    """n - 1 + tau(m) for prime n."""
    if not is_prime(p.n):
        raise PreconditionError(f"n={p.n} is not prime")
    if p.m == 1:
        # cyclic of prime order: {e} and the generators
        return tau(p.n)
    return p.n - 1 + tau(p.m)


def k_prime_upper_exact(p: ZmParams) -> Fraction:
    """tau(m) times the mean of gcd(n, y - 1) over the admissible y."""
    profile = _y_profile(p)
    total = sum(count * (p.n // q) for q, count in profile.items())
    return Fraction(tau(p.m) * total, sum(profile.values()))


def k_prime_upper_closed(p: ZmParams) -> Fraction:
    """d^2 f(n/d) tau(m) / n; agrees with k_prime_upper_exact when every prime of n divides d."""
    return Fraction(p.d * p.d * f_closed(p.n // p.d) * tau(p.m), p.n)


def k_prime_bounds(p: ZmParams) -> CountBounds:
    return CountBounds(lower=tau(p.m), upper=_ceil(k_prime_upper_exact(p)))


# ---------------------------------------------------------------------------
# conjugacy classes
# ---------------------------------------------------------------------------

def k_conj(p: ZmParams, budget: Optional[int] = None) -> int:
    """k(G) as (sum of |Fix| over the md inner automorphisms) / md."""
    if budget is None:
        budget = get_settings().aut_enumeration_budget
    if p.inn_order > budget:
        raise CapacityError(
            f"{p.label()} has {p.inn_order} inner automorphisms, above the enumeration budget {budget}")
    total = sum(fix_size(p, inner_aut(p, alpha, beta))
                for alpha in range(p.d) for beta in range(p.m))
    return _exact_divide(total, p.inn_order, f"k of {p.label()}")


def _gcd_with_r_power(p: ZmParams, alpha: int) -> int:
    """gcd(m, r^alpha - 1) with gcd(m, 0) = m."""
    return gcd(p.m, (pow_mod(p.r, alpha, p.m) + p.m - 1) % p.m)


def k_conj_fast(p: ZmParams) -> int:
    """k(G) with the inner sum regrouped by g = e/gcd(e, beta), e = gcd(m, r^alpha - 1)."""
    total = 0
    for alpha in range(p.d):
        e = _gcd_with_r_power(p, alpha)
        total += sum(p.m // e * euler_phi(g) * (p.n * e // mult_order(p.r, g))
                     for g in divisors(e))
    return _exact_divide(total, p.inn_order, f"regrouped k of {p.label()}")


def s_sum(p: ZmParams) -> int:
    """S = sum of gcd(m, r^alpha - 1) over alpha in [0, d)."""
    return sum(_gcd_with_r_power(p, alpha) for alpha in range(p.d))


def s_sum_n(p: ZmParams) -> int:
    """The same sum taken over alpha in [0, n)."""
    return sum(_gcd_with_r_power(p, alpha) for alpha in range(p.n))


def k_conj_prime_d(p: ZmParams) -> int:
    """(n/d)(d - 1 + S/d) for prime d."""
    if not is_prime(p.d):
        raise PreconditionError(f"d={p.d} is not prime")
    return _exact_divide(p.n * (p.d * (p.d - 1) + s_sum(p)), p.d * p.d,
                         f"prime-d class count of {p.label()}")


def k_conj_prime_n(p: ZmParams) -> int:
    """n - 1 + (1/n) sum_{alpha < n} gcd(m, r^alpha - 1) for prime n."""
    if not is_prime(p.n):
        raise PreconditionError(f"n={p.n} is not prime")
    return p.n - 1 + _exact_divide(s_sum_n(p), p.n, f"prime-n class count of {p.label()}")


def k_conj_bounds_exact(p: ZmParams) -> Optional[Tuple[Fraction, Fraction]]:
    """(n/d)(d - 1 + S/d) and (n/d)(d - d/q + S/q), q the least prime of d; None if d = 1."""
    if p.d == 1:
        return None
    q = smallest_prime_factor(p.d)
    s = s_sum(p)
    scale = Fraction(p.n, p.d)
    return (scale * (p.d - 1 + Fraction(s, p.d)),
            scale * (p.d - Fraction(p.d, q) + Fraction(s, q)))


def k_conj_coarse_bounds_exact(p: ZmParams) -> Optional[Tuple[Fraction, Fraction]]:
    """n(m + d^2 - 1)/d^2 and n[phi(m) tau(m) + d(q - 1)]/(dq); None if d = 1."""
    if p.d == 1:
        return None
    q = smallest_prime_factor(p.d)
    return (Fraction(p.n * (p.m + p.d * p.d - 1), p.d * p.d),
            Fraction(p.n * (euler_phi(p.m) * tau(p.m) + p.d * (q - 1)), p.d * q))


def _integral_bounds(exact: Optional[Tuple[Fraction, Fraction]], p: ZmParams) -> CountBounds:
    if exact is None:
        # abelian: every element is its own class
        return CountBounds(lower=p.order, upper=p.order)
    lower, upper = exact
    return CountBounds(lower=_ceil(lower), upper=_floor(upper))


def k_conj_bounds(p: ZmParams) -> CountBounds:
    return _integral_bounds(k_conj_bounds_exact(p), p)


def k_conj_coarse_bounds(p: ZmParams) -> CountBounds:
    return _integral_bounds(k_conj_coarse_bounds_exact(p), p)


# ---------------------------------------------------------------------------
# single elements
# ---------------------------------------------------------------------------

def _class_data(p: ZmParams, g: GroupElement) -> Tuple[int, int]:
    """c = gcd(m, [u]_r) and g* = c / gcd(c, v)."""
    c = gcd(p.m, geom_sum_mod(p.r, g.u, p.m))
    return c, c // gcd(c, g.v)


def orbit_size_aut(p: ZmParams, g: GroupElement) -> int:
    c, g_star = _class_data(p, g)
    y_modulus = lcm(p.d, p.n // gcd(p.n, g.u))
    return _exact_divide(p.m * euler_phi(g_star) * euler_phi(y_modulus),
                         c * euler_phi(p.d), f"Aut-orbit size of {tuple(g)}")


def orbit_size_conj(p: ZmParams, g: GroupElement) -> int:
    c, g_star = _class_data(p, g)
    return p.m // c * mult_order(p.r, g_star)


def centralizer_order(p: ZmParams, g: GroupElement) -> int:
    return _exact_divide(p.order, orbit_size_conj(p, g), f"centralizer of {tuple(g)}")


def conjugacy_class_representatives(p: ZmParams) -> List[GroupElement]:
    """One element per conjugacy class, sorted by (class size, u, v).

    Conjugation keeps u and moves v by v -> r v and v -> v + (1 - r^u), so the class of
    b^u a^v is determined by the orbit of v mod c = gcd(m, [u]_r) under multiplication
    by r; the smallest residue of each orbit is the representative.
    """
    sums = geom_sums(p)
    representatives = []
    for u in range(p.n):
        c = gcd(p.m, sums[u])
        seen = [False] * c
        for v in range(c):
            if seen[v]:
                continue
            w = v
            while not seen[w]:
                seen[w] = True
                w = w * p.r % c
            representatives.append(GroupElement(u, v))
    representatives.sort(key=lambda g: (orbit_size_conj(p, g), g))
    return representatives
