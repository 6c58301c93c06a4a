"""
ZM-group Core

Validated parameters for ZM(m, n, r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r> and exact
element arithmetic. Every element is stored as the canonical pair (u, v) standing for
b^u a^v with 0 <= u < n and 0 <= v < m; the product rule is a^v b^w = b^w a^(v r^w).
"""

import logging
from functools import lru_cache
from typing import List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from zmtool.config import get_settings
from zmtool.exceptions import CapacityError, InvalidParametersError
from zmtool.services.numtheory import (check_width, divisors, euler_phi, gcd,
                                       geom_sum_mod, mult_order, pow_mod)

logger = logging.getLogger(__name__)


class ZmParams(BaseModel):
    """A validated triple (m, n, r) with d, the multiplicative order of r mod m."""

    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    r: int
    d: int

    @model_validator(mode="after")
    def _check_derived_order(self) -> "ZmParams":
        if self.m < 1 or self.n < 1 or not 0 <= self.r < self.m:
            raise ValueError(f"({self.m}, {self.n}, {self.r}) is not canonical")
        if self.d != mult_order(self.r, self.m):
            raise ValueError(
                f"d={self.d} is not the order of {self.r} modulo {self.m}")
        return self

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def center_order(self) -> int:
        return self.n // self.d

    @property
    def inn_order(self) -> int:
        return self.m * self.d

    @property
    def aut_order(self) -> int:
        # m phi(m) phi(n)/phi(d); equals m phi(m) n/d when every prime of n divides d
        return self.m * euler_phi(self.m) * euler_phi(self.n) // euler_phi(self.d)

    def label(self) -> str:
        return f"ZM({self.m},{self.n},{self.r})"


class GroupElement(NamedTuple):
    """b^u a^v in canonical form."""

    u: int
    v: int


def validate(m: int, n: int, r: int) -> ZmParams:
    """Check the ZM conditions for (m, n, r) and return the parameter object."""
    if m < 1 or n < 1:
        raise InvalidParametersError(
            "m>=1 and n>=1", f"m and n must be positive, got m={m}, n={n}")
    check_width(m, n, m * n)
    r = r % m
    if gcd(m, n) != 1:
        raise InvalidParametersError(
            "gcd(m,n)!=1", f"gcd(m,n)={gcd(m, n)} violates gcd(m,n)=1")
    r_minus_one = (r + m - 1) % m
    if gcd(m, r_minus_one) != 1:
        raise InvalidParametersError(
            "gcd(m,r-1)!=1", f"gcd(m,r-1)={gcd(m, r_minus_one)} violates gcd(m,r-1)=1")
    if pow_mod(r, n, m) != 1 % m:
        raise InvalidParametersError(
            "r^n!=1 mod m", f"{r}^{n} is not 1 modulo {m}")
    d = mult_order(r, m)
    logger.debug(f"Validated ZM({m},{n},{r}) with d={d}")
    return ZmParams(m=m, n=n, r=r, d=d)


def element(p: ZmParams, u: int, v: int) -> GroupElement:
    """Canonicalize b^u a^v."""
    return GroupElement(u % p.n, v % p.m)


def identity(p: ZmParams) -> GroupElement:
    return GroupElement(0, 0)


def generator_a(p: ZmParams) -> GroupElement:
    return GroupElement(0, 1 % p.m)


def generator_b(p: ZmParams) -> GroupElement:
    return GroupElement(1 % p.n, 0)


def element_index(p: ZmParams, g: GroupElement) -> int:
    """Position of g in all_elements(p)."""
    return g.u * p.m + g.v


@lru_cache(maxsize=256)
def r_powers(p: ZmParams) -> Tuple[int, ...]:
    """r**u mod m for u in [0, n)."""
    powers = [1 % p.m]
    for _ in range(1, p.n):
        powers.append(powers[-1] * p.r % p.m)
    return tuple(powers)


@lru_cache(maxsize=256)
def geom_sums(p: ZmParams) -> Tuple[int, ...]:
    """[u]_r mod m for u in [0, n)."""
    sums = [0]
    powers = r_powers(p)
    for u in range(1, p.n):
        sums.append((sums[-1] + powers[u - 1]) % p.m)
    return tuple(sums)


def multiply(p: ZmParams, g: GroupElement, h: GroupElement) -> GroupElement:
    return GroupElement((g.u + h.u) % p.n, (g.v * r_powers(p)[h.u] + h.v) % p.m)


def inverse(p: ZmParams, g: GroupElement) -> GroupElement:
    u = -g.u % p.n
    return GroupElement(u, -g.v * r_powers(p)[u] % p.m)


def power(p: ZmParams, g: GroupElement, k: int) -> GroupElement:
    """g**k through (b^u a^v)^k = b^(ku) a^(v [k]_(r^u))."""
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    return GroupElement(g.u * k % p.n,
                        g.v * geom_sum_mod(r_powers(p)[g.u], k, p.m) % p.m)


def element_order(p: ZmParams, g: GroupElement) -> int:
    one = identity(p)
    for k in divisors(p.order):
        if power(p, g, k) == one:
            return k
    # unreachable: g**(mn) is always the identity
    raise AssertionError(f"no order found for {g} in {p.label()}")


def conjugate(p: ZmParams, g: GroupElement, x: GroupElement) -> GroupElement:
    """x^-1 g x."""
    return multiply(p, multiply(p, inverse(p, x), g), x)


def center_elements(p: ZmParams) -> List[GroupElement]:
    return [GroupElement(k * p.d, 0) for k in range(p.n // p.d)]


def all_elements(p: ZmParams, budget: Optional[int] = None) -> List[GroupElement]:
    """All mn elements ordered by (u, v)."""
    if budget is None:
        budget = get_settings().element_budget
    if p.order > budget:
        raise CapacityError(
            f"{p.label()} has {p.order} elements, above the enumeration budget {budget}")
    return [GroupElement(u, v) for u in range(p.n) for v in range(p.m)]
