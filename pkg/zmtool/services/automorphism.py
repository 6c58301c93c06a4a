"""
Automorphisms

Each automorphism of ZM(m, n, r) acts as b^u a^v -> b^(yu) a^(x1 v + x2 [u]_r) for a
unique triple (x1, x2, y) with 0 <= x1, x2 < m, gcd(x1, m) = 1, 0 <= y < n,
y = 1 (mod d) and gcd(y, n) = 1. The last condition only matters when some prime of
n does not divide d; without it b could be sent to an element of smaller order.
"""

import logging
from functools import lru_cache
from typing import Iterator, NamedTuple, Tuple

from zmtool.exceptions import InvalidAutomorphismError
from zmtool.services.numtheory import gcd, gcd3, lcm, mult_order, pow_mod
from zmtool.services.zm_core import GroupElement, ZmParams, geom_sums

logger = logging.getLogger(__name__)


class AutTriple(NamedTuple):
    x1: int
    x2: int
    y: int


@lru_cache(maxsize=256)
def unit_y_values(p: ZmParams) -> Tuple[int, ...]:
    """Admissible y: units of Z/nZ congruent to 1 mod d."""
    return tuple(y for y in range(1 % p.d, p.n, p.d) if gcd(y, p.n) == 1)


@lru_cache(maxsize=256)
def _unit_x1_values(p: ZmParams) -> Tuple[int, ...]:
    return tuple(x for x in range(p.m) if gcd(x, p.m) == 1)


def make_aut(p: ZmParams, x1: int, x2: int, y: int) -> AutTriple:
    x1, x2, y = x1 % p.m, x2 % p.m, y % p.n
    if gcd(x1, p.m) != 1:
        raise InvalidAutomorphismError(
            "gcd(x1,m)!=1", f"x1={x1} is not a unit modulo m={p.m}")
    if (y - 1) % p.d:
        raise InvalidAutomorphismError(
            "y!=1 mod d", f"y={y} is not congruent to 1 modulo d={p.d}")
    if gcd(y, p.n) != 1:
        raise InvalidAutomorphismError(
            "gcd(y,n)!=1", f"y={y} is not a unit modulo n={p.n}")
    return AutTriple(x1, x2, y)


def identity_aut(p: ZmParams) -> AutTriple:
    return AutTriple(1 % p.m, 0, 1 % p.n)


def apply_aut(p: ZmParams, phi: AutTriple, g: GroupElement) -> GroupElement:
    return GroupElement(phi.y * g.u % p.n,
                        (phi.x1 * g.v + phi.x2 * geom_sums(p)[g.u]) % p.m)


def enumerate_aut(p: ZmParams) -> Iterator[AutTriple]:
    """Lazily yield every automorphism triple, lexicographic in (x1, x2, y)."""
    ys = unit_y_values(p)
    for x1 in _unit_x1_values(p):
        for x2 in range(p.m):
            for y in ys:
                yield AutTriple(x1, x2, y)


def inner_aut(p: ZmParams, alpha: int, beta: int) -> AutTriple:
    """The triple of conjugation by b^alpha a^beta: (r^alpha, beta (1 - r), 1)."""
    alpha, beta = alpha % p.d, beta % p.m
    return AutTriple(pow_mod(p.r, alpha, p.m), beta * (1 - p.r) % p.m, 1 % p.n)


def fix_parameters(p: ZmParams, phi: AutTriple) -> Tuple[int, int]:
    """(m1, n1) with Fix(phi) = H_(m1, n1, s)."""
    x1_minus_one = (phi.x1 + p.m - 1) % p.m
    e = gcd(p.m, x1_minus_one)
    m1 = p.m // e
    y_part = p.n // gcd(p.n, (phi.y + p.n - 1) % p.n)
    n1 = lcm(y_part, mult_order(p.r, e // gcd3(p.m, x1_minus_one, phi.x2)))
    return m1, n1


def fix_size(p: ZmParams, phi: AutTriple) -> int:
    m1, n1 = fix_parameters(p, phi)
    return p.order // (m1 * n1)


def fix_bounds(p: ZmParams, phi: AutTriple) -> Tuple[int, int]:
    """gcd(m, x1 - 1) <= |Fix(phi)| <= gcd(m, x1 - 1) gcd(n, y - 1)."""
    e = gcd(p.m, (phi.x1 + p.m - 1) % p.m)
    return e, e * gcd(p.n, (phi.y + p.n - 1) % p.n)
