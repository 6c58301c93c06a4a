"""
Subgroup Lattice

Subgroups of ZM(m, n, r) are in bijection with the triples (m1, n1, s) such that m1 | m,
n1 | n, 0 <= s < m1 and m1 divides s * (r^n - 1)/(r^n1 - 1); the triple stands for
H = <a^m1, b^n1 a^s> of order mn/(m1 n1). The quotient is always handled as the
geometric sum of r^(j n1), j < n/n1, reduced mod m1.
"""

import logging
from typing import Iterable, List, NamedTuple, Optional

from zmtool.config import get_settings
from zmtool.exceptions import CapacityError
from zmtool.services.numtheory import divisors, gcd, geom_sum_mod, pow_mod
from zmtool.services.zm_core import (GroupElement, ZmParams, generator_a,
                                     multiply, power)

logger = logging.getLogger(__name__)


class SubgroupTriple(NamedTuple):
    m1: int
    n1: int
    s: int


def _quotient_mod(p: ZmParams, n1: int, m1: int) -> int:
    """(r^n - 1)/(r^n1 - 1) mod m1, as sum_{j < n/n1} r^(j n1)."""
    return geom_sum_mod(pow_mod(p.r, n1, m1), p.n // n1, m1)


def enumerate_L(p: ZmParams) -> List[SubgroupTriple]:
    """Every triple of L, lexicographic in (m1, n1, s)."""
    triples = []
    for m1 in divisors(p.m):
        for n1 in divisors(p.n):
            # m1 | s Q  <=>  s is a multiple of m1 / gcd(m1, Q)
            step = m1 // gcd(m1, _quotient_mod(p, n1, m1))
            triples.extend(SubgroupTriple(m1, n1, s)
                           for s in range(0, m1, step))
    logger.debug(f"{p.label()} has {len(triples)} subgroups")
    return triples


def subgroup_count(p: ZmParams) -> int:
    """|L| without listing it."""
    return sum(gcd(m1, _quotient_mod(p, n1, m1))
               for m1 in divisors(p.m) for n1 in divisors(p.n))


def subgroup_order(p: ZmParams, t: SubgroupTriple) -> int:
    return p.order // (t.m1 * t.n1)


def is_normal(p: ZmParams, t: SubgroupTriple) -> bool:
    return t.s == 0 and pow_mod(p.r, t.n1, t.m1) == 1 % t.m1


def is_cyclic(p: ZmParams, t: SubgroupTriple) -> bool:
    cofactor = p.m // t.m1
    return pow_mod(p.r, t.n1, cofactor) == 1 % cofactor


def subgroup_elements(p: ZmParams, t: SubgroupTriple,
                      budget: Optional[int] = None) -> List[GroupElement]:
    """Elements of <a^m1, b^n1 a^s>, sorted by (u, v)."""
    if budget is None:
        budget = get_settings().element_budget
    order = subgroup_order(p, t)
    if order > budget:
        raise CapacityError(
            f"subgroup {tuple(t)} of {p.label()} has {order} elements, above the budget {budget}")
    top = GroupElement(t.n1 % p.n, t.s % p.m)
    normal_part = [power(p, generator_a(p), t.m1 * j) for j in range(p.m // t.m1)]
    elements = set()
    for k in range(p.n // t.n1):
        coset_rep = power(p, top, k)
        elements.update(multiply(p, coset_rep, x) for x in normal_part)
    return sorted(elements)


def conjugate_subgroups(p: ZmParams, t1: SubgroupTriple, t2: SubgroupTriple) -> bool:
    return subgroup_order(p, t1) == subgroup_order(p, t2)


def identify_subgroup(p: ZmParams, elements: Iterable[GroupElement]) -> SubgroupTriple:
    """Recover the L-triple of a subgroup given by its elements."""
    elements = list(elements)
    in_a = sum(1 for g in elements if g.u == 0)
    m1 = p.m // in_a
    shifts = [g for g in elements if g.u != 0]
    if not shifts:
        return SubgroupTriple(m1, p.n, 0)
    n1 = min(g.u for g in shifts)
    s = next(g.v for g in shifts if g.u == n1) % m1
    return SubgroupTriple(m1, n1, s)
