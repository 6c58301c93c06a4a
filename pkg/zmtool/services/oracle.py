"""
Brute-force Oracle

Ground truth for the closed forms, built from element arithmetic only: orbit
partitions, fixed sets, an exhaustive search for automorphisms by generator images and
subgroup enumeration by closure. Nothing here calls class_counting.

Every entry point is budgeted on |G| = mn and raises CapacityError above it.
"""

import logging
from itertools import combinations
from typing import (Callable, Dict, FrozenSet, Hashable, Iterable, List,
                    Literal, Optional, Sequence, Set, Tuple)

from pydantic import BaseModel, ConfigDict, model_validator

from zmtool.config import get_settings
from zmtool.exceptions import CapacityError
from zmtool.services.automorphism import AutTriple, apply_aut
from zmtool.services.zm_core import (GroupElement, ZmParams, all_elements,
                                     conjugate, element_index, element_order,
                                     generator_a, generator_b, identity,
                                     multiply, power)

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]
Subgroup = FrozenSet[GroupElement]

# full join closure is quadratic in the number of subgroups; only used on tiny groups
JOIN_CLOSURE_LIMIT = 60


class Partition(BaseModel):
    """Disjoint blocks of elements, each sorted, blocks sorted by (size, first element)."""

    model_config = ConfigDict(frozen=True)

    blocks: List[List[GroupElement]]

    @model_validator(mode="after")
    def _disjoint(self) -> "Partition":
        seen: Set[GroupElement] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("partition blocks must be non-empty")
            for g in block:
                if g in seen:
                    raise ValueError(f"element {tuple(g)} appears in two blocks")
                seen.add(g)
        return self

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[GroupElement]]) -> "Partition":
        ordered = sorted((sorted(block) for block in blocks), key=lambda b: (len(b), b[0]))
        return cls(blocks=ordered)

    def __len__(self) -> int:
        return len(self.blocks)

    def sizes(self) -> List[int]:
        return [len(block) for block in self.blocks]

    def block_of(self) -> Dict[GroupElement, int]:
        return {g: i for i, block in enumerate(self.blocks) for g in block}


class UnionFind:
    def __init__(self, X: Iterable[Hashable]):
        self.parent = {x: x for x in X}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def groups(self) -> List[List]:
        classes: Dict = {}
        for x in self.parent:
            classes.setdefault(self.find(x), []).append(x)
        return list(classes.values())


def _require_budget(p: ZmParams, budget: Optional[int], default: int, what: str) -> None:
    if budget is None:
        budget = default
    if p.order > budget:
        raise CapacityError(
            f"{what} for {p.label()} needs |G|={p.order}, above the budget {budget}")


def _orbits(space: Sequence[GroupElement],
            moves: Iterable[Callable[[GroupElement], GroupElement]]) -> Partition:
    uf = UnionFind(space)
    for move in moves:
        for x in space:
            uf.union(x, move(x))
    return Partition.from_blocks(uf.groups())


# ---------------------------------------------------------------------------
# conjugation
# ---------------------------------------------------------------------------

def conjugacy_partition(p: ZmParams, budget: Optional[int] = None) -> Partition:
    """Conjugacy classes; conjugating by a and b generates every inner automorphism."""
    _require_budget(p, budget, get_settings().budget, "conjugacy partition")
    elements = all_elements(p)
    gens = (generator_a(p), generator_b(p))
    partition = _orbits(elements, [lambda g, x=x: conjugate(p, g, x) for x in gens])
    logger.debug(f"{p.label()}: {len(partition)} conjugacy classes by brute force")
    return partition


def brute_force_center(p: ZmParams, budget: Optional[int] = None) -> List[GroupElement]:
    _require_budget(p, budget, get_settings().budget, "center search")
    gens = (generator_a(p), generator_b(p))
    return [g for g in all_elements(p)
            if all(multiply(p, g, x) == multiply(p, x, g) for x in gens)]


def centralizer_size(p: ZmParams, g: GroupElement, budget: Optional[int] = None) -> int:
    _require_budget(p, budget, get_settings().budget, "centralizer count")
    return sum(1 for x in all_elements(p) if multiply(p, g, x) == multiply(p, x, g))


def _center_coset_representatives(p: ZmParams) -> List[GroupElement]:
    center = brute_force_center(p, budget=p.order)
    covered: Set[GroupElement] = set()
    representatives = []
    for x in all_elements(p):
        if x in covered:
            continue
        representatives.append(x)
        covered.update(multiply(p, x, z) for z in center)
    return representatives


def _as_permutation(p: ZmParams, elements: Sequence[GroupElement],
                    image: Callable[[GroupElement], GroupElement]) -> Permutation:
    return tuple(element_index(p, image(g)) for g in elements)


def inner_automorphisms(p: ZmParams, budget: Optional[int] = None) -> List[Permutation]:
    """Conjugation permutations, one per coset of the center."""
    _require_budget(p, budget, get_settings().budget, "inner automorphisms")
    elements = all_elements(p)
    return [_as_permutation(p, elements, lambda g, x=x: conjugate(p, g, x))
            for x in _center_coset_representatives(p)]


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

def brute_force_automorphisms(p: ZmParams, budget: Optional[int] = None) -> List[Permutation]:
    """Every automorphism as a permutation of all_elements(p) indices, sorted.

    Searches images a -> g1, b -> g2 with g1^m = g2^n = e and g2^-1 g1 g2 = g1^r; such a
    pair defines the homomorphism b^u a^v -> g2^u g1^v, kept when it is bijective.
    """
    _require_budget(p, budget, get_settings().aut_budget, "automorphism search")
    elements = all_elements(p)
    one = identity(p)
    a_images = [g for g in elements if power(p, g, p.m) == one]
    b_images = [g for g in elements if power(p, g, p.n) == one]
    logger.info(f"{p.label()}: testing {len(a_images) * len(b_images)} generator image pairs")

    automorphisms = []
    for g1 in a_images:
        g1_powers = [power(p, g1, v) for v in range(p.m)]
        g1_r = power(p, g1, p.r)
        for g2 in b_images:
            if conjugate(p, g1, g2) != g1_r:
                continue
            g2_powers = [power(p, g2, u) for u in range(p.n)]
            images = [multiply(p, g2_powers[g.u], g1_powers[g.v]) for g in elements]
            if len(set(images)) == p.order:
                automorphisms.append(tuple(element_index(p, h) for h in images))
    automorphisms.sort()
    logger.debug(f"{p.label()}: {len(automorphisms)} automorphisms by brute force")
    return automorphisms


def aut_orbit_partition(p: ZmParams, budget: Optional[int] = None) -> Partition:
    automorphisms = brute_force_automorphisms(p, budget)
    elements = all_elements(p)
    return _orbits(elements, [lambda g, perm=perm: elements[perm[element_index(p, g)]]
                              for perm in automorphisms])


def triple_permutation(p: ZmParams, phi: AutTriple) -> Permutation:
    """apply_aut(phi, .) as a permutation, for comparison with the brute-force set."""
    return _as_permutation(p, all_elements(p), lambda g: apply_aut(p, phi, g))


def fixed_set(p: ZmParams, phi: AutTriple, budget: Optional[int] = None) -> List[GroupElement]:
    _require_budget(p, budget, get_settings().budget, "fixed set")
    return [g for g in all_elements(p) if apply_aut(p, phi, g) == g]


def orbit_and_stabilizer(p: ZmParams, g: GroupElement,
                         action: Literal["conjugation", "automorphism"],
                         budget: Optional[int] = None,
                         actors: Optional[Sequence[Permutation]] = None) -> Tuple[List[GroupElement], int]:
    """Orbit of g and the number of acting maps that fix it.

    actors, when given, is the precomputed permutation list of the action.
    """
    if action not in ("conjugation", "automorphism"):
        raise ValueError(f"unknown action {action!r}")
    if actors is None:
        actors = (inner_automorphisms(p, budget) if action == "conjugation"
                  else brute_force_automorphisms(p, budget))
    elements = all_elements(p)
    index = element_index(p, g)
    images = {perm[index] for perm in actors}
    stabilizer = sum(1 for perm in actors if perm[index] == index)
    return [elements[i] for i in sorted(images)], stabilizer


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------

def _closure(p: ZmParams, generators: Iterable[GroupElement]) -> Subgroup:
    generators = list(generators)
    one = identity(p)
    found = {one}
    frontier = [one]
    while frontier:
        x = frontier.pop()
        for s in generators:
            y = multiply(p, x, s)
            if y not in found:
                found.add(y)
                frontier.append(y)
    return frozenset(found)


def _cyclic_subgroups(p: ZmParams) -> Dict[Subgroup, GroupElement]:
    """Each cyclic subgroup with one generator."""
    cyclic: Dict[Subgroup, GroupElement] = {}
    for g in all_elements(p):
        cyclic.setdefault(_closure(p, [g]), g)
    return cyclic


def brute_force_subgroups(p: ZmParams, budget: Optional[int] = None) -> List[Subgroup]:
    """All subgroups <g> and <g, h>, sorted by (order, sorted elements)."""
    _require_budget(p, budget, get_settings().subgroup_budget, "subgroup search")
    cyclic = _cyclic_subgroups(p)
    found: Set[Subgroup] = set(cyclic)
    for (h, g), (k, x) in combinations(cyclic.items(), 2):
        if h <= k or k <= h:
            continue
        found.add(_closure(p, [g, x]))
    logger.info(f"{p.label()}: {len(cyclic)} cyclic subgroups, {len(found)} in total")
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def all_subgroups_by_join_closure(p: ZmParams) -> List[Subgroup]:
    """Close the cyclic subgroups under joins until nothing new appears."""
    _require_budget(p, None, JOIN_CLOSURE_LIMIT, "join closure")
    found: Set[Subgroup] = set(_cyclic_subgroups(p))
    fresh = set(found)
    while fresh:
        new: Set[Subgroup] = set()
        for h in fresh:
            for k in found:
                joined = _closure(p, h | k)
                if joined not in found:
                    new.add(joined)
        found |= new
        fresh = new
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def is_normal_subgroup(p: ZmParams, h: Subgroup) -> bool:
    gens = (generator_a(p), generator_b(p))
    return all(conjugate(p, g, x) in h for g in h for x in gens)


def is_cyclic_subgroup(p: ZmParams, h: Subgroup) -> bool:
    return any(element_order(p, g) == len(h) for g in h)


def are_conjugate_subgroups(p: ZmParams, h: Subgroup, k: Subgroup) -> bool:
    if len(h) != len(k):
        return False
    return any(frozenset(conjugate(p, g, x) for g in h) == k for x in all_elements(p))
