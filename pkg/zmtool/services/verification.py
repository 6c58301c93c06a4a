"""
Verification

Runs every closed form for one group against the brute-force oracle and reports named
check results. Checks that need the automorphism search run only when mn is within the
aut budget; the subgroup comparison only within the subgroup budget.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, computed_field

from zmtool.config import get_settings
from zmtool.exceptions import CapacityError, ZmError
from zmtool.services import class_counting as cc
from zmtool.services import oracle
from zmtool.services.automorphism import enumerate_aut, fix_size, inner_aut
from zmtool.services.numtheory import is_prime
from zmtool.services.subgroup_lattice import (SubgroupTriple, conjugate_subgroups,
                                              enumerate_L, identify_subgroup,
                                              is_cyclic, is_normal,
                                              subgroup_elements)
from zmtool.services.zm_core import (ZmParams, all_elements, center_elements,
                                     element_order)

logger = logging.getLogger(__name__)

Check = Callable[[ZmParams], Tuple[bool, str]]


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str


class VerificationSummary(BaseModel):
    params: ZmParams
    checks: List[CheckResult]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        return next((check for check in self.checks if not check.passed), None)


def _compare(label: str, formula: int, brute: int) -> Tuple[bool, str]:
    return formula == brute, f"{label}: formula {formula}, brute force {brute}"


# ---------------------------------------------------------------------------
# conjugation checks
# ---------------------------------------------------------------------------

def check_class_count(p: ZmParams) -> Tuple[bool, str]:
    return _compare("k", cc.k_conj(p), len(oracle.conjugacy_partition(p, budget=p.order)))


def check_center(p: ZmParams) -> Tuple[bool, str]:
    formula = center_elements(p)
    brute = oracle.brute_force_center(p, budget=p.order)
    return formula == brute, f"center: formula {len(formula)} elements, brute force {len(brute)}"


def check_class_sizes(p: ZmParams) -> Tuple[bool, str]:
    """Per element: class size, centralizer order and element order within each class."""
    partition = oracle.conjugacy_partition(p, budget=p.order)
    for block in partition.blocks:
        orders = {element_order(p, g) for g in block}
        if len(orders) != 1:
            return False, f"class of {tuple(block[0])} mixes element orders {sorted(orders)}"
        for g in block:
            if cc.orbit_size_conj(p, g) != len(block):
                return False, (f"class of {tuple(g)}: formula {cc.orbit_size_conj(p, g)}, "
                               f"brute force {len(block)}")
            brute = oracle.centralizer_size(p, g, budget=p.order)
            if cc.centralizer_order(p, g) != brute:
                return False, (f"centralizer of {tuple(g)}: formula "
                               f"{cc.centralizer_order(p, g)}, brute force {brute}")
    return True, f"{p.order} elements in {len(partition)} classes"


def check_class_representatives(p: ZmParams) -> Tuple[bool, str]:
    block_of = oracle.conjugacy_partition(p, budget=p.order).block_of()
    hit = sorted(block_of[g] for g in cc.conjugacy_class_representatives(p))
    return hit == list(range(len(set(block_of.values())))), f"{len(hit)} representatives"


def check_inner_burnside(p: ZmParams) -> Tuple[bool, str]:
    """Fixed sets of the md inner triples against the class count."""
    total = 0
    for alpha in range(p.d):
        for beta in range(p.m):
            phi = inner_aut(p, alpha, beta)
            brute = len(oracle.fixed_set(p, phi, budget=p.order))
            if fix_size(p, phi) != brute:
                return False, f"Fix{tuple(phi)}: formula {fix_size(p, phi)}, brute force {brute}"
            total += brute
    classes = len(oracle.conjugacy_partition(p, budget=p.order))
    return _compare("sum of inner fixed sets", total, p.inn_order * classes)


def check_regrouped_counts(p: ZmParams) -> Tuple[bool, str]:
    if cc.k_conj_fast(p) != cc.k_conj(p):
        return _compare("regrouped k", cc.k_conj_fast(p), cc.k_conj(p))
    return _compare("regrouped k'", cc.k_prime_fast(p), cc.k_prime(p))


def check_bounds(p: ZmParams) -> Tuple[bool, str]:
    k, k_prime = cc.k_conj(p), cc.k_prime(p)
    if not k_prime <= k:
        return False, f"k'={k_prime} exceeds k={k}"
    for label, exact in (("class bounds", cc.k_conj_bounds_exact(p)),
                         ("coarse class bounds", cc.k_conj_coarse_bounds_exact(p))):
        if exact is not None and not exact[0] <= k <= exact[1]:
            return False, f"{label} [{exact[0]}, {exact[1]}] miss k={k}"
    lower = cc.k_prime_bounds(p).lower
    upper = cc.k_prime_upper_exact(p)
    if not lower <= k_prime <= upper:
        return False, f"k' bounds [{lower}, {upper}] miss k'={k_prime}"
    return True, f"k={k}, k'={k_prime} inside every bound"


def check_special_cases(p: ZmParams) -> Tuple[bool, str]:
    applied = []
    if is_prime(p.n):
        applied.append("prime n")
        if cc.k_prime_prime_n(p) != cc.k_prime(p):
            return _compare("prime-n k'", cc.k_prime_prime_n(p), cc.k_prime(p))
        if cc.k_conj_prime_n(p) != cc.k_conj(p):
            return _compare("prime-n k", cc.k_conj_prime_n(p), cc.k_conj(p))
    if is_prime(p.d):
        applied.append("prime d")
        if cc.k_conj_prime_d(p) != cc.k_conj(p):
            return _compare("prime-d k", cc.k_conj_prime_d(p), cc.k_conj(p))
    return True, ", ".join(applied) or "no special case applies"


# ---------------------------------------------------------------------------
# automorphism checks
# ---------------------------------------------------------------------------

def check_aut_group(p: ZmParams) -> Tuple[bool, str]:
    """The triples give exactly the automorphisms found by generator images."""
    brute = set(oracle.brute_force_automorphisms(p, budget=p.order))
    triples = {oracle.triple_permutation(p, phi) for phi in enumerate_aut(p)}
    if len(brute) != p.aut_order:
        return _compare("|Aut|", p.aut_order, len(brute))
    return triples == brute, f"{len(triples)} triples against {len(brute)} automorphisms"


def check_aut_classes(p: ZmParams) -> Tuple[bool, str]:
    aut_partition = oracle.aut_orbit_partition(p, budget=p.order)
    class_of = oracle.conjugacy_partition(p, budget=p.order).block_of()
    for block in aut_partition.blocks:
        covered = {class_of[g] for g in block}
        class_members = sum(1 for g in class_of if class_of[g] in covered)
        if class_members != len(block):
            return False, f"Aut-orbit of {tuple(block[0])} is not a union of classes"
        for g in block:
            if cc.orbit_size_aut(p, g) != len(block):
                return False, (f"Aut-orbit of {tuple(g)}: formula {cc.orbit_size_aut(p, g)}, "
                               f"brute force {len(block)}")
    return _compare("k'", cc.k_prime(p), len(aut_partition))


def check_fixed_sets(p: ZmParams) -> Tuple[bool, str]:
    total = 0
    for phi in enumerate_aut(p):
        brute = len(oracle.fixed_set(p, phi, budget=p.order))
        if fix_size(p, phi) != brute:
            return False, f"Fix{tuple(phi)}: formula {fix_size(p, phi)}, brute force {brute}"
        total += brute
    return _compare("sum of fixed sets", total, p.aut_order * cc.k_prime(p))


def check_orbit_stabilizer(p: ZmParams) -> Tuple[bool, str]:
    actions = {
        "conjugation": oracle.inner_automorphisms(p, budget=p.order),
        "automorphism": oracle.brute_force_automorphisms(p, budget=p.order),
    }
    formulas = {"conjugation": cc.orbit_size_conj, "automorphism": cc.orbit_size_aut}
    for action, actors in actions.items():
        for g in all_elements(p):
            orbit, stabilizer = oracle.orbit_and_stabilizer(p, g, action, actors=actors)
            if len(orbit) * stabilizer != len(actors):
                return False, f"{action} of {tuple(g)}: {len(orbit)} x {stabilizer} != {len(actors)}"
            if formulas[action](p, g) != len(orbit):
                return False, (f"{action} orbit of {tuple(g)}: formula "
                               f"{formulas[action](p, g)}, brute force {len(orbit)}")
    return True, "orbit-stabilizer holds for both actions"


# ---------------------------------------------------------------------------
# subgroup checks
# ---------------------------------------------------------------------------

def check_subgroups(p: ZmParams) -> Tuple[bool, str]:
    triples = enumerate_L(p)
    brute = oracle.brute_force_subgroups(p, budget=p.order)
    if len(triples) != len(brute):
        return _compare("|L|", len(triples), len(brute))
    by_triple = {identify_subgroup(p, h): h for h in brute}
    for t in triples:
        h = by_triple.get(t)
        if h is None or sorted(h) != subgroup_elements(p, t):
            return False, f"triple {tuple(t)} does not match a brute-force subgroup"
        if is_normal(p, t) != oracle.is_normal_subgroup(p, h):
            return False, f"normality of {tuple(t)} disagrees"
        if is_cyclic(p, t) != oracle.is_cyclic_subgroup(p, h):
            return False, f"cyclicity of {tuple(t)} disagrees"
    return _check_subgroup_conjugacy(p, triples, by_triple)


def _check_subgroup_conjugacy(p: ZmParams, triples: List[SubgroupTriple],
                              by_triple: Dict[SubgroupTriple, oracle.Subgroup]) -> Tuple[bool, str]:
    """Every pair of triples against brute-force conjugacy, through one representative
    per brute-force conjugacy class."""
    representatives: List[SubgroupTriple] = []
    class_of: Dict[SubgroupTriple, int] = {}
    for t in triples:
        for index, rep in enumerate(representatives):
            if oracle.are_conjugate_subgroups(p, by_triple[rep], by_triple[t]):
                class_of[t] = index
                break
        else:
            class_of[t] = len(representatives)
            representatives.append(t)
    for t1 in triples:
        for t2 in triples:
            if conjugate_subgroups(p, t1, t2) != (class_of[t1] == class_of[t2]):
                return False, f"conjugacy of {tuple(t1)} and {tuple(t2)} disagrees"
    return True, f"{len(triples)} subgroups in {len(representatives)} conjugacy classes"


CONJUGATION_CHECKS: List[Tuple[str, Check]] = [
    ("class_count", check_class_count),
    ("center", check_center),
    ("class_sizes", check_class_sizes),
    ("class_representatives", check_class_representatives),
    ("inner_burnside", check_inner_burnside),
    ("regrouped_counts", check_regrouped_counts),
    ("bounds", check_bounds),
    ("special_cases", check_special_cases),
]

AUTOMORPHISM_CHECKS: List[Tuple[str, Check]] = [
    ("aut_group", check_aut_group),
    ("aut_classes", check_aut_classes),
    ("fixed_sets", check_fixed_sets),
    ("orbit_stabilizer", check_orbit_stabilizer),
]

SUBGROUP_CHECKS: List[Tuple[str, Check]] = [
    ("subgroups", check_subgroups),
]


def _run(p: ZmParams, name: str, check: Check) -> CheckResult:
    try:
        passed, detail = check(p)
    except ZmError as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    if passed:
        logger.info(f"{p.label()} {name}: ok ({detail})")
    else:
        logger.warning(f"{p.label()} {name}: FAILED ({detail})")
    return CheckResult(name=name, passed=passed, detail=detail)


def run_verification(p: ZmParams, budget: Optional[int] = None) -> VerificationSummary:
    """Run every applicable check; raises CapacityError when mn exceeds the budget."""
    settings = get_settings()
    if budget is None:
        budget = settings.budget
    if p.order > budget:
        raise CapacityError(f"{p.label()} has {p.order} elements, above the budget {budget}")

    checks = list(CONJUGATION_CHECKS)
    if p.order <= settings.aut_budget:
        checks += AUTOMORPHISM_CHECKS
    else:
        logger.info(f"{p.label()}: |G| above the aut budget {settings.aut_budget}, "
                    "automorphism checks skipped")
    if p.order <= settings.subgroup_budget:
        checks += SUBGROUP_CHECKS
    return VerificationSummary(params=p, checks=[_run(p, name, check) for name, check in checks])
