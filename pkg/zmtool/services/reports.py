"""
Reports

Assembles the invariants of one group (ClassReport), the per-class listing, the subgroup
table and the batch table over a parameter range, and renders them as JSON, text or CSV.
Every number is an exact integer; nothing here carries a timestamp.
"""

import json
import logging
from typing import Any, Iterator, List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel

from zmtool.config import get_settings
from zmtool.exceptions import CapacityError, InvalidParametersError
from zmtool.services.class_counting import (CountBounds, centralizer_order,
                                            conjugacy_class_representatives,
                                            k_conj, k_conj_bounds, k_conj_fast,
                                            k_prime, k_prime_bounds,
                                            k_prime_fast, orbit_size_aut,
                                            orbit_size_conj)
from zmtool.services.subgroup_lattice import (enumerate_L, is_cyclic, is_normal,
                                              subgroup_count, subgroup_order)
from zmtool.services.zm_core import ZmParams, element_order, validate

logger = logging.getLogger(__name__)

CLASS_COLUMNS = ["u", "v", "class_size", "aut_orbit_size", "element_order", "centralizer_order"]
SUBGROUP_COLUMNS = ["m1", "n1", "s", "order", "normal", "cyclic"]
TABLE_COLUMNS = ["m", "n", "r", "d", "group_order", "k", "k_prime", "subgroup_count"]


class ClassRecord(BaseModel):
    u: int
    v: int
    class_size: int
    aut_orbit_size: int
    element_order: int
    centralizer_order: int


class ClassReport(BaseModel):
    params: ZmParams
    group_order: int
    center_order: int
    aut_order: int
    k: int
    k_prime: int
    k_bounds: CountBounds
    k_prime_bounds: CountBounds
    subgroup_count: int
    classes: Optional[List[ClassRecord]] = None


class SubgroupRow(BaseModel):
    m1: int
    n1: int
    s: int
    order: int
    normal: bool
    cyclic: bool


class TableRow(BaseModel):
    m: int
    n: int
    r: int
    d: int
    group_order: int
    k: int
    k_prime: int
    subgroup_count: int


def count_classes(p: ZmParams) -> int:
    if p.inn_order <= get_settings().aut_enumeration_budget:
        return k_conj(p)
    logger.info(f"{p.label()}: |Inn|={p.inn_order} above the enumeration budget, regrouped sum")
    return k_conj_fast(p)


def count_aut_classes(p: ZmParams) -> int:
    if p.aut_order <= get_settings().aut_enumeration_budget:
        return k_prime(p)
    logger.info(f"{p.label()}: |Aut|={p.aut_order} above the enumeration budget, regrouped sum")
    return k_prime_fast(p)


def class_records(p: ZmParams) -> List[ClassRecord]:
    """One record per conjugacy class, ordered by (class size, representative).
    Raises CapacityError when mn exceeds the element budget."""
    budget = get_settings().element_budget
    if p.order > budget:
        raise CapacityError(f"{p.label()} has {p.order} elements, above the element budget {budget}")
    return [ClassRecord(u=g.u, v=g.v,
                        class_size=orbit_size_conj(p, g),
                        aut_orbit_size=orbit_size_aut(p, g),
                        element_order=element_order(p, g),
                        centralizer_order=centralizer_order(p, g))
            for g in conjugacy_class_representatives(p)]


def build_class_report(p: ZmParams, include_classes: Optional[bool] = None) -> ClassReport:
    """Invariants of p; class records are attached when mn is within the oracle budget
    unless include_classes says otherwise."""
    if include_classes is None:
        include_classes = p.order <= get_settings().budget
    classes = class_records(p) if include_classes else None
    report = ClassReport(params=p,
                         group_order=p.order,
                         center_order=p.center_order,
                         aut_order=p.aut_order,
                         k=count_classes(p),
                         k_prime=count_aut_classes(p),
                         k_bounds=k_conj_bounds(p),
                         k_prime_bounds=k_prime_bounds(p),
                         subgroup_count=subgroup_count(p),
                         classes=classes)
    if classes is not None and len(classes) != report.k:
        logger.warning(f"{p.label()}: {len(classes)} class records but k={report.k}")
    return report


def subgroup_rows(p: ZmParams) -> List[SubgroupRow]:
    return [SubgroupRow(m1=t.m1, n1=t.n1, s=t.s,
                        order=subgroup_order(p, t),
                        normal=is_normal(p, t),
                        cyclic=is_cyclic(p, t))
            for t in enumerate_L(p)]


def valid_triples(m_max: int, n_max: int) -> Iterator[ZmParams]:
    """Every valid (m, n, r) with m <= m_max, n <= n_max, in (m, n, r) order."""
    for m in range(1, m_max + 1):
        yield from valid_triples_in(m, n_max)


def valid_triples_by_order(max_order: int) -> Iterator[ZmParams]:
    """Every valid triple with mn <= max_order, in (m, n, r) order."""
    for m in range(1, max_order + 1):
        yield from valid_triples_in(m, max_order // m)


def valid_triples_in(m: int, n_max: int) -> Iterator[ZmParams]:
    for n in range(1, n_max + 1):
        for r in range(m):
            try:
                yield validate(m, n, r)
            except InvalidParametersError:
                continue


def table_rows(m_max: int, n_max: int) -> List[TableRow]:
    budget = get_settings().element_budget
    if m_max * n_max > budget:
        raise CapacityError(f"table range m<={m_max}, n<={n_max} above the element budget {budget}")
    rows = []
    for p in valid_triples(m_max, n_max):
        rows.append(TableRow(m=p.m, n=p.n, r=p.r, d=p.d,
                             group_order=p.order,
                             k=count_classes(p),
                             k_prime=count_aut_classes(p),
                             subgroup_count=subgroup_count(p)))
    logger.info(f"table m<={m_max}, n<={n_max}: {len(rows)} valid triples")
    return rows


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _csv_cell(value: Any) -> Any:
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def render_csv(rows: Sequence[BaseModel], columns: List[str]) -> str:
    records = [{key: _csv_cell(value) for key, value in row.model_dump().items()}
               for row in rows]
    df = pd.DataFrame(records, columns=columns)
    return df.to_csv(index=False, lineterminator="\n")


def render_json(payload: Any) -> str:
    if isinstance(payload, BaseModel):
        data = payload.model_dump(mode="json")
    else:
        data = [item.model_dump(mode="json") for item in payload]
    return json.dumps(data, indent=2) + "\n"


def render_text(report: ClassReport) -> str:
    p = report.params
    lines = [
        f"group: {p.label()}",
        f"d: {p.d}",
        f"group_order: {report.group_order}",
        f"center_order: {report.center_order}",
        f"aut_order: {report.aut_order}",
        f"k: {report.k}",
        f"k_bounds: [{report.k_bounds.lower}, {report.k_bounds.upper}]",
        f"k_prime: {report.k_prime}",
        f"k_prime_bounds: [{report.k_prime_bounds.lower}, {report.k_prime_bounds.upper}]",
        f"subgroup_count: {report.subgroup_count}",
    ]
    if report.classes is not None:
        lines.append("classes (u v size aut_orbit order centralizer):")
        lines.extend(f"  {c.u} {c.v} {c.class_size} {c.aut_orbit_size} "
                     f"{c.element_order} {c.centralizer_order}" for c in report.classes)
    return "\n".join(lines) + "\n"