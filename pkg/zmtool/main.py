from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from zmtool import __version__
from zmtool.exceptions import (CapacityError, InvalidAutomorphismError,
                               InvalidParametersError, PreconditionError,
                               ZmError)
from zmtool.services import reports
from zmtool.services.verification import run_verification
from zmtool.services.zm_core import validate

app = FastAPI(title="zmtool", version=__version__)


def _error(status_code: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status_code,
                        content={"status": "error", "message": message})


@app.exception_handler(InvalidParametersError)
@app.exception_handler(InvalidAutomorphismError)
@app.exception_handler(PreconditionError)
async def invalid_input_handler(request: Request, exc: ZmError):
    return _error(422, str(exc))


@app.exception_handler(CapacityError)
async def capacity_handler(request: Request, exc: CapacityError):
    return _error(413, str(exc))


@app.exception_handler(ZmError)
async def zm_error_handler(request: Request, exc: ZmError):
    return _error(500, str(exc))


@app.get("/groups/{m}/{n}/{r}")
def group_info(m: int, n: int, r: int):
    """Invariants of ZM(m, n, r) without the per-class records."""
    report = reports.build_class_report(validate(m, n, r), include_classes=False)
    return {"status": "success", "data": report.model_dump(mode="json")}


@app.get("/groups/{m}/{n}/{r}/classes")
def group_classes(m: int, n: int, r: int):
    records = reports.class_records(validate(m, n, r))
    return {"status": "success", "data": [c.model_dump(mode="json") for c in records]}


@app.get("/groups/{m}/{n}/{r}/subgroups")
def group_subgroups(m: int, n: int, r: int):
    rows = reports.subgroup_rows(validate(m, n, r))
    return {"status": "success", "data": [s.model_dump(mode="json") for s in rows]}


@app.get("/groups/{m}/{n}/{r}/verify")
def group_verify(m: int, n: int, r: int, budget: Optional[int] = None):
    """Oracle checks for one group; data.passed is false when any check fails."""
    summary = run_verification(validate(m, n, r), budget=budget)
    return {"status": "success", "data": summary.model_dump(mode="json")}


@app.get("/table")
def table(m_max: int, n_max: int):
    rows = reports.table_rows(m_max, n_max)
    return {"status": "success", "data": [row.model_dump(mode="json") for row in rows]}


@app.get("/healthcheck")
async def healthcheck():
    """Healthcheck endpoint to check if the application is running."""
    return {"status": "ok"}
