import json
import logging
from typing import List

from fastapi import FastAPI, Request, Response, status
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from core.errors import (
    ContractViolationError,
    DimensionMismatchError,
    DomainError,
    GuardExceededError,
    InputDataError,
    PreconditionError,
)
from core.lex_order import LexOrder
from core.point_set import PointSet
from dependency_injection import CertificationPipelineFactory, ExtremalityDeciderFactory
from downshift.point_set_downshift import downshift_seq
from groebner.reduction import reduce
from groebner.universal_basis import universal_basis
from shattering.shattering import shattered_family
from standard_monomials.frr_recursion import sm_lex
from cli.parsing import parse_polynomial
from config import config

logger = logging.getLogger(__name__)

app = FastAPI()

# dependency injection
extremality_decider_factory = ExtremalityDeciderFactory()
certification_pipeline_factory = CertificationPipelineFactory()


app.add_middleware(
    CORSMiddleware,
    allow_origins=[origin.strip() for origin in config.get("api", "cors_origins").split(",")],
    allow_credentials=False,
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)


class PointSetRequest(BaseModel):
    n: int
    k: int
    points: List[List[int]]


class SmRequest(PointSetRequest):
    order: List[int] | None = None


class DownshiftRequest(PointSetRequest):
    seq: List[int]


class ExtremalRequest(PointSetRequest):
    method: str = "fast"
    verbose: bool = False


class GroebnerRequest(PointSetRequest):
    force: bool = False
    order: List[int] | None = None


class ReduceRequest(GroebnerRequest):
    polynomial: str


def _error(message: str, status_code: int) -> Response:
    json_str = json.dumps({"error": message}, default=str)
    return Response(content=json_str, media_type="application/json", status_code=status_code)


@app.exception_handler(DomainError)
@app.exception_handler(InputDataError)
@app.exception_handler(DimensionMismatchError)
async def bad_input(request: Request, exc: Exception):
    return _error(str(exc), status.HTTP_400_BAD_REQUEST)


@app.exception_handler(PreconditionError)
async def precondition_failed(request: Request, exc: PreconditionError):
    return _error(str(exc), status.HTTP_409_CONFLICT)


@app.exception_handler(GuardExceededError)
async def guard_exceeded(request: Request, exc: GuardExceededError):
    return _error(str(exc), status.HTTP_413_REQUEST_ENTITY_TOO_LARGE)


@app.exception_handler(ContractViolationError)
async def internal_error(request: Request, exc: ContractViolationError):
    logger.error("internal consistency failure: %s", exc)
    return _error(str(exc), status.HTTP_500_INTERNAL_SERVER_ERROR)


def _point_set(request: PointSetRequest) -> PointSet:
    return PointSet(request.n, request.k, tuple(tuple(p) for p in request.points))


def _order(indices: List[int] | None, n: int) -> LexOrder:
    if indices is None:
        return LexOrder.identity(n)
    return LexOrder.parse(",".join(map(str, indices)), n)


@app.get("/")
async def info():
    json_str = json.dumps({"api": "extremal point set toolkit running", "version": "1.0.0"}, default=str)
    return Response(content=json_str, media_type="application/json", status_code=status.HTTP_200_OK)


@app.post("/sm/")
async def sm(request: SmRequest):
    V = _point_set(request)
    return JSONResponse(content=sm_lex(V, _order(request.order, V.n)).to_json())


@app.post("/downshift/")
async def downshift(request: DownshiftRequest):
    V = _point_set(request)
    if any(not 1 <= i <= V.n for i in request.seq):
        raise DomainError(f"seq entries must lie in 1..{V.n}")
    shifted = downshift_seq(V, [i - 1 for i in request.seq])
    return JSONResponse(content={
        "seq": request.seq,
        "n": shifted.n,
        "k": shifted.k,
        "points": [list(p) for p in shifted],
    })


@app.post("/shatter/")
async def shatter(request: PointSetRequest):
    return JSONResponse(content=shattered_family(_point_set(request)).to_json())


@app.post("/extremal/")
async def extremal(request: ExtremalRequest):
    decider = extremality_decider_factory.create(request.method)
    verdict = decider.decide(_point_set(request))
    return JSONResponse(content=verdict.to_json(verbose=request.verbose))


@app.post("/groebner/")
async def groebner(request: GroebnerRequest):
    V = _point_set(request)
    order = _order(request.order, V.n) if request.order else None
    basis = universal_basis(V, force=request.force, order=order, pipeline=certification_pipeline_factory.create())
    return JSONResponse(content=basis.to_json())


@app.post("/reduce/")
async def reduce_polynomial(request: ReduceRequest):
    V = _point_set(request)
    order = _order(request.order, V.n)
    p = parse_polynomial(request.polynomial, V.n)
    basis = universal_basis(V, force=request.force, order=order, pipeline=certification_pipeline_factory.create())
    return JSONResponse(content={
        "order": order.one_based(),
        "polynomial": p.render(order),
        "normal_form": reduce(p, basis, order).render(order),
    })
