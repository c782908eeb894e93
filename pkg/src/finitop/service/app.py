"""FastAPI service wrapping the verification engine.

Every endpoint is a pure function of its request body; responses carry no
timestamps (wall times are reported as separate fields so thin clients can
route them to diagnostics).  Domain errors surface as structured 422
bodies with the error taxonomy code.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..classify import CLASSES, is_in_class
from ..core import complete_family, mask_of, validate_topology
from ..documents import (
    labels_to_mask,
    map_from_doc,
    mask_to_labels,
    space_from_doc,
    space_to_doc,
    verdict_doc,
)
from ..errors import FinitopError, UnknownClass, UnknownKind
from ..examples import EXAMPLE_IDS, reproduce, reproduce_all
from ..operators import (
    KINDS,
    delta_closure,
    delta_interior,
    e_theta_closure,
    e_theta_interior,
    family,
    kernel_closure,
    kernel_interior,
    theta_closure,
    theta_interior,
)
from ..core import closure, interior
from ..search import enumerate_topologies, open_question_search, verify_implication
from ..theorems import theorem_ids, verify_theorem
from .models import (
    CheckSpaceRequest,
    CheckSpaceResponse,
    ClassifyRequest,
    ClassifyResponse,
    EnumerateRequest,
    EnumerateResponse,
    FamiliesRequest,
    FamiliesResponse,
    MapDoc,
    OpRequest,
    OpResponse,
    ReproduceRequest,
    ReproduceResponse,
    SearchRequest,
    SearchResponse,
    SpaceDoc,
    VerdictModel,
    VerifyRequest,
    VerifyResponse,
)

_PLAIN_OPS = {
    "interior": interior,
    "closure": closure,
    "delta-interior": delta_interior,
    "delta-closure": delta_closure,
    "theta-interior": theta_interior,
    "theta-closure": theta_closure,
    "e-theta-interior": e_theta_interior,
    "e-theta-closure": e_theta_closure,
}

_KERNEL_OPS = {
    "semi-closure": ("semiopen", kernel_closure),
    "semi-interior": ("semiopen", kernel_interior),
    "pre-closure": ("preopen", kernel_closure),
    "pre-interior": ("preopen", kernel_interior),
    "b-closure": ("b-open", kernel_closure),
    "b-interior": ("b-open", kernel_interior),
    "e-closure": ("e-open", kernel_closure),
    "e-interior": ("e-open", kernel_interior),
    "a-closure": ("a-open", kernel_closure),
    "a-interior": ("a-open", kernel_interior),
}

OPERATOR_NAMES: tuple[str, ...] = tuple(_PLAIN_OPS) + tuple(_KERNEL_OPS)


def create_app() -> FastAPI:
    app = FastAPI(title="finitop", version=__version__)

    @app.exception_handler(FinitopError)
    async def _domain_error(_request: Request, exc: FinitopError):
        return JSONResponse(status_code=422, content={"error": exc.to_doc()})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/meta")
    def meta() -> dict:
        return {
            "classes": list(CLASSES),
            "kinds": list(KINDS),
            "operators": list(OPERATOR_NAMES),
            "theorems": list(theorem_ids()),
            "examples": list(EXAMPLE_IDS),
        }

    @app.post("/check-space", response_model=CheckSpaceResponse)
    def check_space(req: CheckSpaceRequest) -> CheckSpaceResponse:
        doc = req.space.model_dump()
        space = space_from_doc(doc, strict=req.strict)
        if req.strict:
            added: list[list[str]] = []
        else:
            index = {name: i for i, name in enumerate(doc["points"])}
            masks = [mask_of(index[p] for p in entry) for entry in doc["opens"]]
            _completed, added_masks = complete_family(len(doc["points"]), masks)
            added = [mask_to_labels(space, m) for m in added_masks]
        return CheckSpaceResponse(space=SpaceDoc(**space_to_doc(space)), added=added)

    @app.post("/families", response_model=FamiliesResponse)
    def families(req: FamiliesRequest) -> FamiliesResponse:
        space = space_from_doc(req.space.model_dump())
        members = family(space, req.kind)
        return FamiliesResponse(
            kind=req.kind,
            members=[mask_to_labels(space, m) for m in members.members],
        )

    @app.post("/op", response_model=OpResponse, response_model_by_alias=True)
    def operator(req: OpRequest) -> OpResponse:
        space = space_from_doc(req.space.model_dump())
        mask = labels_to_mask(space, req.set_)
        if req.which in _PLAIN_OPS:
            result = _PLAIN_OPS[req.which](space, mask)
        elif req.which in _KERNEL_OPS:
            kind, fn = _KERNEL_OPS[req.which]
            result = fn(space, kind, mask)
        else:
            raise UnknownKind(f"unknown operator {req.which!r}", which=req.which)
        return OpResponse(
            which=req.which,
            set=req.set_,
            result=mask_to_labels(space, result),
        )

    @app.post("/classify", response_model=ClassifyResponse)
    def classify(req: ClassifyRequest) -> ClassifyResponse:
        f = map_from_doc(req.map.model_dump())
        names = req.classes if req.classes is not None else list(CLASSES)
        for name in names:
            if name not in CLASSES:
                raise UnknownClass(f"unknown continuity class {name!r}", cls=name)
        verdicts = []
        for name in names:
            verdict = is_in_class(f, name)
            doc = verdict_doc(f, name, verdict.holds, verdict.witness)
            verdicts.append(VerdictModel(**{"class": doc["class"]}, holds=doc["holds"],
                                         witness=doc["witness"]))
        return ClassifyResponse(verdicts=verdicts)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        report = verify_theorem(
            req.theorem,
            n_max=req.n_max,
            sample=req.sample,
            seed=req.seed,
            budget=req.budget,
        )
        return VerifyResponse(
            theorem=report.theorem,
            params=report.params,
            checked=report.checked,
            hypothesis_met=report.hypothesis_met,
            violations=report.violations,
            notes=report.notes,
            wall_time_s=report.wall_time_s,
        )

    @app.post("/reproduce", response_model=ReproduceResponse)
    def reproduce_endpoint(req: ReproduceRequest) -> ReproduceResponse:
        if req.example == "all":
            results, ok = reproduce_all()
        else:
            result = reproduce(req.example)
            results, ok = [result], result["reproduced"]
        return ReproduceResponse(results=results, reproduced=ok)

    @app.post("/search", response_model=SearchResponse, response_model_exclude_none=True)
    def search(req: SearchRequest) -> SearchResponse:
        if req.implication is not None:
            if len(req.implication) != 2:
                raise UnknownClass("implication needs exactly two class names")
            report = verify_implication(
                req.implication[0],
                req.implication[1],
                n_max=req.n_max,
                budget=req.budget,
                resume=req.resume,
            )
        elif req.question == "open-question":
            report = open_question_search(
                n_max=req.n_max, budget=req.budget, resume=req.resume
            )
        else:
            raise UnknownClass(f"unknown search question {req.question!r}")
        return SearchResponse(
            question=report.question,
            searched=report.searched,
            examined=report.examined,
            witness=report.witness,
            resumable_cursor=report.resumable_cursor,
            wall_time_s=report.wall_time_s,
        )

    @app.post("/enumerate", response_model=EnumerateResponse)
    def enumerate_spaces(req: EnumerateRequest) -> EnumerateResponse:
        docs = [
            SpaceDoc(**space_to_doc(space))
            for space in enumerate_topologies(req.n, dedup=req.dedup)
        ]
        return EnumerateResponse(spaces=docs)

    return app


app = create_app()
