"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class SpaceDoc(BaseModel):
    points: list[str]
    opens: list[list[str]]


class MapDoc(BaseModel):
    dom: SpaceDoc
    cod: SpaceDoc
    map: dict[str, str]


class CheckSpaceRequest(BaseModel):
    space: SpaceDoc
    strict: bool = False


class CheckSpaceResponse(BaseModel):
    space: SpaceDoc
    added: list[list[str]]


class FamiliesRequest(BaseModel):
    space: SpaceDoc
    kind: str


class FamiliesResponse(BaseModel):
    kind: str
    members: list[list[str]]


class OpRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    space: SpaceDoc
    which: str
    set_: list[str] = Field(alias="set")


class OpResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    which: str
    set_: list[str] = Field(alias="set", serialization_alias="set")
    result: list[str]


class VerdictModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    cls: str = Field(alias="class", serialization_alias="class")
    holds: bool
    witness: dict | None = None


class ClassifyRequest(BaseModel):
    map: MapDoc
    classes: list[str] | None = None  # None classifies against every class


class ClassifyResponse(BaseModel):
    verdicts: list[VerdictModel]


class VerifyRequest(BaseModel):
    theorem: str
    n_max: int | None = None
    sample: int | None = None
    seed: int = 0
    budget: int | None = None


class VerifyResponse(BaseModel):
    theorem: str
    params: dict
    checked: int
    hypothesis_met: int
    violations: list[dict]
    notes: dict
    wall_time_s: float


class ReproduceRequest(BaseModel):
    example: str = "all"  # one of the bundled ids, or "all"


class ReproduceResponse(BaseModel):
    results: list[dict]
    reproduced: bool


class SearchRequest(BaseModel):
    question: str = "open-question"
    n_max: int = 3
    budget: int | None = None
    resume: str | None = None
    implication: list[str] | None = None  # [from-class, to-class]


class SearchResponse(BaseModel):
    question: str
    searched: dict
    examined: int
    witness: dict | None = None
    resumable_cursor: str | None = None
    wall_time_s: float


class EnumerateRequest(BaseModel):
    n: int
    dedup: bool = False


class EnumerateResponse(BaseModel):
    spaces: list[SpaceDoc]


class ErrorBody(BaseModel):
    code: str
    message: str
    context: dict | None = None
