from pydantic import BaseModel, Field
from typing import List, Literal, Optional

from dto.check_dto import SuiteSizes


class EvalRequest(BaseModel):
    rep: Literal["poly", "skein"]
    kappa: int = Field(..., ge=1)
    word: str = ""
    element: str
    d_eq_s: bool = False


class EvalResponse(BaseModel):
    rep: str
    kappa: int
    word: str
    element: str
    result: str
    terms: int


class RelationInfo(BaseModel):
    label: int
    lhs: str
    rhs: str


class RelationsResponse(BaseModel):
    kappa: int
    relations: List[RelationInfo]


class CheckRequest(BaseModel):
    suite: Literal["relations", "intertwiner", "subrep", "averaging", "example", "crossing",
                   "inverses", "division", "push", "all"] = "all"
    kappa: int = Field(..., ge=1, le=5)
    seed: int = 0
    sizes: Optional[SuiteSizes] = None


class BenchRecord(BaseModel):
    rep: str
    kappa: int = Field(..., ge=1)
    word: str
    word_length: int = Field(..., ge=0)
    input_terms: int
    output_terms: int
    seconds: float
