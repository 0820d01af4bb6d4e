from pydantic import BaseModel, Field, model_validator
from typing import List, Optional


class Counterexample(BaseModel):
    word: str
    input: str
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    error: Optional[str] = None


class CheckReport(BaseModel):
    label: str
    kappa: int = Field(..., ge=1)
    cases: int = Field(..., ge=0)
    failures: int = Field(..., ge=0)
    seed: Optional[int] = None
    counterexample: Optional[Counterexample] = None

    @model_validator(mode="after")
    def check_counterexample(self):
        """Контрпример хранится тогда и только тогда, когда есть ошибки"""
        if (self.failures == 0) != (self.counterexample is None):
            raise ValueError("counterexample must be present iff failures > 0")
        if self.failures > self.cases:
            raise ValueError("failures cannot exceed cases")
        return self

    @property
    def ok(self) -> bool:
        return self.failures == 0


class SuiteSizes(BaseModel):
    """Размеры проверочных наборов; значения по умолчанию зависят от kappa (см. default_sizes)"""
    poly_bound: int = Field(3, ge=0)
    skein_bound: int = Field(2, ge=0)
    intertwiner_bound: int = Field(2, ge=0)
    words: int = Field(200, ge=0)
    word_length: int = Field(6, ge=1)
    monomials_per_word: int = Field(3, ge=1)
    monomial_bound: int = Field(2, ge=0)
    subrep_words: int = Field(100, ge=0)
    subrep_length: int = Field(5, ge=1)
    division_cases: int = Field(1000, ge=0)
    push_cases: int = Field(500, ge=0)
    inverse_cases: int = Field(200, ge=0)


class SuiteSummary(BaseModel):
    suite: str
    kappa: int
    seed: int
    sizes: SuiteSizes
    reports: List[CheckReport]
    cases: int
    failures: int
    elapsed: float

    @property
    def ok(self) -> bool:
        return self.failures == 0
