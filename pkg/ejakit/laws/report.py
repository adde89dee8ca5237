from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ejakit.serialization import dumps


class LawResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    law_id: str
    suite: str
    trials: int
    max_residual: float
    factor: float
    tolerance: float
    passed: bool
    witness: Optional[Dict[str, Any]] = None


class LawSuiteReport(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    suite_name: str
    algebra_descriptor: Dict[str, Any]
    trials: int
    seed: int
    max_residual: float
    tolerance: float
    passed: bool = Field(alias="pass")
    per_law: List[LawResult]

    def to_json(self) -> str:
        return dumps(self.model_dump(by_alias=True))


def _larger(a: LawResult, b: LawResult) -> LawResult:
    if a.max_residual != b.max_residual:
        return a if a.max_residual > b.max_residual else b
    # equal residuals: pick by content so the merge does not depend on argument order
    return min(a, b, key=lambda r: dumps(r.model_dump()))


def merge_reports(a: LawSuiteReport, b: LawSuiteReport) -> LawSuiteReport:
    """
    Combine shards of one suite run; associative and commutative.
    Laws present in both keep the larger residual.
    """
    by_id: Dict[str, LawResult] = {}
    for result in list(a.per_law) + list(b.per_law):
        key = f"{result.suite}/{result.law_id}"
        by_id[key] = _larger(by_id[key], result) if key in by_id else result
    per_law = [by_id[key] for key in sorted(by_id)]
    return LawSuiteReport(
        suite_name=a.suite_name,
        algebra_descriptor=a.algebra_descriptor,
        trials=a.trials,
        seed=a.seed,
        max_residual=max((r.max_residual for r in per_law), default=0.0),
        tolerance=a.tolerance,
        passed=all(r.passed for r in per_law),
        per_law=per_law,
    )
