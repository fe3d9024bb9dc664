"""Wire form of verification reports."""

from typing import Any

from pydantic import BaseModel

from app.models.run import VerificationReport


class ClaimSchema(BaseModel):
    name: str
    computed: Any
    expected: Any
    passed: bool


class VerificationReportSchema(BaseModel):
    seed: int
    trials: int
    claims: list[ClaimSchema]
    passed: bool

    @classmethod
    def from_report(cls, report: VerificationReport) -> "VerificationReportSchema":
        return cls(
            seed=report.seed,
            trials=report.trials,
            claims=[ClaimSchema(**c.model_dump()) for c in report.claims],
            passed=report.passed,
        )
