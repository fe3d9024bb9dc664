"""Per-invocation settings of a command."""

from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from app.core.config import settings


class RunConfig(BaseModel):
    """Command name, inputs, output and the seeded trial count of one run."""

    model_config = ConfigDict(frozen=True)

    command: str
    inputs: tuple[Path, ...] = ()
    out: Optional[Path] = None
    dot: Optional[Path] = None
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED)
    trials: int = Field(default_factory=lambda: settings.DEFAULT_TRIALS, ge=1)
    order: int = Field(default_factory=lambda: settings.LIFT_ORDER, ge=1)
    verbose: bool = False


ClaimValue = Union[str, int, bool, list, dict, None]


class Claim(BaseModel):
    """One checked statement: what was computed against what was expected."""

    model_config = ConfigDict(frozen=True)

    name: str
    computed: ClaimValue
    expected: ClaimValue
    passed: bool


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int
    trials: int
    claims: tuple[Claim, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def failed(self) -> list[Claim]:
        return [c for c in self.claims if not c.passed]
