""" Outcome of checking one statement on one lattice """
from dataclasses import dataclass
from enum import Enum


class CheckStatus(Enum):
    VERIFIED = "verified"
    VIOLATED = "violated"
    VACUOUS = "vacuous"
    HYPOTHESIS_FAILED = "hypothesis failed"


@dataclass(frozen=True)
class CheckReport:
    statement: str
    status: CheckStatus
    checked_instances: int = 0
    counterexample: dict[str, str] | None = None
    note: str = ""
    subject: str = ""
    hypothesis_failures: int = 0
    vacuous_instances: int = 0

    def __post_init__(self):
        if self.status is CheckStatus.VIOLATED and not self.counterexample:
            raise ValueError(f"{self.statement}: a violated report needs a counterexample")

    @property
    def holds(self) -> bool:
        return self.status is not CheckStatus.VIOLATED

    def describe(self) -> str:
        out = f"{self.statement:<22} {self.subject:<12} {self.status.value:<18} checked={self.checked_instances}"
        if self.vacuous_instances:
            out += f" vacuous={self.vacuous_instances}"
        if self.hypothesis_failures:
            out += f" hypothesis_failed={self.hypothesis_failures}"
        if self.note:
            out += f"  ({self.note})"
        if self.counterexample:
            out += "\n    counterexample: " + ", ".join(f"{key}={value}" for key, value in self.counterexample.items())
        return out
