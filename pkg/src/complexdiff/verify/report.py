"""Small result containers shared by the checks."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """``value <relation> bound`` within ``tol``.

    ``relation`` is one of ``">="``, ``"<="`` or ``"=="``.  A soft check
    (``hard=False``) is reported but does not fail its report.
    """

    name: str
    value: float
    bound: float
    relation: str
    tol: float = 1e-9
    hard: bool = True

    @property
    def margin(self) -> float:
        if self.relation == ">=":
            return self.value - self.bound
        if self.relation == "<=":
            return self.bound - self.value
        return -abs(self.value - self.bound)

    @property
    def passed(self) -> bool:
        return self.margin >= -self.tol

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "value": float(self.value),
            "bound": float(self.bound),
            "relation": self.relation,
            "tol": float(self.tol),
            "hard": self.hard,
            "passed": self.passed,
        }


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, *args, **kwargs) -> Check:
        c = Check(*args, **kwargs)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.hard)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.hard and not c.passed]

    @property
    def flagged(self) -> list[Check]:
        return [c for c in self.checks if not c.hard and not c.passed]

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
            "info": {k: _plain(v) for k, v in self.info.items()},
        }


def _plain(v):
    if hasattr(v, "tolist"):
        return v.tolist()
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v
