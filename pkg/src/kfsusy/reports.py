"""Named residual checks and spectra, with JSON round-tripping."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field


@dataclass
class Check:
    name: str
    residual: float
    tolerance: float
    passed: bool
    # "upper": residual must stay below tolerance; "lower": value must exceed it
    kind: str = "upper"


@dataclass
class CheckReport:
    """A suite of residual checks; the suite passes iff every check passes."""

    suite: str
    checks: list[Check] = field(default_factory=list)

    def expect_small(self, name: str, residual: float, tol: float) -> Check:
        residual = float(residual)
        check = Check(name, residual, float(tol), bool(residual < tol), "upper")
        self.checks.append(check)
        return check

    def expect_large(self, name: str, value: float, threshold: float) -> Check:
        value = float(value)
        check = Check(name, value, float(threshold), bool(value > threshold), "lower")
        self.checks.append(check)
        return check

    def expect_true(self, name: str, ok: bool, residual: float = 0.0, tol: float = 0.0) -> Check:
        check = Check(name, float(residual), float(tol), bool(ok), "flag")
        self.checks.append(check)
        return check

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.residual, c.tolerance, c.passed, c.kind))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "checks": [asdict(c) for c in self.checks]}

    @classmethod
    def from_dict(cls, data: dict) -> "CheckReport":
        return cls(data["suite"], [Check(**c) for c in data["checks"]])

    def format_table(self) -> str:
        width = max([len(c.name) for c in self.checks] + [5])
        lines = [f"== {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            op = {"upper": "<", "lower": ">", "flag": " "}[c.kind]
            lines.append(f"  {'ok ' if c.passed else 'BAD'} {c.name:<{width}}  "
                         f"{c.residual:.3e} {op} {c.tolerance:.1e}")
        return "\n".join(lines)


@dataclass
class Level:
    energy: float
    degeneracy: int


@dataclass
class SpectrumReport:
    """Energy levels (ascending) with degeneracies, read off a diagonal Hamiltonian."""

    k: int
    boson_cutoff: int
    levels: list[Level]
    spacing: float | None
    discarded: int

    @property
    def energies(self) -> list[float]:
        return [lv.energy for lv in self.levels]

    @property
    def degeneracies(self) -> list[int]:
        return [lv.degeneracy for lv in self.levels]

    def head(self, n: int) -> "SpectrumReport":
        return SpectrumReport(self.k, self.boson_cutoff, self.levels[:n], self.spacing, self.discarded)

    def to_dict(self) -> dict:
        return {"k": self.k, "boson_cutoff": self.boson_cutoff,
                "levels": [asdict(lv) for lv in self.levels],
                "spacing": self.spacing, "discarded": self.discarded}

    @classmethod
    def from_dict(cls, data: dict) -> "SpectrumReport":
        return cls(data["k"], data["boson_cutoff"], [Level(**lv) for lv in data["levels"]],
                   data["spacing"], data["discarded"])

    def format_table(self) -> str:
        lines = [f"k={self.k}  boson cutoff={self.boson_cutoff}  spacing={self.spacing}"]
        lines += [f"  E={lv.energy:+.6f}  degeneracy={lv.degeneracy}" for lv in self.levels]
        return "\n".join(lines)
