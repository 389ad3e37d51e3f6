"""Verdicts and structure reports."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..matrix import SuperIntervalMatrix
from .carrier import FAILS, HOLDS_EXHAUSTIVE, HOLDS_SAMPLED, HOLDS_STRUCTURAL, INAPPLICABLE, UNKNOWN

STATUSES = (HOLDS_EXHAUSTIVE, HOLDS_SAMPLED, HOLDS_STRUCTURAL, FAILS, INAPPLICABLE, UNKNOWN)


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: tuple | None = None
    note: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown verdict {self.status!r}")
        if self.status == FAILS and not self.witness:
            raise ValueError("a failing verdict needs a witness")

    @property
    def holds(self) -> bool:
        return self.status.startswith("holds")

    @property
    def fails(self) -> bool:
        return self.status == FAILS


def _encode(x):
    from ..textio import to_json_obj

    if isinstance(x, SuperIntervalMatrix):
        return to_json_obj(x)
    if isinstance(x, (list, tuple)):
        return [_encode(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _encode(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class StructureReport:
    subject: str
    verdicts: dict = field(default_factory=dict)
    carrier_size: int | None = None
    seed: int | None = None
    sample_count: int | None = None
    details: dict = field(default_factory=dict)

    def __getitem__(self, axiom: str) -> Verdict:
        return self.verdicts[axiom]

    def add(self, axiom: str, verdict: Verdict):
        self.verdicts[axiom] = verdict
        if verdict.status == HOLDS_SAMPLED and self.seed is None:
            raise AssertionError("sampled verdicts must record their seed")

    @property
    def holds(self) -> bool:
        """True when no axiom failed or stayed undecided."""
        return all(v.holds or v.status == INAPPLICABLE for v in self.verdicts.values())

    @property
    def failures(self) -> dict:
        return {k: v for k, v in self.verdicts.items() if v.fails}

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "carrier_size": self.carrier_size,
            "seed": self.seed,
            "sample_count": self.sample_count,
            "verdicts": {
                k: {"status": v.status, "note": v.note, "witness": _encode(v.witness)}
                for k, v in self.verdicts.items()
            },
            "details": _encode(self.details),
        }

    def to_text(self, decimals: bool = False) -> str:
        from ..textio import render_text

        lines = [f"{self.subject}"]
        if self.carrier_size is not None:
            lines.append(f"carrier size: {self.carrier_size}")
        if self.seed is not None:
            lines.append(f"seed: {self.seed}  samples: {self.sample_count}")
        for k, v in self.verdicts.items():
            line = f"{k}: {v.status}"
            if v.note:
                line += f" ({v.note})"
            lines.append(line)
            if v.witness:
                for w in v.witness:
                    if isinstance(w, SuperIntervalMatrix):
                        lines.extend("    " + s for s in render_text(w, decimals).splitlines())
                    else:
                        lines.append(f"    {w}")
        for k, v in self.details.items():
            if isinstance(v, (list, tuple)) and v and isinstance(v[0], SuperIntervalMatrix):
                lines.append(f"{k}:")
                for w in v:
                    lines.extend("    " + s for s in render_text(w, decimals).splitlines())
            else:
                lines.append(f"{k}: {v}")
        return "\n".join(lines)
