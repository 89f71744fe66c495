"""Verdict type shared by the quartic and octavic classifiers."""

from __future__ import annotations

from dataclasses import dataclass

STABLE = "stable"
STRICTLY_SEMISTABLE = "strictly_semistable"
UNSTABLE = "unstable"

DOUBLE_CONIC = "double_conic"
TWO_TANGENT_CONICS = "two_tangent_conics"
NOT_MINIMAL = "not_minimal"
MINIMAL = "minimal"

ORBIT_LIMIT_V0 = "maps to v0"


@dataclass(frozen=True)
class StabilityVerdict:
    stability: str
    minimal_orbit: str | None = None
    orbit_limit: str | None = None
    witnesses: tuple = ()
    notes: tuple = ()

    def __post_init__(self):
        if self.stability not in (STABLE, STRICTLY_SEMISTABLE, UNSTABLE):
            raise ValueError(f"unknown stability class {self.stability!r}")
        if self.minimal_orbit is not None and self.stability != STRICTLY_SEMISTABLE:
            raise ValueError("minimal_orbit is only set for strictly semistable input")

    def to_json(self, witnesses=True):
        out = {
            "class": self.stability,
            "minimal_orbit": self.minimal_orbit,
            "orbit_limit": self.orbit_limit,
            "notes": list(self.notes),
        }
        if witnesses:
            out["witnesses"] = [w.to_json() for w in self.witnesses]
        return out

    def summary(self):
        parts = [self.stability]
        if self.minimal_orbit:
            parts.append(self.minimal_orbit)
        if self.orbit_limit:
            parts.append(self.orbit_limit)
        return ", ".join(parts)
