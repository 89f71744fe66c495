"""Dictionary from stability verdicts to the K3 side.

Nothing here computes on surfaces: each report is a lookup keyed by the
verdict, with the lattice data delegated to :mod:`k3moduli.strata`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import quartic as q
from . import stability as st
from .octavic import TWO_QUADRUPLE_POINTS
from .strata import SingularType, StratumReport, stratum_report

__all__ = [
    "CoverError",
    "CoverReport",
    "FiberSummary",
    "cover_report_quartic",
    "cover_report_octavic",
    "fibration_fibers",
]

INTERIOR = "interior_smooth"
BOUNDARY_CUSP = "boundary_cusp"
POINT_V0 = "point_v0_blown_up"
MIRROR = "D_h"

TYPE_I, TYPE_II, SIGNIFICANT = "Type I", "Type II", "significant_limit"

# singularity of the 4:1 cover over each curve singularity
COVER_SINGULARITY = {q.NODE: "A3", q.CUSP: "E6", q.TACNODE: "~E7"}

EULER = {"III": 3, "I0*": 6}
GENERIC_FIBERS = {
    (1, 0): {"III": 8},
    (0, 1): {"III": 6, "I0*": 1},
}


class CoverError(ValueError):
    pass


def stratum_label(t: SingularType) -> str:
    return f"D_({t.n},{t.c})"


@dataclass(frozen=True)
class FiberSummary:
    type: SingularType
    fibers: tuple          # ((kodaira symbol, count), ...)
    euler_sum: int

    @property
    def residual_euler(self):
        return 24 - self.euler_sum

    def to_json(self):
        return {"fibers": dict(self.fibers), "euler_sum": self.euler_sum,
                "residual_euler": self.residual_euler, "generic": True}


@dataclass(frozen=True)
class CoverReport:
    input_kind: str
    cover_singularities: tuple       # ((label, count), ...)
    picard: StratumReport | None
    fibration_note: FiberSummary | None
    moduli_location: str
    degeneration_type: str | None

    def to_json(self):
        return {
            "input_kind": self.input_kind,
            "cover_singularities": dict(self.cover_singularities),
            "picard": self.picard.to_json() if self.picard else None,
            "fibration": self.fibration_note.to_json() if self.fibration_note else None,
            "moduli_location": self.moduli_location,
            "degeneration_type": self.degeneration_type,
        }


def fibration_fibers(t) -> FiberSummary:
    """Singular fibres of the elliptic fibration for a generic one-node or one-cusp quartic."""
    t = t if isinstance(t, SingularType) else SingularType(*t)
    key = (t.n, t.c)
    if key not in GENERIC_FIBERS:
        raise CoverError(f"fibration for type {t} is untabulated")
    fibers = GENERIC_FIBERS[key]
    euler = sum(EULER[k] * v for k, v in fibers.items())
    if euler > 24:
        raise AssertionError("fibre Euler numbers exceed 24")
    return FiberSummary(t, tuple(sorted(fibers.items())), euler)


def _count_labels(witnesses):
    counts = Counter()
    for w in witnesses:
        if w.type in COVER_SINGULARITY:
            counts[COVER_SINGULARITY[w.type]] += w.degree
    return tuple(sorted(counts.items()))


def cover_report_quartic(v: st.StabilityVerdict, t: SingularType | None = None) -> CoverReport:
    if v.stability == st.UNSTABLE:
        raise CoverError("unstable quartics have no point in the moduli space")
    if v.stability == st.STABLE:
        if t is None:
            raise CoverError("a stable verdict needs its singular type")
        t = t if isinstance(t, SingularType) else SingularType(*t)
        counted = dict(_count_labels(v.witnesses))
        if counted.get("A3", 0) != t.n or counted.get("E6", 0) != t.c:
            raise CoverError(f"verdict witnesses do not match type {t}")
        picard = stratum_report(t, require_table=False)
        try:
            fibers = fibration_fibers(t)
        except CoverError:
            fibers = None
        location = INTERIOR if (t.n, t.c) == (0, 0) else stratum_label(t)
        return CoverReport("quartic", _count_labels(v.witnesses), picard, fibers, location, TYPE_I)
    if v.minimal_orbit == st.DOUBLE_CONIC or v.orbit_limit == st.ORBIT_LIMIT_V0:
        return CoverReport("quartic", ((SIGNIFICANT, 1),), None, None, POINT_V0, SIGNIFICANT)
    return CoverReport("quartic", _count_labels(v.witnesses), None, None, BOUNDARY_CUSP, TYPE_II)


def cover_report_octavic(v: st.StabilityVerdict) -> CoverReport:
    if v.stability == st.UNSTABLE:
        raise CoverError("unstable octavics have no point in the moduli space")
    if v.stability == st.STABLE:
        counts = Counter()
        for w in v.witnesses:
            counts[w.cone_singularity] += w.degree
        return CoverReport("octavic", tuple(sorted(counts.items())), None, None, MIRROR, TYPE_I)
    if v.minimal_orbit == TWO_QUADRUPLE_POINTS:
        return CoverReport("octavic", (("~E7", 2),), None, None, BOUNDARY_CUSP, TYPE_II)
    # a quadruple point without the closed-orbit profile degenerates to the same cusp
    return CoverReport("octavic", (("~E7", 1),), None, None, BOUNDARY_CUSP, TYPE_II)
