"""One-shot verification of a diagram against every structural property."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import DiagramError, LatticeError
from .geometry import (
    Diagram, EdgeClass, check_czedli, check_rectangular, edge_classes,
    enumerate_4cells, find_corners, validate_diagram,
)
from .order import STRICT, SUBLATTICE, Lattice, check_semimodular, find_M3, find_covering_S7s

PROPERTIES = (
    "lattice", "semimodular", "slim", "planar_valid", "rectangular",
    "czedli_strict", "czedli_sublattice",
)

# properties that decide the verdict; the czedli one is picked by mode
CORE_REQUIRED = ("lattice", "semimodular", "slim", "planar_valid")


class Status(NamedTuple):
    ok: bool
    detail: str = ""

    def __str__(self):
        return "pass" if self.ok else "fail"


@dataclass(frozen=True)
class Signature:
    elements: int
    edges: int
    normal_up: int
    normal_down: int
    steep: int
    invalid: int
    cells: int
    s7_strict: int
    s7_sublattice: int
    corners: int

    @property
    def normal(self):
        return self.normal_up + self.normal_down

    def items(self):
        return [(k, getattr(self, k)) for k in self.__dataclass_fields__]


@dataclass(frozen=True)
class VerificationReport:
    status: dict
    signature: Signature | None
    signature_error: str = ""

    def __getitem__(self, name):
        return self.status[name]

    def passed(self, mode=SUBLATTICE):
        required = CORE_REQUIRED + (f"czedli_{mode}",)
        return all(self.status[p].ok for p in required)

    def to_keyvalue(self):
        lines = []
        for name in PROPERTIES:
            st = self.status[name]
            lines.append(f"{name}={st}")
            if st.detail:
                lines.append(f"{name}.witness={st.detail}")
        if self.signature is None:
            lines.append(f"signature=unavailable ({self.signature_error})")
        else:
            for key, value in self.signature.items():
                lines.append(f"signature.{key}={value}")
        return "\n".join(lines) + "\n"

    def to_text(self):
        lines = ["property           status  witness"]
        for name in PROPERTIES:
            st = self.status[name]
            lines.append(f"{name:<18} {str(st):<7} {st.detail}".rstrip())
        sig = self.signature
        if sig is None:
            lines.append(f"signature: unavailable ({self.signature_error})")
        else:
            lines.append(
                f"signature: {sig.elements} elements, {sig.edges} edges "
                f"(normal-up {sig.normal_up}, normal-down {sig.normal_down}, "
                f"steep {sig.steep}, invalid {sig.invalid}), {sig.cells} cells, "
                f"S7 strict {sig.s7_strict} / sublattice {sig.s7_sublattice}, "
                f"{sig.corners} corners")
        return "\n".join(lines) + "\n"


def signature(D):
    bad = validate_diagram(D)
    if bad:
        raise DiagramError(f"signature needs a valid diagram (validate_diagram: {bad[0]})")
    counts = {c: 0 for c in EdgeClass}
    for cls in edge_classes(D).values():
        counts[cls] += 1
    return Signature(
        elements=D.n,
        edges=len(D.edges),
        normal_up=counts[EdgeClass.NORMAL_UP],
        normal_down=counts[EdgeClass.NORMAL_DOWN],
        steep=counts[EdgeClass.STEEP],
        invalid=counts[EdgeClass.INVALID],
        cells=len(enumerate_4cells(D)),
        s7_strict=len(find_covering_S7s(D.lattice, STRICT)),
        s7_sublattice=len(find_covering_S7s(D.lattice, SUBLATTICE)),
        corners=len(find_corners(D)),
    )


def _czedli_status(D, mode):
    rep = check_czedli(D, mode)
    return Status(rep.ok, "; ".join(str(o) for o in rep.offenders))


def _fmt(seq):
    return " ".join(str(x) for x in seq)


def verify_all(D):
    """Run every check on ``D``.

    ``D`` may be a :class:`Diagram` or anything with ``n``, ``covers`` and
    ``pos`` attributes (such as a decoded but unchecked record); failures are
    recorded, never raised.
    """
    status = {}
    if not isinstance(D, Diagram):
        try:
            D = Diagram(Lattice(D.n, D.covers), D.pos)
        except (LatticeError, DiagramError) as exc:
            status["lattice"] = Status(False, str(exc))
            for name in PROPERTIES[1:]:
                status[name] = Status(False, "requires a valid lattice")
            return VerificationReport(status, None, "invalid lattice")
    L = D.lattice
    status["lattice"] = Status(True)
    w = check_semimodular(L)
    status["semimodular"] = Status(w is None, "" if w is None else _fmt(w))
    w = find_M3(L)
    status["slim"] = Status(w is None, "" if w is None else _fmt(w))
    bad = validate_diagram(D)
    status["planar_valid"] = Status(not bad, "; ".join(str(v) for v in bad))
    try:
        rect = check_rectangular(D)
        detail = rect.reason if not rect.ok else ""
        if rect.witness and not rect.ok:
            detail += f" {rect.witness}"
        status["rectangular"] = Status(rect.ok, detail)
    except (IndexError, DiagramError) as exc:
        status["rectangular"] = Status(False, f"boundary undefined: {exc}")
    status["czedli_strict"] = _czedli_status(D, STRICT)
    status["czedli_sublattice"] = _czedli_status(D, SUBLATTICE)
    try:
        sig, err = signature(D), ""
    except DiagramError as exc:
        sig, err = None, str(exc)
    return VerificationReport(status, sig, err)
