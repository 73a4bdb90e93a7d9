"""Run reports: plain-data views of results and deterministic JSON output."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field, fields

import numpy as np

from . import __version__
from .bcalgebra import NegativeScanReport
from .core import BoundaryCondition, Eigenstate
from .hermiticity import HermiticityReport
from .spectral import SpectrumReport
from .sweep import SweepCell


def _num(x: float) -> str:
    if not math.isfinite(x):
        # JSON has no inf/nan; keep them readable and round-trippable as strings
        return json.dumps(repr(float(x)))
    text = format(float(x), ".17g")
    if not any(c in text for c in ".en"):
        text += ".0"
    return text


def dumps(data, indent: int = 2) -> str:
    """JSON text with insertion-ordered keys and every float at 17 significant digits."""

    def emit(obj, level: int) -> str:
        if isinstance(obj, np.generic):
            obj = obj.item()
        pad = " " * (indent * (level + 1))
        end = " " * (indent * level)
        if obj is None or isinstance(obj, bool):
            return json.dumps(obj)
        if isinstance(obj, int):
            return str(obj)
        if isinstance(obj, float):
            return _num(obj)
        if isinstance(obj, str):
            return json.dumps(obj, ensure_ascii=False)
        if isinstance(obj, dict):
            if not obj:
                return "{}"
            items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {emit(v, level + 1)}" for k, v in obj.items()]
            return "{\n" + ",\n".join(items) + "\n" + end + "}"
        if isinstance(obj, (list, tuple)):
            if not obj:
                return "[]"
            if all(isinstance(v, (int, float, np.integer, np.floating)) and not isinstance(v, bool) for v in obj):
                return "[" + ", ".join(emit(v, level + 1) for v in obj) + "]"
            return "[\n" + ",\n".join(pad + emit(v, level + 1) for v in obj) + "\n" + end + "]"
        raise TypeError(f"cannot serialize {type(obj).__name__}")

    return emit(data, 0) + "\n"


def _complex(z) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def bc_dict(bc: BoundaryCondition) -> dict:
    return {
        "label": bc.label,
        "at_zero": {"a": float(bc.at_zero.a), "b": float(bc.at_zero.b), "rhs": float(bc.at_zero.rhs)},
        "at_L": {"a": float(bc.at_L.a), "b": float(bc.at_L.b), "rhs": float(bc.at_L.rhs)},
    }


def state_dict(state: Eigenstate, bc: BoundaryCondition | None = None) -> dict:
    out = {
        "index": state.index,
        "energy_class": state.energy_class.value,
        "wavenumber": None if state.wavenumber is None else float(state.wavenumber),
        "energy": float(state.energy),
        "coefficients": [_complex(c) for c in state.coefficients],
        "norm_constant": float(state.norm_constant),
    }
    if bc is not None:
        out["boundary_residual"] = float(max(abs(r) for r in state.boundary_residuals(bc.homogeneous())))
    return out


def scan_dict(scan: NegativeScanReport) -> dict:
    return {
        "qL_max": scan.qL_max,
        "grid_points": scan.grid_points,
        "verdict": scan.verdict.value,
        "roots": [float(r) for r in scan.roots],
        "bound_states": [state_dict(s, scan.bc) for s in scan.bound_states],
    }


def spectrum_dict(rep: SpectrumReport) -> dict:
    return {
        "requested_count": rep.requested_count,
        "negative_verdict": rep.negative_verdict.value,
        "zero_mode": rep.zero_mode is not None,
        "energies": [float(e) for e in rep.energies],
        "states": [state_dict(s, rep.bc) for s in rep.states],
        "degenerate_roots": [float(r) for r in rep.degenerate_roots],
    }


def hermiticity_dict(rep: HermiticityReport) -> dict:
    return {
        "pair_count": rep.pair_count,
        "max_boundary_term": rep.max_boundary_term,
        "gram_deviation": rep.gram_deviation,
        "max_antisymmetry_defect": rep.max_antisymmetry_defect,
    }


def oracle_table(solver_energies, oracle_energies) -> list[dict]:
    rows = []
    for i, (s, o) in enumerate(zip(solver_energies, oracle_energies)):
        diff = abs(float(o) - float(s))
        rows.append(
            {
                "index": i,
                "solver_energy": float(s),
                "oracle_energy": float(o),
                "absolute_difference": diff,
                "relative_difference": diff / abs(s) if s != 0 else None,
            }
        )
    return rows


@dataclass
class RunReport:
    command: str
    inputs: dict
    tool_version: str = __version__
    spectrum: dict | None = None
    negative_scan: dict | None = None
    hermiticity: dict | None = None
    oracle_comparison: list = field(default_factory=list)
    paper_audit: list = field(default_factory=list)
    errata: list = field(default_factory=list)
    confirmed_claims: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    status: str = "ok"

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> RunReport:
        data = json.loads(text)
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_json())


SWEEP_HEADER = ("theta0", "thetaL", "negative_count", "zero_mode", "ground_energy")


def sweep_csv(cells: list[SweepCell]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for c in cells:
        writer.writerow(
            [_num(c.theta0), _num(c.thetaL), c.negative_count, str(c.zero_mode).lower(), _num(c.ground_energy)]
        )
    return buf.getvalue()


def cells_to_dicts(cells) -> list[dict]:
    return [asdict(c) for c in cells]
