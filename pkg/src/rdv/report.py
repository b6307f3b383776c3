"""Analysis report container shared by the library and the CLI.

A report is a flat, serialization-friendly record: named scalars, named
measures (weight vectors), boolean verdicts, and the tolerances they were
checked at.  Scalar values may be infinite; everything else is finite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import SchemaError

_FIELDS = ("space_name", "parameters", "scalars", "measures", "verdicts", "tolerances")


@dataclass
class AnalysisReport:
    space_name: str
    parameters: dict = field(default_factory=dict)
    scalars: dict = field(default_factory=dict)
    measures: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        scalars = {}
        for k, v in self.scalars.items():
            v = float(v)
            if math.isnan(v):
                raise SchemaError(f"scalar {k!r} is NaN; reports only carry reals and inf")
            scalars[k] = "inf" if math.isinf(v) else v
        return {
            "space_name": self.space_name,
            "parameters": self.parameters,
            "scalars": scalars,
            "measures": {k: [float(w) for w in v] for k, v in self.measures.items()},
            "verdicts": {k: bool(v) for k, v in self.verdicts.items()},
            "tolerances": {k: float(v) for k, v in self.tolerances.items()},
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "AnalysisReport":
        if not isinstance(doc, dict):
            raise SchemaError("report document must be a mapping")
        missing = [f for f in _FIELDS if f not in doc]
        extra = [f for f in doc if f not in _FIELDS]
        if missing or extra:
            raise SchemaError(f"report fields off schema: missing {missing}, extra {extra}")
        scalars = {}
        for k, v in doc["scalars"].items():
            if v == "inf":
                scalars[k] = math.inf
            elif isinstance(v, (int, float)) and not isinstance(v, bool):
                scalars[k] = float(v)
            else:
                raise SchemaError(f"scalar {k!r} has non-numeric value {v!r}")
        return cls(
            space_name=str(doc["space_name"]),
            parameters=dict(doc["parameters"]),
            scalars=scalars,
            measures={k: [float(w) for w in v] for k, v in doc["measures"].items()},
            verdicts={k: bool(v) for k, v in doc["verdicts"].items()},
            tolerances={k: float(v) for k, v in doc["tolerances"].items()},
        )
