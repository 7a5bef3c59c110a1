# posalg/models.py

import time
from enum import Enum
from fractions import Fraction

from .config import SCHEMA_VERSION, TOOL_VERSION
from .scalars import Cyclotomic, format_rational, format_scalar


class Status(Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INCONCLUSIVE = "Inconclusive"


def to_jsonable(value):
    """Convert witness payloads (Fractions, tuples, nested containers) to JSON values"""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Cyclotomic):
        return format_scalar(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {_key(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(value)]
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    return value


def _key(key):
    if isinstance(key, tuple):
        return ",".join(str(k) for k in key)
    return str(key)


class BaseResult:
    """Base class for result objects"""

    def __repr__(self):
        """String representation of the result object"""
        class_name = self.__class__.__name__
        attributes = ', '.join(f"{k}={v}" for k, v in self.__dict__.items()
                               if k != 'payload' and not k.startswith('_'))
        return f"{class_name}({attributes})"


class Verdict(BaseResult):
    """Outcome of a verifier: Holds, Fails (with witness) or Inconclusive"""

    def __init__(self, check, status, witness=None, notes="", payload=None):
        """
        Initialize a verdict

        Args:
            check (str): Name of the check that produced it
            status (Status): Outcome
            witness (dict, optional): Counterexample; required for Fails, forbidden for Holds
            notes (str): Free-text explanation
            payload (object, optional): Auxiliary result data (maps, certificates)
        """
        if status is Status.FAILS and witness is None:
            raise ValueError(f"{check}: a failing verdict needs a witness")
        if status is Status.HOLDS and witness is not None:
            raise ValueError(f"{check}: a holding verdict cannot carry a witness")
        self.check = check
        self.status = status
        self.witness = witness
        self.notes = notes
        self.payload = payload

    @classmethod
    def holds(cls, check, notes="", payload=None):
        return cls(check, Status.HOLDS, notes=notes, payload=payload)

    @classmethod
    def fails(cls, check, witness, notes=""):
        return cls(check, Status.FAILS, witness=witness, notes=notes)

    @classmethod
    def inconclusive(cls, check, notes=""):
        return cls(check, Status.INCONCLUSIVE, notes=notes)

    @classmethod
    def conjunction(cls, check, verdicts):
        """First Fails wins, then any Inconclusive, else Holds"""
        verdicts = list(verdicts)
        for verdict in verdicts:
            if verdict.status is Status.FAILS:
                return cls(check, Status.FAILS, witness={"check": verdict.check, **verdict.witness},
                           notes=verdict.notes)
        pending = [v for v in verdicts if v.status is Status.INCONCLUSIVE]
        if pending:
            return cls(check, Status.INCONCLUSIVE,
                       notes="; ".join(f"{v.check}: {v.notes}" for v in pending))
        return cls(check, Status.HOLDS, notes="; ".join(v.notes for v in verdicts if v.notes))

    @property
    def failed(self):
        return self.status is Status.FAILS

    def __bool__(self):
        return self.status is Status.HOLDS

    def to_dict(self):
        out = {"check": self.check, "status": self.status.value}
        if self.witness is not None:
            out["witness"] = to_jsonable(self.witness)
        out["notes"] = self.notes
        return out


class Report(BaseResult):
    """Machine-readable run report; stable apart from the timing field"""

    def __init__(self, command):
        """
        Args:
            command (dict): Fully resolved command echo
        """
        self.command = command
        self.results = []
        self.witnesses = []
        self.discrepancies = []
        self.extra = {}
        self._started = time.perf_counter()

    def add_result(self, verdict):
        self.results.append(verdict)

    def to_dict(self):
        out = {
            "schema_version": SCHEMA_VERSION,
            "tool_version": TOOL_VERSION,
            "command": to_jsonable(self.command),
            "results": [v.to_dict() for v in self.results],
            "witnesses": to_jsonable(self.witnesses),
            "discrepancies": to_jsonable(self.discrepancies),
        }
        for key, value in self.extra.items():
            out[key] = to_jsonable(value)
        out["timing"] = {"seconds": round(time.perf_counter() - self._started, 3)}
        return out
