"""Twinned order polytopes from pairs of finite posets.

Posets are given as text, "d; a<b c<d ...", with labels 1..d.
Each command returns a Result holding the decoded JSON report, the text
rendering and the exit code the command-line tool would use.
"""

import json
from dataclasses import dataclass
from typing import Any, Optional

from . import _twinned
from ._twinned import InputError, canonical, common_linear_extension, ideals

__all__ = [
    "InputError",
    "Result",
    "analyze",
    "canonical",
    "common_linear_extension",
    "delta",
    "fuzz",
    "groebner",
    "ideals",
    "reproduce",
]


@dataclass(frozen=True)
class Result:
    report: dict[str, Any]
    text: str
    exit_code: int

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def _wrap(raw) -> Result:
    report, text, code = raw
    return Result(json.loads(report), text, code)


def analyze(p: str, q: str) -> Result:
    return _wrap(_twinned.analyze(p, q))


def groebner(p: str, q: str, order: Optional[str] = None) -> Result:
    """order: variable names from lowest to highest, e.g. "z y{1} x{1}"."""
    return _wrap(_twinned.groebner(p, q, order))


def delta(p: str, q: str, t_max: Optional[int] = None, d_cap: int = 6) -> Result:
    return _wrap(_twinned.delta(p, q, t_max, d_cap))


def reproduce(trials: int = 25, seed: int = 1) -> Result:
    return _wrap(_twinned.reproduce(trials, seed))


def fuzz(trials: int = 100, seed: int = 7, d_min: int = 2, d_max: int = 4) -> Result:
    return _wrap(_twinned.fuzz(trials, seed, d_min, d_max))
