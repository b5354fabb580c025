"""Exact computations with embedding tensors on 3-Lie algebras.

Algebra documents use the same JSON layout as the command-line tool; they may be given as a
dict, JSON text, or a path. Every command returns a Result carrying the exit code and the
parsed report.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence, Union

from . import _etensor
from ._etensor import ParseError, ShapeError, SizeCapError, entry_cap, set_entry_cap

PASS = _etensor.PASS
FAIL = _etensor.FAIL
BAD_INPUT = _etensor.BAD_INPUT

Document = Union[dict, str, os.PathLike]


@dataclass(frozen=True)
class Result:
    code: int
    report: dict

    @property
    def ok(self) -> bool:
        return self.code == PASS


def _text(doc: Document) -> str:
    if isinstance(doc, dict):
        return json.dumps(doc)
    if isinstance(doc, os.PathLike) or (isinstance(doc, str) and not doc.lstrip().startswith("{")):
        with open(doc, encoding="utf-8") as fh:
            return fh.read()
    return doc


def run(command: str, doc: Document, *, degree: int = 2, order: Optional[int] = None) -> Result:
    code, body = _etensor.run(command, _text(doc), degree, -1 if order is None else order)
    return Result(code, json.loads(body))


def verify_algebra(doc: Document) -> Result:
    return run("verify-algebra", doc)


def verify_rep(doc: Document) -> Result:
    return run("verify-rep", doc)


def check_et(doc: Document) -> Result:
    return run("check-et", doc)


def mc_check(doc: Document) -> Result:
    return run("mc-check", doc)


def cohomology(doc: Document, degree: int = 2) -> Result:
    return run("cohomology", doc, degree=degree)


def deform_check(doc: Document, order: Optional[int] = None) -> Result:
    return run("deform-check", doc, order=order)


def deform_extend(doc: Document, order: Optional[int] = None) -> Result:
    return run("deform-extend", doc, order=order)


def equivalence_check(doc: Document, order: Optional[int] = None) -> Result:
    return run("equivalence-check", doc, order=order)


def _rows(m: Sequence[Sequence[Any]]) -> list:
    return [[str(Fraction(x)) for x in row] for row in m]


def rank(m: Sequence[Sequence[Any]]) -> int:
    return _etensor.rank(_rows(m))


def kernel_basis(m: Sequence[Sequence[Any]]) -> list:
    return [[Fraction(x) for x in v] for v in _etensor.kernel_basis(_rows(m))]


def solve(m: Sequence[Sequence[Any]], b: Sequence[Any]) -> Optional[list]:
    x = _etensor.solve(_rows(m), [str(Fraction(v)) for v in b])
    return None if x is None else [Fraction(v) for v in x]


def commands() -> list:
    return list(_etensor.commands())


__all__ = [
    "BAD_INPUT", "FAIL", "PASS", "ParseError", "Result", "ShapeError", "SizeCapError",
    "check_et", "cohomology", "commands", "deform_check", "deform_extend", "entry_cap",
    "equivalence_check", "kernel_basis", "mc_check", "rank", "run", "set_entry_cap", "solve",
    "verify_algebra", "verify_rep",
]
