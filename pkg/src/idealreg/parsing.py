"""Textual input formats.

Two forms are accepted: ``ideal(<mono>, <mono>, ...)`` with monomials as
products of ``name[^exp]`` factors (names ``a``..``z`` or ``x1``, ``x2``,
...), and ``linforms([[...],[...]], [[...]], ...)`` where each matrix lists
integer coefficient rows of the basis linear forms of one factor.
"""

from __future__ import annotations

import ast
import re

from .ideals import MonomialIdeal
from .linforms import LinearIdeal
from .monomials import parse_monomial

_IDEAL_RE = re.compile(r"^ideal\((.*)\)$", re.S)
_LINFORMS_RE = re.compile(r"^linforms\((.*)\)$", re.S)


class ParseError(ValueError):
    pass


def parse_ideal_text(text, nvars=None):
    """``ideal(...)`` -> MonomialIdeal (ambient inferred unless given)."""
    m = _IDEAL_RE.match(text.strip())
    if m is None:
        raise ParseError("expected ideal(<monomial>, ...)")
    body = m.group(1).strip()
    if not body:
        raise ParseError("empty ideal")
    parts = [p.strip() for p in body.split(",")]
    parsed = []
    top = 0
    for p in parts:
        try:
            expo, used = parse_monomial(p)
        except ValueError as exc:
            raise ParseError(f"bad monomial {p!r}: {exc}") from exc
        parsed.append(p)
        top = max(top, used)
    n = nvars if nvars is not None else top
    if n < 1:
        raise ParseError("could not infer any variable")
    return MonomialIdeal.from_gens(n, [parse_monomial(p, n)[0] for p in parsed])


def parse_linforms_text(text, characteristic=0):
    """``linforms(...)`` -> list of LinearIdeal."""
    m = _LINFORMS_RE.match(text.strip())
    if m is None:
        raise ParseError("expected linforms([[...]], ...)")
    try:
        matrices = ast.literal_eval("[" + m.group(1) + "]")
    except (SyntaxError, ValueError) as exc:
        raise ParseError(f"bad matrix list: {exc}") from exc
    if not matrices:
        raise ParseError("empty family")
    family = []
    n = None
    for mat in matrices:
        if not isinstance(mat, list) or not mat or not all(
            isinstance(r, list) and all(isinstance(c, int) for c in r) for r in mat
        ):
            raise ParseError("each factor must be a nonempty list of integer rows")
        if n is None:
            n = len(mat[0])
        if any(len(r) != n for r in mat):
            raise ParseError("inconsistent row lengths")
        try:
            family.append(LinearIdeal.from_rows(n, mat, characteristic))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    return family


def parse_any(text, characteristic=0):
    """Dispatch on the leading keyword."""
    t = text.strip()
    if t.startswith("ideal"):
        return parse_ideal_text(t)
    if t.startswith("linforms"):
        return parse_linforms_text(t, characteristic)
    raise ParseError("input must start with 'ideal(' or 'linforms('")
