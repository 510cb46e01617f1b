"""Exact divisor calculus on surfaces and smooth toric varieties.

Classes are sequences of rationals (int, Fraction or "p/q" strings); results
come back as fractions.Fraction.  Reports are plain dicts with rationals kept
as "p/q" strings, exactly as the command line tool prints them.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import _divcalc
from ._divcalc import Model, catalog_document, catalog_names, command_names

__version__ = _divcalc.__version__

Number = Union[int, Fraction, str]


class DivcalcError(Exception):
    """Engine error with a stable machine-readable ``code``."""

    def __init__(self, code: str, message: str):
        super().__init__(f"[{code}] {message}")
        self.code = code
        self.message = message


def _encode(x: Number) -> str:
    if isinstance(x, bool) or isinstance(x, float):
        raise DivcalcError("rational-encoding", f"{x!r} is not an exact rational")
    if isinstance(x, (int, Fraction)):
        f = Fraction(x)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    if isinstance(x, str):
        return x
    raise DivcalcError("rational-encoding", f"{x!r} is not an exact rational")


def _vec(d: Iterable[Number]) -> list[str]:
    return [_encode(x) for x in d]


def _frac(s: str) -> Fraction:
    return Fraction(s)


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _divcalc.DivcalcError as e:
        code, message = e.args if len(e.args) == 2 else ("error", str(e))
        raise DivcalcError(code, message) from None


def load_model(spec: str) -> Model:
    """Built-in name, file path, or name under $DIVCALC_CATALOG."""
    return _call(_divcalc.load_model, spec)


def parse_model(text: str) -> Model:
    return _call(_divcalc.parse_model, text)


def _model(m: Union[Model, str]) -> Model:
    return load_model(m) if isinstance(m, str) else m


def zariski(model, d: Sequence[Number]) -> dict:
    """Positive part and negative components (generator index, class, coefficient)."""
    z = _call(_divcalc.zariski, _model(model), _vec(d))
    return {
        "positive": [_frac(x) for x in z["positive"]],
        "negative": [(i, [_frac(x) for x in g], _frac(c)) for i, g, c in z["negative"]],
    }


def volume(model, d: Sequence[Number]) -> Fraction:
    return _frac(_call(_divcalc.volume, _model(model), _vec(d)))


def s_sequence(model, d1: Sequence[Number], d2: Sequence[Number]) -> list[Fraction]:
    return [_frac(x) for x in _call(_divcalc.s_sequence, _model(model), _vec(d1), _vec(d2))]


def slope(model, d1: Sequence[Number], d2: Sequence[Number]) -> Fraction:
    return _frac(_call(_divcalc.slope, _model(model), _vec(d1), _vec(d2)))


def okounkov_sample(model, d: Sequence[Number], m: int, flag: Sequence[int] | None = None) -> dict:
    s = _call(_divcalc.okounkov_sample, _model(model), _vec(d), m, list(flag) if flag is not None else None)
    return {
        "m": s["m"],
        "points": [[_frac(x) for x in p] for p in s["points"]],
        "hull_volume": _frac(s["hull_volume"]),
    }


def hull_volume(points: Sequence[Sequence[Number]]) -> Fraction:
    pts = [_vec(p) for p in points]
    if not pts:
        return Fraction(0)
    return _frac(_call(_divcalc.hull_volume, len(pts[0]), pts))


def report_text(command: str, model, **kwargs) -> str:
    """Report rendered exactly as ``divcalc <command> --format json`` prints it.

    Keyword arguments mirror the CLI options: d, d1, d2, m_max, seed, count, flag.
    """
    args = {k: (_vec(v) if k in ("d", "d1", "d2") and v is not None else v) for k, v in kwargs.items()}
    return _call(_divcalc.run, command, _model(model), args)


def report(command: str, model, **kwargs) -> dict:
    return json.loads(report_text(command, model, **kwargs))


__all__ = [
    "DivcalcError",
    "Model",
    "catalog_document",
    "catalog_names",
    "command_names",
    "hull_volume",
    "load_model",
    "okounkov_sample",
    "parse_model",
    "report",
    "report_text",
    "s_sequence",
    "slope",
    "volume",
    "zariski",
]
