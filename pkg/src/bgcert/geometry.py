"""Polarized Calabi-Yau threefold records, presets, and hypothesis predicates.

A geometry is the triple (d, c2XH, dimH) = (H^3, c2(X).H, dim|H|) together
with a flag saying whether the curve-count hypothesis is asserted for it.
Records are immutable and the predicates are pure, so everything here is
safe to share between workers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping

from .errors import (
    BetaOutOfRange,
    ConfigError,
    InconsistentGeometry,
    NegativeLinearSystem,
    NonIntegralGeometry,
    OddDegree,
    UnknownPreset,
)


def derive_dimH(d: int, c2XH: int) -> int:
    """dim|H| from Riemann-Roch with Kodaira vanishing: d/6 + c2XH/12 - 1.

    Raises NonIntegralGeometry when chi(O(H)) is not an integer and
    NegativeLinearSystem when the derived dimension would be negative.
    """
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"d must be a positive integer, got {d!r}")
    chi = Fraction(d, 6) + Fraction(c2XH, 12)
    if chi.denominator != 1:
        raise NonIntegralGeometry(
            f"chi(O(H)) = {chi} is not an integer for fields d={d}, c2h={c2XH}"
        )
    if chi < 1:
        raise NegativeLinearSystem(
            f"chi(O(H)) = {chi} gives dim|H| = {chi - 1} < 0 for fields d={d}, c2h={c2XH}"
        )
    return int(chi) - 1


@dataclass(frozen=True)
class PolarizedCY3:
    """(H^3, c2(X).H, dim|H|) with the Riemann-Roch consistency invariant."""

    d: int
    c2XH: int
    dimH: int
    castelnuovo_known: bool = False

    def __post_init__(self):
        expected = derive_dimH(self.d, self.c2XH)
        if self.dimH != expected:
            raise InconsistentGeometry(
                f"field dimh = {self.dimH} contradicts d/6 + c2h/12 - 1 = {expected}"
            )

    @classmethod
    def derive(cls, d: int, c2XH: int, castelnuovo_known: bool = False) -> "PolarizedCY3":
        """Build a geometry with dim|H| filled in from (d, c2XH)."""
        return cls(d, c2XH, derive_dimH(d, c2XH), castelnuovo_known)

    @property
    def chi_OH(self) -> int:
        """chi(O_X(H)); always dim|H| + 1."""
        return self.dimH + 1


@dataclass(frozen=True)
class CurveBound:
    """Smallest chi(O_C) asserted to occur among curves of degree beta = C.H."""

    beta: int
    chi_min: int

    def __post_init__(self):
        if self.beta < 1:
            raise ValueError(f"beta must be >= 1, got {self.beta}")


# Preset invariants are recomputed in the test suite from the ambient
# total-Chern-class expansion before being trusted here.
PRESETS = {
    "quintic": PolarizedCY3(d=5, c2XH=50, dimH=4, castelnuovo_known=True),
    "ci24": PolarizedCY3(d=8, c2XH=56, dimH=5, castelnuovo_known=False),
    "ci223": PolarizedCY3(d=12, c2XH=60, dimH=6, castelnuovo_known=False),
}


def from_preset(name: str) -> PolarizedCY3:
    """The quintic in P^4, the (2,4) in P^5, or the (2,2,3) in P^6."""
    try:
        return PRESETS[name]
    except KeyError:
        raise UnknownPreset(
            f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}"
        ) from None


def check_h_assumption(geom: PolarizedCY3) -> bool:
    """Linear-system hypothesis dim|H| >= 7d/6 - 3."""
    return geom.dimH >= Fraction(7 * geom.d, 6) - 3


def check_h_assumption_even(geom: PolarizedCY3) -> bool:
    """Weakened hypothesis dim|H| >= 2d/3 - 3, valid only for even d.

    For even d the minimal positive ch2.H doubles to 1, which is what
    justifies the weaker threshold; odd degrees are rejected.
    """
    if geom.d % 2 != 0:
        raise OddDegree(f"even-degree variant needs even H^3, got d = {geom.d}")
    return geom.dimH >= Fraction(2 * geom.d, 3) - 3


def castelnuovo_range(geom: PolarizedCY3) -> list[int]:
    """Curve degrees the curve-count hypothesis quantifies over: 1 <= beta < d/2."""
    return list(range(1, (geom.d + 1) // 2))


def castelnuovo_check(geom: PolarizedCY3, bound: CurveBound) -> bool:
    """Whether chi_min >= d/6 - beta holds for the given curve degree."""
    if bound.beta not in castelnuovo_range(geom):
        raise BetaOutOfRange(
            f"beta = {bound.beta} outside 1 <= beta < d/2 = {Fraction(geom.d, 2)}"
        )
    return bound.chi_min >= Fraction(geom.d, 6) - bound.beta


def default_chi_min(geom: PolarizedCY3, beta: int) -> int:
    """Weakest chi(O_C) floor compatible with the curve hypothesis: ceil(d/6 - beta)."""
    return math.ceil(Fraction(geom.d, 6) - beta)


# ---------------------------------------------------------------------------
# Geometry config files: JSON object or "key = value" lines with the fields
# d, c2h, dimh (optional), castelnuovo_known (optional, default false).

_BOOL_WORDS = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}
_CONFIG_FIELDS = ("d", "c2h", "dimh", "castelnuovo_known")


def _as_int(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ConfigError(f"field {field}: expected an integer, got {value!r}", field=field)
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            raise ConfigError(f"field {field}: expected an integer, got {value!r}", field=field) from None
    return value


def _as_bool(value, field: str) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, str) and value.strip().lower() in _BOOL_WORDS:
        return _BOOL_WORDS[value.strip().lower()]
    raise ConfigError(f"field {field}: expected a boolean, got {value!r}", field=field)


def geometry_from_config(data: Mapping) -> PolarizedCY3:
    """Build a geometry from a config mapping, naming the offending field on error."""
    unknown = sorted(set(data) - set(_CONFIG_FIELDS))
    if unknown:
        raise ConfigError(f"unknown field {unknown[0]!r}", field=unknown[0])
    if "d" not in data:
        raise ConfigError("field d: missing", field="d")
    if "c2h" not in data:
        raise ConfigError("field c2h: missing", field="c2h")
    d = _as_int(data["d"], "d")
    c2h = _as_int(data["c2h"], "c2h")
    known = _as_bool(data.get("castelnuovo_known", False), "castelnuovo_known")
    if "dimh" in data and data["dimh"] is not None:
        return PolarizedCY3(d, c2h, _as_int(data["dimh"], "dimh"), known)
    return PolarizedCY3.derive(d, c2h, known)


def load_geometry_config(path) -> dict:
    """Read a config file: a JSON object, or fallback "key = value" lines.

    In the line format, blank lines and "#" comments are skipped and ":" is
    accepted in place of "=".
    """
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    if data is not None:
        if not isinstance(data, dict):
            raise ConfigError(f"config {path}: expected a JSON object")
        return data
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        sep = "=" if "=" in line else (":" if ":" in line else None)
        if sep is None:
            raise ConfigError(f"config {path}:{lineno}: expected key = value, got {raw!r}")
        key, value = (part.strip() for part in line.split(sep, 1))
        out[key] = value
    return out
