"""Executable replay of the three-case bound analysis with exact arithmetic.

The certifier checks the two geometry hypotheses, bounds ch3 in each of the
three structural cases (points, curves, higher rank), enumerates the finite
candidate set of (rank, c2.H) pairs, and assembles everything into an
immutable, JSON-serializable certificate with a verdict. All checks are
exact; failures are verdicts, never exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .chern import ChernVector
from .errors import BetaOutOfRange, MissingBeta, NonpositiveCh2H, ZeroRank
from .geometry import (
    CurveBound,
    PolarizedCY3,
    castelnuovo_range,
    check_h_assumption,
    check_h_assumption_even,
    default_chi_min,
)
from .rationals import format_rational


class Verdict(str, Enum):
    CERTIFIED_STRICT = "CERTIFIED_STRICT"
    CERTIFIED = "CERTIFIED"
    CONDITIONAL = "CONDITIONAL"
    HYPOTHESIS_FAIL = "HYPOTHESIS_FAIL"


class HypothesisMode(str, Enum):
    FULL = "full_1_3"
    EVEN = "even_variant"


class CastelnuovoStatus(str, Enum):
    ASSERTED = "asserted"
    ASSUMED = "assumed"
    UNCHECKED = "unchecked"


# ---------------------------------------------------------------------------
# Affine comparisons (Case 1 runs over an unbounded length parameter).


@dataclass(frozen=True)
class AffineFn:
    """x -> slope*x + intercept, read as a function on x >= 0."""

    slope: Fraction
    intercept: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "intercept", Fraction(self.intercept))

    def __call__(self, x) -> Fraction:
        return self.slope * Fraction(x) + self.intercept


def affine_dominates(f: AffineFn, g: AffineFn) -> bool:
    """f(x) <= g(x) for every x >= 0; slope and intercept comparisons are exact and sufficient."""
    return f.slope <= g.slope and f.intercept <= g.intercept


def _integer_equality_points(f: AffineFn, g: AffineFn) -> tuple[int, ...]:
    """Non-negative integers where two non-identical affine functions agree."""
    if f.slope == g.slope:
        if f.intercept == g.intercept:
            raise ValueError("functions coincide everywhere")
        return ()
    x = (g.intercept - f.intercept) / (f.slope - g.slope)
    if x >= 0 and x.denominator == 1:
        return (int(x),)
    return ()


# ---------------------------------------------------------------------------
# Case 1: rank one, zero-dimensional subscheme of length l >= 0.


@dataclass(frozen=True)
class Case1Reading:
    rhs: AffineFn
    holds: bool
    equality_lengths: tuple[int, ...]


@dataclass(frozen=True)
class Case1Trace:
    lhs: AffineFn
    constant_reading: Case1Reading
    sloped_reading: Case1Reading
    holds_for_all_lengths: bool
    equality_lengths: tuple[int, ...]
    equality_value: Optional[Fraction]


def case1_check(geom: PolarizedCY3) -> Case1Trace:
    """Compare ch3 = d/6 - l with the rank-one right side for every length l >= 0.

    Two readings of the right side are checked: the constant d/6 (points do
    not move ch2, the reading this package computes with) and the sloped
    alternative d/6 - l/3. Both must agree that the bound holds with
    equality exactly at l = 0, and the trace records each comparison.
    """
    sixth = Fraction(geom.d, 6)
    lhs = AffineFn(Fraction(-1), sixth)
    readings = []
    for slope in (Fraction(0), Fraction(-1, 3)):
        rhs = AffineFn(slope, sixth)
        readings.append(
            Case1Reading(rhs, affine_dominates(lhs, rhs), _integer_equality_points(lhs, rhs))
        )
    constant, sloped = readings
    equality = constant.equality_lengths
    value = lhs(equality[0]) if equality else None
    return Case1Trace(
        lhs=lhs,
        constant_reading=constant,
        sloped_reading=sloped,
        holds_for_all_lengths=constant.holds and sloped.holds,
        equality_lengths=equality,
        equality_value=value,
    )


# ---------------------------------------------------------------------------
# Case 2: rank one, one-dimensional subscheme of degree beta.


@dataclass(frozen=True)
class Case2Row:
    beta: int
    chi_min: int
    ch3_bound: Fraction
    ok: bool
    source: str  # "default" or "supplied"


def case2_check(
    geom: PolarizedCY3,
    bounds: Optional[Iterable[CurveBound]] = None,
    *,
    allow_defaults: bool = True,
) -> list[Case2Row]:
    """One row per curve degree in range: ch3 <= d/6 - beta - chi_min.

    Degrees without a supplied bound fall back to the weakest admissible
    floor ceil(d/6 - beta). Passing allow_defaults=False instead demands
    that the supplied bounds cover the whole range (MissingBeta otherwise).
    Duplicate supplied degrees keep the smallest chi_min.
    """
    valid = castelnuovo_range(geom)
    supplied: dict[int, int] = {}
    for cb in bounds or ():
        if cb.beta not in valid:
            raise BetaOutOfRange(
                f"curve bound at beta = {cb.beta} outside 1 <= beta < d/2 = {Fraction(geom.d, 2)}"
            )
        supplied[cb.beta] = min(cb.chi_min, supplied.get(cb.beta, cb.chi_min))
    rows = []
    for beta in valid:
        if beta in supplied:
            chi, source = supplied[beta], "supplied"
        elif allow_defaults:
            chi, source = default_chi_min(geom, beta), "default"
        else:
            raise MissingBeta(f"no curve bound supplied for beta = {beta}")
        bound = Fraction(geom.d, 6) - beta - chi
        rows.append(Case2Row(beta, chi, bound, bound <= 0, source))
    return rows


# ---------------------------------------------------------------------------
# Case 3: higher rank, controlled through the extension-count cap.


def ext1_cap(geom: PolarizedCY3, ch2H, ch0F: int) -> Fraction:
    """Cap d/(2 ch2H) - ch0F on the extension count of F by the structure sheaf.

    A negative value means no such F exists and the configuration is
    impossible (the cap would contradict a dimension count being >= 0).
    """
    ch2H = Fraction(ch2H)
    if ch2H <= 0:
        raise NonpositiveCh2H(f"ch2H must be positive, got {ch2H}")
    if ch0F < 2:
        raise ValueError(f"ch0F must be >= 2, got {ch0F}")
    return Fraction(geom.d) / (2 * ch2H) - ch0F


def case3_bound(geom: PolarizedCY3, ch2H, ch0F: int) -> Fraction:
    """Exact upper bound for ch3 in the higher-rank case: ext1_cap + d/6 - dim|H| - 1."""
    return ext1_cap(geom, ch2H, ch0F) + Fraction(geom.d, 6) - geom.dimH - 1


def min_positive_ch2H(d: int) -> Fraction:
    """Smallest positive ch2.H at c1 = H with integral c2.H: 1/2 for odd d, 1 for even."""
    return Fraction(1, 2) if d % 2 else Fraction(1)


def worst_case3_bound(geom: PolarizedCY3) -> Fraction:
    """case3_bound at the extremal slot ch0F = 2, ch2H minimal positive.

    Closed form: 7d/6 - dim|H| - 3 for odd d and 2d/3 - dim|H| - 3 for even d.
    """
    return case3_bound(geom, min_positive_ch2H(geom.d), 2)


@dataclass(frozen=True)
class Case3Trace:
    min_ch2H: Fraction
    ch0F: int
    ext1_cap: Fraction
    worst_bound: Fraction
    impossible: bool
    ok: bool


def _case3_trace(geom: PolarizedCY3) -> Case3Trace:
    mch = min_positive_ch2H(geom.d)
    cap = ext1_cap(geom, mch, 2)
    worst = case3_bound(geom, mch, 2)
    impossible = cap < 0
    return Case3Trace(mch, 2, cap, worst, impossible, impossible or worst <= 0)


# ---------------------------------------------------------------------------
# Candidate enumeration.


@dataclass(frozen=True)
class Candidate:
    """A (rank, c2.H) pair with c1 = H surviving positivity and Bogomolov-Gieseker."""

    r: int
    c2H: int
    ch2H: Fraction

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"rank must be >= 1, got {self.r}")
        if self.c2H < 0:
            raise ValueError(f"c2H must be >= 0, got {self.c2H}")
        object.__setattr__(self, "ch2H", Fraction(self.ch2H))
        if self.ch2H <= 0:
            raise ValueError(f"ch2H must be positive, got {self.ch2H}")

    def to_json_dict(self) -> dict:
        return {"r": self.r, "c2H": self.c2H, "ch2H": format_rational(self.ch2H)}


def enumerate_candidates(geom: PolarizedCY3) -> list[Candidate]:
    """All (r, c2H) with ch2H = d/2 - c2H > 0 and 2 r c2H >= (r-1) d, by (r, c2H).

    The Bogomolov-Gieseker floor ceil((r-1)d/2r) grows with r, so the scan
    stops at the first rank whose floor exceeds the largest admissible c2H.
    """
    d = geom.d
    c_max = (d + 1) // 2 - 1
    out = []
    r = 1
    while True:
        floor = max(0, -(-((r - 1) * d) // (2 * r)))
        if floor > c_max:
            break
        for c in range(floor, c_max + 1):
            out.append(Candidate(r, c, Fraction(d, 2) - c))
        r += 1
    return out


# ---------------------------------------------------------------------------
# The target inequality as a predicate.


@dataclass(frozen=True)
class IneqReport:
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool


def check_ineq_1_2(ch: ChernVector) -> IneqReport:
    """ch3 <= ch2H / (3 ch0) for positive-rank classes."""
    if ch.ch0 <= 0:
        raise ZeroRank(f"rank must be positive, got {ch.ch0}")
    rhs = ch.ch2H / (3 * ch.ch0)
    return IneqReport(ch.ch3, rhs, ch.ch3 <= rhs, ch.ch3 == rhs)


# ---------------------------------------------------------------------------
# Certificate assembly.


@dataclass(frozen=True)
class HypothesisCheck:
    mode: HypothesisMode
    applicable: bool
    dimH: int
    threshold: Optional[Fraction]
    holds: bool


@dataclass(frozen=True)
class Certificate:
    geometry: PolarizedCY3
    hypothesis_mode: HypothesisMode
    hypothesis: HypothesisCheck
    hypothesis_ok: bool
    castelnuovo_status: CastelnuovoStatus
    case1: Case1Trace
    case2: tuple[Case2Row, ...]
    case3: Case3Trace
    candidates: tuple[Candidate, ...]
    violated_betas: tuple[int, ...]
    verdict: Verdict


def _resolve_mode(geom: PolarizedCY3, mode) -> HypothesisCheck:
    requested = mode.value if isinstance(mode, HypothesisMode) else str(mode)
    full_holds = check_h_assumption(geom)
    even_applicable = geom.d % 2 == 0
    if requested == "auto":
        requested = (
            HypothesisMode.FULL.value
            if full_holds or not even_applicable
            else HypothesisMode.EVEN.value
        )
    if requested == HypothesisMode.FULL.value:
        return HypothesisCheck(
            HypothesisMode.FULL, True, geom.dimH, Fraction(7 * geom.d, 6) - 3, full_holds
        )
    if requested == HypothesisMode.EVEN.value:
        threshold = Fraction(2 * geom.d, 3) - 3
        holds = even_applicable and check_h_assumption_even(geom)
        return HypothesisCheck(HypothesisMode.EVEN, even_applicable, geom.dimH, threshold, holds)
    raise ValueError(f"unknown mode {mode!r}; expected auto, full_1_3 or even_variant")


def certify_theorem(
    geom: PolarizedCY3,
    curve_bounds: Optional[Sequence[CurveBound]] = None,
    mode="auto",
) -> Certificate:
    """Run every check and assemble the certificate; failures become verdicts.

    Mode "auto" picks the full hypothesis when it passes, falling back to the
    even-degree variant on even-degree geometries. Supplied curve bounds that
    violate the curve hypothesis make hypothesis_ok false (the theorem's own
    assumptions are contradicted by the input data).
    """
    hypothesis = _resolve_mode(geom, mode)
    rows = case2_check(geom, curve_bounds)
    violated = tuple(row.beta for row in rows if row.source == "supplied" and not row.ok)
    hypothesis_ok = hypothesis.holds and not violated

    case1 = case1_check(geom)
    case3 = _case3_trace(geom)
    candidates = tuple(enumerate_candidates(geom))

    if violated:
        status = CastelnuovoStatus.UNCHECKED
    elif geom.castelnuovo_known:
        status = CastelnuovoStatus.ASSERTED
    else:
        status = CastelnuovoStatus.ASSUMED

    if not hypothesis_ok:
        verdict = Verdict.HYPOTHESIS_FAIL
    else:
        numerics_ok = case1.holds_for_all_lengths and all(r.ok for r in rows) and case3.ok
        if not numerics_ok:
            # Unreachable: the worst Case 3 bound being <= 0 is equivalent to
            # the mode hypothesis, and default Case 2 floors never violate.
            raise RuntimeError("internal: numeric case checks failed with hypotheses satisfied")
        if status is CastelnuovoStatus.ASSERTED:
            strict = (
                case1.equality_lengths == (0,)
                and all(r.ch3_bound <= 0 for r in rows)
                and case3.worst_bound <= 0
            )
            verdict = Verdict.CERTIFIED_STRICT if strict else Verdict.CERTIFIED
        else:
            verdict = Verdict.CONDITIONAL

    return Certificate(
        geometry=geom,
        hypothesis_mode=hypothesis.mode,
        hypothesis=hypothesis,
        hypothesis_ok=hypothesis_ok,
        castelnuovo_status=status,
        case1=case1,
        case2=tuple(rows),
        case3=case3,
        candidates=candidates,
        violated_betas=violated,
        verdict=verdict,
    )


# ---------------------------------------------------------------------------
# Serialization: JSON-compatible dicts with stable field order and "p/q" rationals.


def affine_to_jsonable(f: AffineFn) -> dict:
    return {"slope": format_rational(f.slope), "intercept": format_rational(f.intercept)}


def _reading_to_jsonable(reading: Case1Reading) -> dict:
    return {
        "rhs": affine_to_jsonable(reading.rhs),
        "holds": reading.holds,
        "equality_lengths": list(reading.equality_lengths),
    }


def certificate_to_jsonable(cert: Certificate) -> dict:
    geom = cert.geometry
    return {
        "geometry": {
            "d": geom.d,
            "c2XH": geom.c2XH,
            "dimH": geom.dimH,
            "castelnuovo_known": geom.castelnuovo_known,
        },
        "hypothesis_mode": cert.hypothesis_mode.value,
        "hypothesis": {
            "mode": cert.hypothesis.mode.value,
            "applicable": cert.hypothesis.applicable,
            "dimH": cert.hypothesis.dimH,
            "threshold": (
                format_rational(cert.hypothesis.threshold)
                if cert.hypothesis.threshold is not None
                else None
            ),
            "holds": cert.hypothesis.holds,
        },
        "hypothesis_ok": cert.hypothesis_ok,
        "castelnuovo_status": cert.castelnuovo_status.value,
        "case1": {
            "lhs": affine_to_jsonable(cert.case1.lhs),
            "constant_reading": _reading_to_jsonable(cert.case1.constant_reading),
            "sloped_reading": _reading_to_jsonable(cert.case1.sloped_reading),
            "holds_for_all_lengths": cert.case1.holds_for_all_lengths,
            "equality_lengths": list(cert.case1.equality_lengths),
            "equality_value": (
                format_rational(cert.case1.equality_value)
                if cert.case1.equality_value is not None
                else None
            ),
        },
        "case2": [
            {
                "beta": row.beta,
                "chi_min": row.chi_min,
                "ch3_bound": format_rational(row.ch3_bound),
                "ok": row.ok,
                "source": row.source,
            }
            for row in cert.case2
        ],
        "case3": {
            "min_ch2H": format_rational(cert.case3.min_ch2H),
            "ch0F": cert.case3.ch0F,
            "ext1_cap": format_rational(cert.case3.ext1_cap),
            "worst_bound": format_rational(cert.case3.worst_bound),
            "impossible": cert.case3.impossible,
            "ok": cert.case3.ok,
        },
        "candidates": [c.to_json_dict() for c in cert.candidates],
        "violated_betas": list(cert.violated_betas),
        "verdict": cert.verdict.value,
    }
