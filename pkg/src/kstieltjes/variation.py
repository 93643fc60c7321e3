"""Variation of piecewise-polynomial regulated functions.

On a compact interval the (Jordan) variation splits into an exactly
computable continuous contribution plus a jump contribution:

* continuous: the integral of the norm of the derivative of the continuous
  part over each piece.  Since the break part is constant on every open
  piece, that derivative is just the piece polynomial's derivative; the
  integral is evaluated by splitting at the isolated roots where the
  maximising component changes or a component changes sign, then
  integrating the winning signed polynomial in closed form.
* jumps: the sum of ``||jump_plus||`` over ``[c, d)`` plus ``||jump_minus||``
  over ``(c, d]``.

Variation over an arbitrary (open or half-open) interval removes exactly
the endpoint jump norms that the interval's openness excludes:

    var[c,d] = var[c,d) + ||jump_minus(d)||
             = var(c,d] + ||jump_plus(c)||
             = var(c,d) + ||jump_plus(c)|| + ||jump_minus(d)||

and the variation over an elementary set is the sum over the minimal
decomposition, which makes it finitely additive for continuous functions.
A direct supremum over generalized divisions of a disconnected set is
deliberately not offered: it would not be additive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _poly
from .errors import DomainError
from .intervals import ElementarySet, Interval
from .piecewise import PiecewiseFunction


@dataclass(frozen=True)
class VariationResult:
    """Total variation with its continuous/jump split."""

    total: float
    continuous_contribution: float
    jump_contribution: float

    @classmethod
    def zero(cls) -> "VariationResult":
        return cls(0.0, 0.0, 0.0)

    def __add__(self, other: "VariationResult") -> "VariationResult":
        return VariationResult(
            self.total + other.total,
            self.continuous_contribution + other.continuous_contribution,
            self.jump_contribution + other.jump_contribution)


def _continuous_part(f: PiecewiseFunction, c: float, d: float) -> float:
    total = 0.0
    for u, v, coeffs in f.piece_spans():
        lo, hi = max(u, c), min(v, d)
        if hi > lo:
            total += _poly.integral_of_norm(_poly.polyder(coeffs), lo, hi)
    return total


def _jump_part(f: PiecewiseFunction, c: float, d: float,
               include_lo: bool, include_hi: bool) -> float:
    """Summed jump norms: ``jump_plus`` over ``[c,d)`` or ``(c,d)`` and
    ``jump_minus`` over ``(c,d]`` or ``(c,d)`` depending on the flags."""
    plus = 0.0
    minus = 0.0
    for rec in f.jumps():
        take_plus = (c <= rec.t < d) if include_lo else (c < rec.t < d)
        take_minus = (c < rec.t <= d) if include_hi else (c < rec.t < d)
        if take_plus:
            plus += _poly.norm_of(rec.jump_plus)
        if take_minus:
            minus += _poly.norm_of(rec.jump_minus)
    return plus + minus


def var_compact(f: PiecewiseFunction, c: float, d: float) -> VariationResult:
    """Jordan variation of ``f`` over the compact interval ``[c, d]``.

    ``c == d`` is allowed and gives zero.
    """
    c, d = float(c), float(d)
    if c < f.a or d > f.b or c > d:
        raise DomainError(f"[{c}, {d}] is not a subinterval of [{f.a}, {f.b}]")
    if c == d:
        return VariationResult.zero()
    cont = _continuous_part(f, c, d)
    jump = _jump_part(f, c, d, include_lo=True, include_hi=True)
    return VariationResult(cont + jump, cont, jump)


def var_interval(f: PiecewiseFunction, interval: Interval) -> VariationResult:
    """Variation over an arbitrary subinterval, honouring openness.

    Degenerate intervals give zero by convention.
    """
    if interval.lo < f.a or interval.hi > f.b:
        raise DomainError(f"{interval} is not inside [{f.a}, {f.b}]")
    if interval.is_degenerate:
        return VariationResult.zero()
    c, d = interval.lo, interval.hi
    cont = _continuous_part(f, c, d)
    jump = _jump_part(f, c, d,
                      include_lo=interval.lo_closed,
                      include_hi=interval.hi_closed)
    return VariationResult(cont + jump, cont, jump)


def var_elementary(f: PiecewiseFunction, region: ElementarySet) -> VariationResult:
    """Variation over an elementary set: the sum over the parts of its
    minimal decomposition (zero for the empty set)."""
    result = VariationResult.zero()
    for part in region.parts:
        result = result + var_interval(f, part)
    return result


def contracting_variation(f: PiecewiseFunction,
                          sets: Sequence[ElementarySet]) -> list[float]:
    """Variation of a continuous function along a contracting sequence of
    elementary sets.

    For elementary sets the supremum of the variation over elementary
    subsets is attained by the set itself, so the diagnostic value for each
    stage is simply ``var_elementary(f, sets[n])``.  When the intersection
    of the sequence is empty these values must decrease to zero; the
    function returns them for inspection and merely validates the
    hypotheses (continuity of ``f`` and the contraction property).
    """
    if f.jumps():
        raise ValueError("contracting_variation requires a continuous function")
    for earlier, later in zip(sets[:-1], sets[1:]):
        if not later.issubset(earlier):
            raise ValueError("sets must be contracting: each one a subset of the previous")
    return [var_elementary(f, region).total for region in sets]
