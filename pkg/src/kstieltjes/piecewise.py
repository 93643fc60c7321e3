"""Piecewise-polynomial representation of regulated functions.

A :class:`PiecewiseFunction` is a grid ``a = t_0 < ... < t_m = b``, one
polynomial per open piece ``(t_{k-1}, t_k)``, and an explicit value at
every grid point.  Node values are authoritative: they may disagree with
the neighbouring polynomials, which is how jumps are encoded.  One-sided
limits therefore exist everywhere (polynomials extend continuously to the
closures of their pieces), the function is regulated by construction, and
its discontinuity set is a subset of the grid, hence finite.

Values live in R^n (``kind='vector'``) or in the n-by-n matrices
(``kind='operator'``).  All instances are immutable; operations return new
objects and may be freely shared between threads.

Grid refinement inserts node values equal to the polynomial value, through
the same evaluation path used by the one-sided limits, so refinement never
manufactures spurious jumps: the inserted node and the limits are bitwise
identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _poly
from .errors import DimensionMismatchError, DomainError
from .intervals import ElementarySet, Interval

#: Default bound on piece polynomial degree.  Keeps the root isolation in
#: the variation machinery cheap; pass an explicit ``degree_cap`` to lift
#: it (the power family of the convergence harness does).
DEFAULT_DEGREE_CAP = 8


@dataclass(frozen=True)
class JumpRecord:
    """One-sided jumps of a function at a single point.

    ``jump_minus`` is ``f(t) - f(t-)`` and ``jump_plus`` is
    ``f(t+) - f(t)``; by convention the left jump at ``a`` and the right
    jump at ``b`` are zero.  ``jump_full`` is ``f(t+) - f(t-)`` (with the
    same endpoint conventions), the quantity that drives pure-jump
    integrals.
    """

    t: float
    jump_minus: np.ndarray
    jump_plus: np.ndarray

    @property
    def jump_full(self) -> np.ndarray:
        return self.jump_minus + self.jump_plus


def _domain_pair(domain) -> tuple[float, float]:
    if isinstance(domain, Interval):
        if not (domain.lo_closed and domain.hi_closed):
            raise ValueError("function domains are compact intervals")
        a, b = domain.lo, domain.hi
    else:
        a, b = domain
    a, b = float(a), float(b)
    if not a < b:
        raise ValueError(f"domain must satisfy a < b, got [{a}, {b}]")
    return a, b


class PiecewiseFunction:
    """Regulated function on a compact interval, piecewise polynomial."""

    def __init__(self, grid, coeffs: Sequence, node_values,
                 degree_cap: int = DEFAULT_DEGREE_CAP):
        grid = np.array(grid, dtype=float)
        if grid.ndim != 1 or grid.size < 2:
            raise ValueError("grid needs at least the two domain endpoints")
        if not np.all(np.diff(grid) > 0):
            raise ValueError("grid must be strictly increasing")
        nodes = np.array(node_values, dtype=float)
        if nodes.shape[0] != grid.size:
            raise ValueError("one node value per grid point required")
        vshape = nodes.shape[1:]
        if len(vshape) == 1:
            kind = "vector"
        elif len(vshape) == 2 and vshape[0] == vshape[1]:
            kind = "operator"
        else:
            raise ValueError(f"value shape {vshape} is neither a vector nor a square matrix")
        coeff_arrays = []
        for c in coeffs:
            c = np.array(c, dtype=float)
            if c.shape[1:] != vshape:
                raise ValueError("piece coefficients must share the node value shape")
            if c.shape[0] - 1 > degree_cap and np.any(c[degree_cap + 1:]):
                raise ValueError(
                    f"piece degree {c.shape[0] - 1} exceeds the cap {degree_cap}; "
                    "pass degree_cap explicitly to lift it")
            c.setflags(write=False)
            coeff_arrays.append(c)
        if len(coeff_arrays) != grid.size - 1:
            raise ValueError("need exactly one polynomial per open piece")
        grid.setflags(write=False)
        nodes.setflags(write=False)
        self.grid = grid
        self.coeffs = tuple(coeff_arrays)
        self.nodes = nodes
        self.kind = kind
        self.dim = int(vshape[0])
        self.degree_cap = int(degree_cap)

    # -- basic queries -------------------------------------------------

    @property
    def a(self) -> float:
        return float(self.grid[0])

    @property
    def b(self) -> float:
        return float(self.grid[-1])

    @property
    def domain(self) -> Interval:
        return Interval.closed(self.a, self.b)

    @property
    def vshape(self) -> tuple[int, ...]:
        return self.nodes.shape[1:]

    @property
    def npieces(self) -> int:
        return len(self.coeffs)

    def piece_spans(self):
        """Yield ``(u, v, coefficients)`` for each open piece ``(u, v)``."""
        for j, c in enumerate(self.coeffs):
            yield float(self.grid[j]), float(self.grid[j + 1]), c

    def __repr__(self) -> str:
        return (f"PiecewiseFunction({self.kind}, dim={self.dim}, "
                f"domain=[{self.a}, {self.b}], pieces={self.npieces})")

    def _check_inside(self, t: float):
        if t < self.a or t > self.b:
            raise DomainError(f"t={t} outside the domain [{self.a}, {self.b}]")

    def _piece_of(self, t: float) -> int:
        """Index of the piece whose open interval contains ``t``."""
        return int(np.searchsorted(self.grid, t, side="left")) - 1

    # -- evaluation ------------------------------------------------------

    def __call__(self, t: float) -> np.ndarray:
        """Value at ``t``: the node value on the grid, the piece polynomial
        elsewhere."""
        t = float(t)
        self._check_inside(t)
        i = int(np.searchsorted(self.grid, t, side="left"))
        if i < self.grid.size and self.grid[i] == t:
            return self.nodes[i]
        return _poly.polyval(self.coeffs[i - 1], t)

    def eval_many(self, ts) -> np.ndarray:
        """Vectorised evaluation; returns shape ``vshape + ts.shape``."""
        ts = np.asarray(ts, dtype=float)
        if ts.size and (ts.min() < self.a or ts.max() > self.b):
            raise DomainError("evaluation points outside the domain")
        idx = np.searchsorted(self.grid, ts, side="left")
        on_grid = self.grid[np.minimum(idx, self.grid.size - 1)] == ts
        out = np.empty(self.vshape + ts.shape)
        if np.any(on_grid):
            nodes_t = np.moveaxis(self.nodes, 0, -1)
            out[..., on_grid] = nodes_t[..., idx[on_grid]]
        off = ~on_grid
        if np.any(off):
            pidx = idx[off] - 1
            toff = ts[off]
            sub = np.empty(self.vshape + toff.shape)
            for j in np.unique(pidx):
                sel = pidx == j
                sub[..., sel] = _poly.polyval(self.coeffs[j], toff[sel])
            out[..., off] = sub
        return out

    def limit_right(self, t: float) -> np.ndarray:
        """One-sided limit ``f(t+)``; defined for ``t`` in ``[a, b)``."""
        t = float(t)
        self._check_inside(t)
        if t == self.b:
            raise DomainError("no right limit at the right endpoint")
        i = int(np.searchsorted(self.grid, t, side="left"))
        if self.grid[i] == t:
            return _poly.polyval(self.coeffs[i], t)
        return _poly.polyval(self.coeffs[i - 1], t)

    def limit_left(self, t: float) -> np.ndarray:
        """One-sided limit ``f(t-)``; defined for ``t`` in ``(a, b]``."""
        t = float(t)
        self._check_inside(t)
        if t == self.a:
            raise DomainError("no left limit at the left endpoint")
        i = int(np.searchsorted(self.grid, t, side="left"))
        return _poly.polyval(self.coeffs[i - 1], t)

    # -- jumps -------------------------------------------------------------

    def jumps(self, tol: float = 0.0) -> list[JumpRecord]:
        """Jump records at every grid point with a one-sided jump above
        ``tol`` (default: exactly nonzero).

        The conventions ``jump_minus = 0`` at ``a`` and ``jump_plus = 0``
        at ``b`` are enforced.
        """
        zeros = np.zeros(self.vshape)
        records = []
        m = self.npieces
        for k in range(m + 1):
            t = float(self.grid[k])
            jm = self.nodes[k] - _poly.polyval(self.coeffs[k - 1], t) if k > 0 else zeros
            jp = _poly.polyval(self.coeffs[k], t) - self.nodes[k] if k < m else zeros
            if _poly.norm_of(jm) > tol or _poly.norm_of(jp) > tol:
                records.append(JumpRecord(t, jm, jp))
        return records

    def is_continuous(self, tol: float = 0.0) -> bool:
        return not self.jumps(tol)

    # -- structural operations ----------------------------------------------

    def refine(self, points: Iterable[float]) -> "PiecewiseFunction":
        """Insert grid points; new node values equal the polynomial value,
        so the function is unchanged pointwise."""
        extra = []
        for p in points:
            p = float(p)
            if p < self.a or p > self.b:
                raise DomainError(f"refinement point {p} outside the domain")
            extra.append(p)
        new_grid = np.unique(np.concatenate([self.grid, np.asarray(extra, dtype=float)]))
        if new_grid.size == self.grid.size:
            return self
        old = {float(t): k for k, t in enumerate(self.grid)}
        nodes = np.empty((new_grid.size,) + self.vshape)
        coeffs = []
        for k, t in enumerate(new_grid):
            t = float(t)
            if t in old:
                nodes[k] = self.nodes[old[t]]
            else:
                nodes[k] = _poly.polyval(self.coeffs[self._piece_of(t)], t)
        for u, v in zip(new_grid[:-1], new_grid[1:]):
            coeffs.append(self.coeffs[self._piece_of(0.5 * (u + v))])
        return PiecewiseFunction(new_grid, coeffs, nodes, self.degree_cap)

    def clip(self, c: float, d: float) -> "PiecewiseFunction":
        """The function restricted to the subdomain ``[c, d]`` (values kept
        as they are; this is a domain restriction, not multiplication by an
        indicator)."""
        c, d = float(c), float(d)
        if c < self.a or d > self.b or not c < d:
            raise DomainError(f"[{c}, {d}] is not a subdomain of [{self.a}, {self.b}]")
        inner = self.grid[(self.grid > c) & (self.grid < d)]
        new_grid = np.concatenate([[c], inner, [d]])
        nodes = np.stack([self(t) for t in new_grid])
        coeffs = [self.coeffs[self._piece_of(0.5 * (u + v))]
                  for u, v in zip(new_grid[:-1], new_grid[1:])]
        return PiecewiseFunction(new_grid, coeffs, nodes, self.degree_cap)

    def restrict(self, region: ElementarySet | Interval) -> "PiecewiseFunction":
        """Multiply by the indicator of ``region``: equal to this function
        on the region, zero off it, with endpoint openness honoured."""
        if isinstance(region, Interval):
            region = ElementarySet.of(region)
        for part in region.parts:
            if part.lo < self.a or part.hi > self.b:
                raise DomainError(f"part {part} is not inside [{self.a}, {self.b}]")
        refined = self.refine(region.endpoints())
        zeros = np.zeros((1,) + self.vshape)
        coeffs = []
        for u, v, c in refined.piece_spans():
            coeffs.append(c if region.contains(0.5 * (u + v)) else zeros)
        keep = region.contains_many(refined.grid)
        nodes = np.where(keep.reshape((-1,) + (1,) * len(self.vshape)),
                         refined.nodes, 0.0)
        return PiecewiseFunction(refined.grid, coeffs, nodes, self.degree_cap)

    # -- suprema ---------------------------------------------------------

    def sup_norm(self, region: ElementarySet | Interval | None = None) -> float:
        """Supremum of the pointwise norm over ``region`` (default: the
        whole domain).

        Node values count only at points belonging to the region, while the
        polynomial closures of the pieces meeting the region's interior
        always count — that is exactly the supremum over a set that may
        exclude its endpoints.
        """
        if region is None:
            region = self.domain
        if isinstance(region, Interval):
            region = ElementarySet.of(region)
        best = 0.0
        for part in region.parts:
            if part.lo < self.a or part.hi > self.b:
                raise DomainError(f"part {part} is not inside [{self.a}, {self.b}]")
            if part.is_degenerate:
                best = max(best, _poly.norm_of(self(part.lo)))
                continue
            for k, t in enumerate(self.grid):
                if part.contains(float(t)):
                    best = max(best, _poly.norm_of(self.nodes[k]))
            for u, v, c in self.piece_spans():
                lo, hi = max(u, part.lo), min(v, part.hi)
                if hi > lo:
                    best = max(best, _poly.sup_norm_on(c, lo, hi))
        return best

    # -- arithmetic sugar ---------------------------------------------------

    def __add__(self, other: "PiecewiseFunction") -> "PiecewiseFunction":
        return lincomb(1.0, self, 1.0, other)

    def __sub__(self, other: "PiecewiseFunction") -> "PiecewiseFunction":
        return lincomb(1.0, self, -1.0, other)

    def __mul__(self, scalar: float) -> "PiecewiseFunction":
        coeffs = [scalar * c for c in self.coeffs]
        return PiecewiseFunction(self.grid, coeffs, scalar * self.nodes,
                                 self.degree_cap)

    __rmul__ = __mul__

    def __neg__(self) -> "PiecewiseFunction":
        return self * -1.0


# -- factories ---------------------------------------------------------------


def _lift_coeffs(coeffs) -> np.ndarray:
    c = np.asarray(coeffs, dtype=float)
    if c.ndim == 1:
        c = c[:, np.newaxis]
    return c


def polynomial(domain, coeffs, degree_cap: int | None = None) -> PiecewiseFunction:
    """Single-piece polynomial function.  ``coeffs[j]`` multiplies ``t**j``
    and may be scalar (lifted to a 1-vector), vector or matrix valued."""
    a, b = _domain_pair(domain)
    c = _lift_coeffs(coeffs)
    if degree_cap is None:
        degree_cap = max(DEFAULT_DEGREE_CAP, c.shape[0] - 1)
    nodes = np.stack([_poly.polyval(c, a), _poly.polyval(c, b)])
    return PiecewiseFunction([a, b], [c], nodes, degree_cap)


def constant(domain, value) -> PiecewiseFunction:
    a, b = _domain_pair(domain)
    value = np.atleast_1d(np.asarray(value, dtype=float))
    return PiecewiseFunction([a, b], [value[np.newaxis]],
                             np.stack([value, value]))


def zero_function(domain, kind: str = "vector", dim: int = 1) -> PiecewiseFunction:
    vshape = (dim,) if kind == "vector" else (dim, dim)
    a, b = _domain_pair(domain)
    return PiecewiseFunction([a, b], [np.zeros((1,) + vshape)],
                             np.zeros((2,) + vshape))


def step(domain, region: ElementarySet | Interval, value=1.0) -> PiecewiseFunction:
    """``value`` times the indicator of ``region``, zero elsewhere."""
    return constant(domain, value).restrict(region)


def scaled_identity(domain, scalar_coeffs, dim: int = 1,
                    degree_cap: int | None = None) -> PiecewiseFunction:
    """Operator-valued polynomial ``p(t) I`` from scalar coefficients."""
    sc = np.asarray(scalar_coeffs, dtype=float).reshape(-1)
    coeffs = sc[:, np.newaxis, np.newaxis] * np.eye(dim)
    return polynomial(domain, coeffs, degree_cap)


# -- linear-space operations ---------------------------------------------------


def lincomb(c1: float, f1: PiecewiseFunction,
            c2: float, f2: PiecewiseFunction) -> PiecewiseFunction:
    """Pointwise ``c1 f1 + c2 f2`` on the merged grid."""
    if f1.kind != f2.kind or f1.dim != f2.dim:
        raise DimensionMismatchError(
            f"cannot combine {f1.kind}/dim {f1.dim} with {f2.kind}/dim {f2.dim}")
    if f1.a != f2.a or f1.b != f2.b:
        raise DimensionMismatchError("functions live on different domains")
    r1 = f1.refine(f2.grid)
    r2 = f2.refine(f1.grid)
    coeffs = []
    for p, q in zip(r1.coeffs, r2.coeffs):
        k = max(p.shape[0], q.shape[0])
        out = np.zeros((k,) + r1.vshape)
        out[:p.shape[0]] += c1 * p
        out[:q.shape[0]] += c2 * q
        coeffs.append(out)
    nodes = c1 * r1.nodes + c2 * r2.nodes
    return PiecewiseFunction(r1.grid, coeffs, nodes,
                             max(f1.degree_cap, f2.degree_cap))


def _jump_table(f: PiecewiseFunction) -> tuple[np.ndarray, np.ndarray]:
    """Per-grid-point one-sided jumps (zero rows where continuous)."""
    jm = np.zeros((f.grid.size,) + f.vshape)
    jp = np.zeros((f.grid.size,) + f.vshape)
    index = {float(t): k for k, t in enumerate(f.grid)}
    for rec in f.jumps():
        k = index[rec.t]
        jm[k] = rec.jump_minus
        jp[k] = rec.jump_plus
    return jm, jp


def jordan_decompose(f: PiecewiseFunction) -> tuple[PiecewiseFunction, PiecewiseFunction]:
    """Split ``f`` into a continuous part and a break part, ``f = f_c + f_b``.

    The break part accumulates the right jump of every discontinuity
    strictly before ``t`` and the left jump of every discontinuity up to
    ``t``, normalised to vanish at ``a`` (which pins down the additive
    constant the decomposition is otherwise only unique up to).  Both
    one-sided jumps of ``f_b`` agree with those of ``f`` at every point,
    so the other summand is continuous.
    """
    records = f.jumps()
    if not records:
        return f, zero_function((f.a, f.b), f.kind, f.dim)
    jm, jp = _jump_table(f)
    m = f.npieces
    b_nodes = np.zeros_like(f.nodes)
    piece_vals = np.zeros((m,) + f.vshape)
    running = np.zeros(f.vshape)
    for k in range(m + 1):
        running = running + jm[k]
        b_nodes[k] = running
        if k < m:
            running = running + jp[k]
            piece_vals[k] = running
    fb = PiecewiseFunction(f.grid, [piece_vals[j][np.newaxis] for j in range(m)],
                           b_nodes)
    c_coeffs = []
    for j, c in enumerate(f.coeffs):
        cc = np.array(c)
        cc[0] = cc[0] - piece_vals[j]
        c_coeffs.append(cc)
    fc = PiecewiseFunction(f.grid, c_coeffs, f.nodes - b_nodes, f.degree_cap)
    return fc, fb


def _require_break_function(f: PiecewiseFunction):
    for c in f.coeffs:
        if c.shape[0] > 1 and np.any(c[1:]):
            raise ValueError("not a break function: a piece is non-constant")
    if np.any(f.nodes[0]):
        raise ValueError("not a break function: value at the left endpoint is nonzero")


def break_truncate(f_b: PiecewiseFunction, jump_points: Iterable[float]) -> PiecewiseFunction:
    """Break function carrying only the jumps of ``f_b`` at ``jump_points``.

    Truncating a break function to finitely many of its jumps is the
    canonical approximation scheme: the variation of the difference is the
    summed norm of the dropped jumps.
    """
    _require_break_function(f_b)
    records = {rec.t: rec for rec in f_b.jumps()}
    kept = []
    for p in jump_points:
        p = float(p)
        if p not in records:
            raise ValueError(f"{p} is not a jump point of the break function")
        kept.append(p)
    grid = np.unique(np.asarray([f_b.a, f_b.b] + kept, dtype=float))
    vshape = f_b.vshape
    jm = np.zeros((grid.size,) + vshape)
    jp = np.zeros((grid.size,) + vshape)
    for p in kept:
        k = int(np.searchsorted(grid, p))
        jm[k] = records[p].jump_minus
        jp[k] = records[p].jump_plus
    m = grid.size - 1
    nodes = np.zeros((grid.size,) + vshape)
    pieces = np.zeros((m,) + vshape)
    running = np.zeros(vshape)
    for k in range(m + 1):
        running = running + jm[k]
        nodes[k] = running
        if k < m:
            running = running + jp[k]
            pieces[k] = running
    return PiecewiseFunction(grid, [pieces[j][np.newaxis] for j in range(m)], nodes)


def restrict(f: PiecewiseFunction, region: ElementarySet | Interval) -> PiecewiseFunction:
    """Module-level alias of :meth:`PiecewiseFunction.restrict`."""
    return f.restrict(region)
