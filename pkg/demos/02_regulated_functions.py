"""The regulated-function representation and its Jordan decomposition.

Functions are piecewise polynomials over a grid with an explicit value at
every grid point.  Node values are allowed to disagree with the
neighbouring polynomials - that is how jumps are encoded - and one-sided
limits always exist, so every representable function is regulated and has
finitely many discontinuities.

Any such function of bounded variation splits as f = f_C + f_B with f_C
continuous and f_B a break function (a pure sum of one-sided jumps),
normalised so that f_B vanishes at the left endpoint.  Truncating f_B to
a subset of its jumps is the canonical finite approximation: the variation
of the error is exactly the summed norm of whatever was dropped.
"""

import numpy as np

from kstieltjes import (Interval, break_truncate, jordan_decompose, lincomb,
                        polynomial, step, var_compact)

# f(t) = t plus a unit jump after 1/2:  f = t + chi_(1/2, 1]
ramp = polynomial((0.0, 1.0), [0.0, 1.0])
jump = step((0.0, 1.0), Interval(0.5, 1.0, False, True), 1.0)
f = lincomb(1.0, ramp, 1.0, jump)

print("f(0.25) =", f(0.25)[0], "  f(0.5) =", f(0.5)[0], "  f(0.75) =", f(0.75)[0])
print("one-sided limits at 1/2:", f.limit_left(0.5)[0], "|", f.limit_right(0.5)[0])
for rec in f.jumps():
    print(f"jump at t={rec.t}: minus={rec.jump_minus[0]}, plus={rec.jump_plus[0]}")

print()
print("-- Jordan decomposition --")
f_cont, f_break = jordan_decompose(f)
ts = np.linspace(0.0, 1.0, 9)
print("t        :", ts)
print("f_C(t)   :", f_cont.eval_many(ts)[0])
print("f_B(t)   :", f_break.eval_many(ts)[0])
print("f_C has no jumps:", f_cont.jumps() == [])
print("f_B(a) = 0:", f_break(0.0)[0] == 0.0)

print()
print("-- truncating a break function --")
three = step((0.0, 1.0), Interval.closed(0.25, 1.0), 1.0)
three = lincomb(1.0, three, 1.0, step((0.0, 1.0), Interval.closed(0.5, 1.0), 1.0))
three = lincomb(1.0, three, 1.0, step((0.0, 1.0), Interval.closed(0.75, 1.0), 1.0))
order = [rec.t for rec in three.jumps()]
for n in range(len(order) + 1):
    partial = break_truncate(three, order[:n])
    gap = var_compact(lincomb(1.0, partial, -1.0, three), 0.0, 1.0).total
    print(f"keep first {n} jumps: var(truncation - full) = {gap}")
