"""Variation on compact intervals, arbitrary intervals and elementary sets.

The variation of a representable function over [c, d] splits into the
integral of the norm of the continuous part's derivative plus the summed
jump norms.  Over an interval that excludes an endpoint, exactly that
endpoint's jump norm disappears:

    var[c,d] = var[c,d) + ||jump_minus(d)||
             = var(c,d] + ||jump_plus(c)||
             = var(c,d) + ||jump_plus(c)|| + ||jump_minus(d)||

Over an elementary set the variation is the sum over the minimal
decomposition, which is finitely additive for continuous functions, and
shrinking elementary sets with empty intersection drive it to zero.
"""

import numpy as np

from kstieltjes import (ElementarySet, Interval, PiecewiseFunction,
                        contracting_variation, polynomial, step, var_compact,
                        var_elementary, var_interval)

hat = PiecewiseFunction([0.0, 0.5, 1.0],
                        [np.array([[0.0], [2.0]]), np.array([[2.0], [-2.0]])],
                        [[0.0], [1.0], [0.0]])
print("hat: up with slope 2, down with slope -2")
r = var_compact(hat, 0.0, 1.0)
print(f"var over [0,1]: total={r.total} (continuous={r.continuous_contribution}, "
      f"jump={r.jump_contribution})")

chi = step((0.0, 1.0), Interval.closed(0.5, 1.0), 1.0)
print()
print("indicator of [1/2,1]: a single left jump at 1/2")
print("var over [0,1/2) =", var_interval(chi, Interval(0, 0.5, True, False)).total)
print("var over [0,1/2] =", var_interval(chi, Interval.closed(0, 0.5)).total)
print("identity: compact = half-open + ||jump_minus(1/2)|| ->",
      var_interval(chi, Interval.closed(0, 0.5)).total
      == var_interval(chi, Interval(0, 0.5, True, False)).total + 1.0)

square = polynomial((0.0, 1.0), [0.0, 0.0, 1.0])
print()
print("continuous functions do not care about endpoint openness:")
for lc, hc in ((True, True), (True, False), (False, True), (False, False)):
    print(f"  var over {Interval(0, 1, lc, hc)} =",
          var_interval(square, Interval(0, 1, lc, hc)).total)

print()
e = ElementarySet.of(Interval.closed(0.0, 0.25), Interval.closed(0.5, 0.75))
print(f"var of hat over {e} =", var_elementary(hat, e).total)

print()
print("-- contracting elementary sets --")
ramp = polynomial((0.0, 1.0), [0.0, 1.0])
family = [ElementarySet.of(Interval.open(0.0, 1.0 / n)) for n in range(1, 9)]
print("A_n = (0, 1/n), f = t:  v_n =", contracting_variation(ramp, family))
pinch = [ElementarySet.of(Interval.closed(0.5 - 1 / (4 * n), 0.5 + 1 / (4 * n)))
         for n in range(1, 9)]
print("A_n pinching the hat's peak: v_n =",
      [round(v, 12) for v in contracting_variation(hat, pinch)])
