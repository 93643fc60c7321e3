"""Stieltjes integration against an operator integrator, over intervals of
every openness pattern and over elementary sets.

The engine computes ``integral d[F] g`` in closed form: exact polynomial
antiderivatives against the continuous part of F, plus the full jumps of F
applied to the integrand's values.  Integrals over arbitrary intervals add
the jump corrections the interval's openness dictates, and the result is
always the same as multiplying the integrand by the set's indicator and
integrating over the whole domain - both routes are shown below.
"""

import numpy as np

from kstieltjes import (ElementarySet, Interval, constant, estimate_bound,
                        integral_over_elementary, integral_over_interval,
                        integral_over_point, ks_Fdg, ks_dFg, polynomial,
                        saks_identity_report, scaled_identity, step)

t_id = scaled_identity((0.0, 1.0), [0.0, 1.0], dim=1)     # F(t) = t I
chi = step((0.0, 1.0), Interval.closed(0.5, 1.0), np.array([[1.0]]))
ramp = polynomial((0.0, 1.0), [0.0, 1.0])                 # g(t) = t
one = constant((0.0, 1.0), 1.0)

print("integral d[tI] 1 over [0,1]      =", ks_dFg(t_id, one).value[0])
print("integral d[chi] t over [0,1]     =", ks_dFg(chi, ramp).value[0],
      " (pure jump: the step picks out g(1/2))")
print("integral tI d[chi] over [0,1]    =", ks_Fdg(t_id,
      step((0.0, 1.0), Interval.closed(0.5, 1.0), 1.0)).value[0],
      " (other orientation: F(1/2) times the jump of g)")

print()
print("-- openness matters exactly when the integrator jumps --")
for interval in (Interval.open(0.5, 1.0), Interval(0.5, 1.0, True, False),
                 Interval.closed(0.5, 1.0)):
    direct = integral_over_interval(chi, one, interval)[0]
    via_indicator = ks_dFg(chi, one.restrict(ElementarySet.of(interval))).value[0]
    print(f"  over {str(interval):12s}: corrections route = {direct}, "
          f"indicator route = {via_indicator}")

print()
print("-- degenerate intervals: the point proposition --")
gp1 = polynomial((0.0, 1.0), [1.0, 1.0])
print("integral over [1/2] of d[chi] (t+1) =",
      integral_over_point(chi, gp1, 0.5)[0], " (jump times g(1/2) = 1.5)")
print("continuous integrator at any point  =",
      integral_over_point(t_id, gp1, 0.3)[0])

print()
print("-- elementary sets --")
e = ElementarySet.of(Interval.closed(0.0, 0.25), Interval.closed(0.5, 0.75))
res = integral_over_elementary(t_id, one, e)
print(f"integral over {e} of d[tI] 1 = {res.value[0]} "
      f"(continuous {res.continuous_contribution[0]}, jump {res.jump_contribution[0]})")

print()
print("-- a priori estimates --")
J = Interval(0.5, 1.0, True, False)
print(f"|integral| over {J} <= {estimate_bound(chi, gp1, J)}",
      f" (actual {abs(integral_over_interval(chi, gp1, J)[0])})")

print()
print("-- endpoint corrections between integral over [c,d] and from c to d --")
r = saks_identity_report(chi, one, 0.5, 1.0)
print("corrections at c=1/2 and d=1:", r.at_lower[0], ",", r.at_upper[0])
