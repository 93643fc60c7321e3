"""Bounded-convergence experiments.

If the integrator has bounded variation and the integrands converge
pointwise under a uniform sup-norm bound, their integrals converge to the
integral of the limit.  The harness realises three canonical families,
verifies the hypotheses (and refuses to run when they fail), and reports
the error curve against the limit integral.

The power family t**n is the classic non-uniform example: against the
integrator t*I the errors are exactly 1/(n+1), so convergence of the
integrals is visible long before the functions get uniformly close.
"""

import numpy as np

from kstieltjes import (HypothesisViolationError, Interval, SequenceFamily,
                        lincomb, realize, run_bounded_convergence,
                        scaled_identity, step, verify_break_limit, polynomial)

t_id = scaled_identity((0.0, 1.0), [0.0, 1.0], dim=1)

print("-- power family against F = t I --")
report = run_bounded_convergence(t_id, SequenceFamily.power(),
                                 [2**k for k in range(11)], threshold=1e-3)
for entry in report.entries[:6]:
    print(f"  n={entry.n:4d}  integral={entry.integral[0]:.10f}  "
          f"error={entry.error:.10f}  (= 1/(n+1))")
print(f"  ... final error {report.errors[-1]:.3e}, passed={report.passed}")

print()
print("-- spike family sliding onto a point --")
spike = SequenceFamily.spike((0.0, 1.0), 0.0, 5.0)
report = run_bounded_convergence(t_id, spike, [1, 4, 16, 64, 256], threshold=1e-1)
print("  errors:", [round(e, 6) for e in report.errors])
print("  limit integral:", report.integral_limit[0],
      "(a point mass is invisible to a continuous integrator)")

print()
print("-- a jumpy integrator only sees the integrand at its jumps --")
jumpy = lincomb(1.0, t_id, 1.0,
                step((0.0, 1.0), Interval.closed(0.25, 1.0), np.array([[0.5]])))
engine, hand_sum = verify_break_limit(jumpy, polynomial((0.0, 1.0), [0.0, 1.0]))
print("  integral against the break part:", engine[0],
      "= jump * g(1/4) =", hand_sum[0])

print()
print("-- the harness refuses false hypotheses --")
members = [realize(spike, n) for n in (1, 2, 3)]
lying = SequenceFamily.custom(members, spike.limit, bound=1.0)  # sup is 5
try:
    run_bounded_convergence(t_id, lying, [1, 2, 3], threshold=1.0)
except HypothesisViolationError as err:
    print("  rejected:", err)
