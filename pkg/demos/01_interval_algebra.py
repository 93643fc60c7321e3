"""Interval and elementary-set algebra with exact endpoint openness.

An elementary set is a finite union of bounded intervals.  The library
always stores the *minimal decomposition*: parts are disjoint, sorted, and
no two of them can be merged into a single interval.  Whether endpoints
belong to a part is tracked exactly, never by tolerance - [0,1) followed
by [1,2] is the single interval [0,2], while (0,1) and (1,2) stay apart
because the point 1 is missing.
"""

import numpy as np

from kstieltjes import (ElementarySet, Interval, elementary_diff,
                        elementary_intersect, elementary_union, indicator,
                        minimal_decomposition)

print("-- minimal decomposition --")
print("{[0,1), [1,2]}      ->", minimal_decomposition([Interval(0, 1, True, False),
                                                       Interval.closed(1, 2)]))
print("{(0,1), (1,2)}      ->", minimal_decomposition([Interval.open(0, 1),
                                                       Interval.open(1, 2)]))
print("{[0], (0,1)}        ->", minimal_decomposition([Interval.at(0.0),
                                                       Interval.open(0, 1)]))

print()
print("-- set algebra --")
box = ElementarySet.of(Interval.closed(0, 2))
window = ElementarySet.of(Interval.open(1, 3))
print("[0,2] & (1,3)       ->", elementary_intersect(box, window))
print("[0,2] - (1,3)       ->", elementary_diff(box, window))
print("[0,1],[3,4] | [2,3) ->", elementary_union(
    ElementarySet.of(Interval.closed(0, 1), Interval.closed(3, 4)),
    ElementarySet.of(Interval(2, 3, True, False))))

print()
print("-- membership honours openness --")
e = ElementarySet.of(Interval(0, 1, True, False), Interval.at(2.0))
for t in (0.0, 1.0, 2.0):
    print(f"indicator({e}, {t}) = {indicator(e, t)}")

print()
print("-- membership equals membership in the raw union --")
rng = np.random.default_rng(0)
samples = rng.uniform(0, 1, size=2000)
raw = [Interval(0.1, 0.4, False, True), Interval(0.4, 0.7, True, False),
       Interval.at(0.9)]
merged = minimal_decomposition(raw)
direct = np.zeros(samples.shape, dtype=bool)
for iv in raw:
    direct |= ElementarySet.of(iv).contains_many(samples)
print("minimal decomposition:", merged)
print("memberships agree on 2000 samples:",
      bool(np.array_equal(merged.contains_many(samples), direct)))
