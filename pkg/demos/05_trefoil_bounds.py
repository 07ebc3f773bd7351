"""
Upper and lower trefoil curves
==============================

Writes the two curves as exact rationals; plot them with anything.
"""

import csv
import sys

from freeknot import formulas as F
from freeknot.appendix import load_shape_corpus
from freeknot.enumeration import distribution

rows = F.bounds_series(75)
w = csv.writer(sys.stdout)
w.writerow(["n", "foil", "two_n"])
for n, up, lo in rows[:12]:
    w.writerow([n, float(up), float(lo)])

# how the corpus sits between them
bounds = {n: (up, lo) for n, up, lo in rows}
for name, d in load_shape_corpus().items():
    if d.n < 3:
        continue
    p = distribution(d).probability("3_1")
    up, lo = bounds[d.n]
    if not lo <= p <= up:
        print(f"# {name}: trefoil share {p} outside [{lo}, {up}]")
