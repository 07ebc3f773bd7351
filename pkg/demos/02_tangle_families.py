"""
Twisted families: formulas against brute force
==============================================
"""

from freeknot import formulas as F
from freeknot.enumeration import distribution, exact_decimal
from freeknot.tangle import fraction, make_2n, make_21n, make_foil, make_kn
from freeknot.verify import word_class

# Conway words and their fractions
for word in ([3, -1, 2], [2, 5], [2, 1, 5]):
    print(word, fraction(word))

######################
# Foils              #
######################

for n in (3, 5, 7, 9):
    dist = distribution(make_foil(n))
    for k in range(1, n + 1, 2):
        name = word_class((k,))
        print(f"{n}-foil -> {name:5s} enumerated {dist.count(name):4d}  formula {F.foil_count(n, k):4d}")

# trefoils peak at 21/64 for the 7- and 9-foils
print("max trefoil share", exact_decimal(F.max_kfoil_probability(3), 100), "%")

######################
# 2 n and k n        #
######################

for n in range(1, 7):
    dist = distribution(make_2n(n))
    print(f"2 {n}: unknots {dist.count('0_1')} (formula {F.two_n_unknot_count(n)}),"
          f" E[crossings] = {exact_decimal(F.two_n_expectation(n))}")

a, b = distribution(make_kn(3, 4)), distribution(make_kn(4, 3))
print("3 4 and 4 3 agree:", a.counts == b.counts)

######################
# 2 1 n              #
######################

c = F.twoonen_counts(7)
print("2 1 7:", c.total, "of 1024 resultants named by the formulas")
print(dict(distribution(make_21n(3)).counts))
