"""
Connected sums and recursive sums
=================================
"""

from fractions import Fraction

from freeknot import formulas as F
from freeknot.appendix import load_shape_corpus, shape_for
from freeknot.enumeration import distribution

corpus = load_shape_corpus()
t = distribution(corpus["3_1"]).probabilities()
f8 = distribution(corpus["4_1"]).probabilities()

# the law of a sum is the convolution of the laws of its parts
predicted = F.sum_convolution(t, f8)
enumerated = distribution(shape_for("3_1#4_1", corpus)).probabilities()
print(predicted == enumerated)
for name, p in sorted(enumerated.items()):
    print(f"  {name:8s} {p}")

# 3_1 # 3_1 -> 3_1 # 3_1: both factors are trefoils, so one cross term
u, a = t["0_1"], t["3_1"]
print(F.sum_composite_law(u, u, a, a, a, a, 0, 0, same_components=True))

######################
# Trefoil towers     #
######################

alpha, beta = Fraction(3, 4), Fraction(1, 4)
for n in range(1, 8):
    p = F.recursive_prob(F.RecursiveSumParams(alpha, beta, n))
    print(n, p, float(p))
print("peak at N =", F.recursive_max_step(alpha))
