"""
The free trefoil, one crossing at a time
========================================

Erase the crossings of a trefoil and put them back every possible way.
"""

import itertools

from freeknot.appendix import load_shape_corpus
from freeknot.classify import default_table
from freeknot.enumeration import distribution, descent_unknot_assignments
from freeknot.statesum import bracket, build_state_table, jones, orientation, writhe

corpus = load_shape_corpus()
trefoil = corpus["3_1"]
print(trefoil, trefoil.crossings)

#############################
# Every smoothing, once     #
#############################

# loop counts of the 8 smoothing states, shared by all 8 assignments
table = build_state_table(trefoil)
print("loops per state:", list(table.loop_counts))

#############################
# Bracket, writhe, Jones    #
#############################

o = orientation(trefoil)
table_ref = default_table()
for bits in itertools.product((0, 1), repeat=3):
    v = jones(table, o, bits)
    print(bits, "bracket", bracket(table, bits), "| w =", writhe(trefoil, o, bits),
          "|", table_ref.identify(v).name)

#############################
# The tally                 #
#############################

dist = distribution(trefoil)
print(dict(dist.counts))            # 6 unknots, 2 trefoils

# the unknots found by walking the diagram and always passing over
print(sorted(descent_unknot_assignments(trefoil)))
