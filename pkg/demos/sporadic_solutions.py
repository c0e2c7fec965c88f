"""
Sporadic solutions for small exponents
======================================

For p in the class-number-one set and n in {5, 7, 13} the equation has only a
handful of solutions. Here every subcase of the case analysis is resolved.
"""

# %%
from llnsolve import solver
from llnsolve.classnum import SPECIAL_SET

for n in (5, 7, 13):
    found = sorted({t.canonical().as_tuple() for p in SPECIAL_SET for t in solver.sporadic_tuples(p, n)})
    print(f"n = {n}:", found)

# %%
# the n = 5 analysis for p = 7, subcase by subcase
for o in solver.classify_small_n(7, 5):
    print(f"{o.label:22} {o.kind:10} {o.detail}")

# %%
# n = 3 ends in residue contradictions, except the family branches at p = 7
for o in solver.classify_small_n(7, 3):
    print(f"{o.label:5} {o.kind:14} {o.detail}")
