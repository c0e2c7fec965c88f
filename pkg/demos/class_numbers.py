"""
Class numbers of imaginary quadratic fields
===========================================

Counts reduced forms for every square-free a up to ten thousand and looks at
how the class numbers are distributed.
"""

# %%
# one batch pass fills h(-a) for every a at once
import numpy as np
from llnsolve import classnum

h = classnum.class_numbers_upto(10**4)
values = np.array(list(h.values()))
print(f"{len(h)} square-free a, largest h = {values.max()}")

# %%
# the fields with unique factorization
print("h = 1:", classnum.tally_class_numbers(1, 10**4))

# %%
# small class numbers are rare
for k in range(1, 9):
    print(f"h = {k}: {np.count_nonzero(values == k)} fields")

# %%
# reduced forms of discriminant -23 make the three classes visible
print(classnum.reduced_forms(-23))
