"""
Pell equations and the cubic families
=====================================

For p = 7 and n = 3 the equation 7x^2 + b^(2l) = 4y^3 has infinitely many
solutions. They come from odd solutions of a few Pell-type equations.
"""

# %%
from llnsolve import families, pell

form = pell.PellForm(21, 4)
print("fundamental:", pell.fundamental_solution(form))

# %%
# only every third solution has an even coordinate
for s in pell.odd_solutions(form, 5):
    print(s.index, s.u, s.v)

# %%
# the six families, a few members each
for fid in families.FamilyId:
    head = families.generate(fid, 3)
    print(fid.value, [(m.x, m.y, m.blpow) for m in head])

# %%
# every member so far has 4 b^l = +-1 (mod 7)
flags = {m.congruence_flag for fid in families.FamilyId for m in families.generate(fid, 25)}
print("4 b^l mod 7 over 150 members:", sorted(flags))

# %%
# which values of b^l are reachable?
for value in (5, 9, 23, 205, 7, 11):
    print(value, families.is_member(value))
