"""
Checking verdicts against a brute-force search
==============================================

Each NoSolution verdict comes with a certificate. A direct search over y is a
blunt but independent check.
"""

# %%
from llnsolve import search, solver

inst = solver.ProblemInstance(23, 5, 1, 7)
verdict = solver.solve(inst)
print(verdict)
print("certificate verifies:", solver.verify_certificate(verdict.certificate))

# %%
# nothing up to y = 10^4, using four chunks in parallel
rep = search.brute_force(23, 5, 1, 7, 10**4, partitions=4)
print(f"{len(rep.solutions)} solutions in {rep.elapsed:.2f}s")

# %%
# where the hypotheses fail the search does find something
rep = search.brute_force(7, 11, 1, 5, 10**3)
print(solver.solve(solver.ProblemInstance(7, 11, 1, 5)))
print([s.as_tuple() for s in rep.solutions])

# %%
# the published tuples, checked exactly
for c in search.verify_corpus(search.published_corpus()):
    print(c.entry.as_tuple(), c.b_kind, c.residues, "ok" if c.ok else c.failures)
