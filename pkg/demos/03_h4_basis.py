# H4: symmetry group of the 120-cell, order 14400.
#
# Completion adds 22 rules, the longest of length 46.  Everything downstream
# (counts, tower, longest element) is read off the finite automaton.

import time

import numpy as np

from gsbasis import (complete, coset_tower, length_counts, longest_standard,
                     preset_presentation)
from gsbasis.relations import expand

t0 = time.perf_counter()
report = complete(preset_presentation("H4"))
S = report.system
G = S.generators
print(report.summary())
print(f"completed in {time.perf_counter() - t0:.2f}s")

lengths = np.array([len(r.lhs) for r in S.rules])
print("lhs lengths:", np.bincount(lengths).nonzero()[0].tolist())

counts = np.array(length_counts(S))
print("standard monomials:", counts.sum())
print("by length (first 10):", counts[:10].tolist())
# the length generating function of a finite Coxeter group is palindromic
print("palindromic:", bool((counts == counts[::-1]).all()))

print("coset tower:", coset_tower(S).sizes)

w0 = longest_standard(S)
print("longest element has length", len(w0))

# multiplying X^4 s4 on the right by s2 moves s2 all the way to the front
X = "(43212132123)"
w = expand(X + "^4 4 2")
nf = S.normal_form(w)
print(G.format_polynomial(nf)[:24], "...")
print("equals s2 X^4 s4:", dict(nf) == {expand("2" + X + "^4 4"): 1})
