"""
Rauzy graphs and their theta quotient
=====================================

The Rauzy graph of order n links each length-n factor to the ones that
follow it. Collapsing chains between special factors gives the reduced
graph, and identifying each path with its theta image gives the super
reduced graph. Its shape predicts whether the complexity equality holds.
"""

# %%
import tempfile
from pathlib import Path

from thetarich import build_factor_index, corpus_entry, n_simple_paths, rauzy_graph, super_reduced_graph
from thetarich.complexity import profile_from_index
from thetarich.rauzy import cor33_check, rauzy_dot, reduced_dot, super_reduced_dot

entry = corpus_entry("ex5.1")
theta, w = entry.theta, entry.make().prefix(2000)
idx = build_factor_index(w, 8)

# %%
g = rauzy_graph(idx, 3)
print(len(g.vertices), "vertices,", len(g.edges), "edges, strongly connected:", g.is_strongly_connected())

# %%
# Simple paths run from one special factor to the next.
paths = n_simple_paths(idx, 3)
for p in paths:
    print(idx.word(p.code).text())

# %%
# For this word every order collapses to one vertex carrying theta-fixed
# loops, which is the shape that forces equality.
prof = profile_from_index(theta, idx, 7)
for n in range(1, 8):
    s = super_reduced_graph(theta, idx, n)
    v = cor33_check(theta, idx, n, prof)
    print(n, len(s.vertices), "vertex", len(s.loops), "loops",
          "predicted", v.equality_predicted, "observed", v.equality_observed)

# %%
# DOT output is sorted, so the files are byte-stable across runs.
out = Path(tempfile.mkdtemp())
(out / "rauzy_3.dot").write_text(rauzy_dot(g))
(out / "reduced_3.dot").write_text(reduced_dot(paths, idx.alphabet))
(out / "super_reduced_3.dot").write_text(super_reduced_dot(super_reduced_graph(theta, idx, 3), theta))
print(out)
print((out / "super_reduced_3.dot").read_text())
