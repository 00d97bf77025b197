# %% [markdown]
# Coloring counts of diagrams
#
# Diagrams are read from `.pd` text.  The count of labelings compatible with
# a biquandle switch does not change under curls, and equals the number of
# tuples fixed by the braid whose closure is the diagram.

# %%
from ybknot import fixtures
from ybknot.braid import word
from ybknot.diagram import closure, color_count, format_diagram, insert_kink
from ybknot.invariant import fixed_point_count

S, V = fixtures.switch_pair("quandle", "R3")
for name in fixtures.DIAGRAMS:
    print(f"{name:16s}", color_count(fixtures.diagram(name), S, V))

# %% Curls of every kind on every arc of the trefoil
T = fixtures.diagram("trefoil")
print(format_diagram(T))
counts = {color_count(insert_kink(T, a, k, side), S, V)
          for a in range(T.n_arcs) for k in ("R1+", "R1-", "VR1") for side in ("left", "right")}
print("counts after one curl:", counts)

# %% Closure colorings against braid fixed points
S2, V2 = fixtures.switch_pair("2q", "conjS3")
for text, n in [("s1 s1 s1", 2), ("s1 s1 r1", 2), ("s1 S2 s1 S2", 3), ("r1 s2 r1 S2", 3)]:
    b = word(n, text)
    print(f"{text:14s}", color_count(closure(b), S2, V2), fixed_point_count(b, S2, V2))
