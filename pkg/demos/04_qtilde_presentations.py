# %% [markdown]
# The presented quandle of a braid closure
#
# Generators x_j range over the free part, y_j over a trivial part; each
# generator is fixed by the braid.  Presentations are compared through the
# number of homomorphisms into small quandles.

# %%
from ybknot import fixtures
from ybknot.invariant import format_presentation, hom_count, manturov, qtilde, simplify

P = qtilde(fixtures.braid("virtual-trefoil"))
print(format_presentation(P))
print(format_presentation(simplify(P)))

# %% Hom counts into R3 and Conj(S3)
R3 = fixtures.model("R3")[0]
Q = fixtures.model("conjS3")[0]
print(f"{'link':16s} {'R3':>5s} {'Conj(S3)':>9s} {'one y':>6s}")
for name in fixtures.BRAIDS:
    P = qtilde(fixtures.braid(name))
    print(f"{name:16s} {hom_count(P, R3):5d} {hom_count(P, Q):9d} {hom_count(manturov(P), Q):6d}")
