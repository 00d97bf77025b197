# %% [markdown]
# The two-variable Alexander determinant
#
# The switch S(x, y) = (s y, t x + (1 - s t) y) gives each braid a matrix
# over Z[s^+-1, t^+-1]; det(M - I) vanishes on classical braids and detects
# the virtual trefoil.

# %%
from ybknot import fixtures
from ybknot.braid import relation_rewrites, word
from ybknot.invariant import alexander_matrix, sawollek_det

print(alexander_matrix(word(2, "s1")))
for name in fixtures.BRAIDS:
    print(f"{name:16s}", sawollek_det(fixtures.braid(name)))

# %% Relation rewrites leave the determinant alone
beta = word(3, "s1 s1 r1 s2")
ref = sawollek_det(beta)
print(ref)
print(all(sawollek_det(b) == ref for b in relation_rewrites(beta)))
