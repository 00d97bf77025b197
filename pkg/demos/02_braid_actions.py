# %% [markdown]
# Virtual braids acting on tuples and on words
#
# The first letter of a word acts first.  Symbolic images and the table
# action agree, so evaluating an image at a tuple gives the image tuple.

# %%
import numpy as np

from ybknot import fixtures
from ybknot.algebra import format_term
from ybknot.switch import builtin
from ybknot.braid import act_on_tuples, apply_word, tuple_space, verify_representation, word

beta = word(2, "s1 s1 r1")
for g, t in sorted(apply_word(builtin("2q"), beta).items()):
    print(g, "->", format_term(t))

# %% Concrete action of the same word on all 18^2 tuples
S, V = fixtures.switch_pair("2q", "conjS3")
tuples = tuple_space(S.size, 2)
image = act_on_tuples((S, V), beta, tuples)
fixed = (image == tuples).all(axis=1)
print("fixed tuples:", int(fixed.sum()), "of", len(tuples))

# %% Every VB_3 relation holds on the full tuple space
print(verify_representation(S, V, 3).render())

# %% beta followed by its inverse is the identity permutation
back = act_on_tuples((S, V), beta + beta.inverse(), tuples)
print(np.array_equal(back, tuples))
