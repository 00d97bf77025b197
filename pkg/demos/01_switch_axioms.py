# %% [markdown]
# Checking switches on finite models
#
# A switch is tabulated on a finite carrier and every axiom is checked over
# all pairs or triples at once.  Failing checks carry a witness.

# %%
from ybknot import fixtures
from ybknot.switch import (
    builtin, check_biquandle, check_multiswitch_shape, check_virtual_pair, interpret, mutate,
)

R3 = fixtures.model("R3")
S = interpret(builtin("quandle"), R3)
print(S.table[:, :, 1])          # a*b = 2b - a (mod 3) shows up as the right output
print(check_biquandle(S).render())

# %% Artin on S3 and the twist are biquandles too
for name, model in [("artin", "S3"), ("twist", "R3")]:
    rep = check_biquandle(interpret(builtin(name), fixtures.model(model)))
    print(name, rep.extra["classification"])

# %% The 2-component switch on Conj(S3) x {e, r, r^2}
S2, V2 = fixtures.switch_pair("2q", "conjS3")
print(S2.carriers, S2.size, "points")
print(check_virtual_pair(S2, V2).render())
print(check_multiswitch_shape(V2).render())

# %% A single corrupted entry is caught, with a witness triple
bad = mutate(S, 0, 1)
rep = check_biquandle(bad)
print(rep.first_failure().line())
