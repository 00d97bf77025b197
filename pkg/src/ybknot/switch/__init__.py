from .builtins import BUILTINS, builtin
from .finite import (
    BIQUANDLE,
    BIRACK,
    NEITHER,
    FiniteSwitch,
    UpDownOps,
    check_biquandle,
    check_multiswitch_shape,
    check_nondegenerate,
    check_switch,
    check_virtual_pair,
    check_yang_baxter,
    from_function,
    identity_switch,
    max_carrier,
    mutate,
    product_switch,
    twist,
    updown,
)
from .linear import LinearSwitchDef, alexander_def, interpret_linear
from .symbolic import SwitchDef, SymbolicMap, interpret, interpret_pair, twist_map
