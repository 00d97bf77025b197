from .free import conjugation_word, free_group_reduce, free_quandle_equal, group_word
from .models import (
    FiniteGroup,
    FiniteQuandle,
    TrivialSubset,
    check_group,
    check_quandle,
    compile_term,
    conj_quandle,
    cyclic_group,
    dihedral_quandle,
    eval_term,
    group_from_permutations,
    quandle_op_inverse,
    symmetric_group_s3,
    trivial_quandle,
)
from .terms import (
    GROUP,
    ONE,
    QUANDLE,
    Generator,
    Inv,
    Mul,
    One,
    QOp,
    Term,
    depth,
    format_term,
    inv,
    leaves,
    mul,
    parse_term,
    signature,
    size,
    star,
    star_inv,
    substitute,
    x,
    y,
)
