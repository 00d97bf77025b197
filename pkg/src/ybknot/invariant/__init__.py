from .alexander import alexander_matrix, letter_matrix, sawollek_det
from .counting import fixed_point_count, hom_count, hom_count_bruteforce, hom_schedule
from .presentation import (
    TRIVIAL_COMPONENT_1,
    Presentation,
    format_presentation,
    manturov,
    parse_presentation,
    presentation_from_braid,
    presentation_from_diagram,
    qtilde,
)
from .simplify import relation_is_trivial, simplify
