from .hypergeometric import (
    hypergeometric_3F2_terminating,
    hypergeometric_terminating,
    termination_index,
)
from .matrix import (
    RMatrix,
    Vector,
    anticommutator,
    commutator,
    has_spectrum,
    poly_from_roots,
    vector_is_zero,
)
from .rational import (
    RationalLike,
    approx,
    format_rational,
    is_nonpositive_integer,
    parity_sign,
    parse_rational_list,
    pochhammer,
    rational_sum,
    sign,
    to_rational,
)
