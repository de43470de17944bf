from .hypergeometric_rep import (
    eval_hypergeometric,
)
from .orthogonality import (
    gram_matrix,
    verify_orthogonality,
)
from .params import (
    HahnParams,
    check_positivity_regime,
)
from .recurrence import (
    GridPoint,
    RecurrencePair,
    eval_all,
    eval_recurrence,
    grid,
    grid_values,
    jacobi_matrix,
    mu_factorial,
    mu_number,
    recurrence_coefficients,
    recurrence_table,
    value_matrix,
)
from .weights import (
    WeightTable,
    derived_weights,
    printed_weights,
    weights,
)
