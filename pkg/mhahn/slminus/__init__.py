from .clebsch_gordan import (
    CGTable,
    basis_factorials,
    basis_phases,
    clebsch_gordan,
    verify_cg_orthonormality,
    verify_cg_polynomial_match,
)
from .coproduct import (
    Coproduct,
    coproduct_casimir,
    coproduct_operators,
    highest_coupled_vector,
    verify_coproduct_casimir,
    verify_highest_vector,
)
from .correspondence import (
    CGMapping,
    cg_mapping,
    verify_kappa_is_H,
)
from .coupling import (
    CasimirEigenvalue,
    CouplingProblem,
    KappaSet,
    casimir_spectrum,
    coupled_casimir,
    coupled_operators,
    kappa2_eigenvalues,
    kappa_casimir,
    verify_casimir_spectrum,
    verify_kappa_relations,
)
from .module import (
    ModuleLabel,
    module_action,
    verify_module_relations,
    verify_parabose,
)
