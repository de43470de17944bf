from .generators import (
    GeneratorSet,
    StructureConstants,
    structure_constants,
)
from .realization import (
    build_realization,
)
from .relations import (
    casimir_H,
    record_relations,
    relation_terms,
    verify_casimir,
    verify_relations,
)
from .tilde import (
    TildeGenerators,
    tilde_casimir,
    tilde_presentation,
    verify_symmetrization,
    verify_tilde,
)
from .transition import (
    TransitionMatrix,
    eigenvector,
    k2_eigenbasis,
    transition_matrix,
    verify_pentadiagonality,
)
