from mhahn.core import (
    RMatrix,
    parity_sign,
)
from mhahn.poly import (
    HahnParams,
    jacobi_matrix,
)

from .generators import (
    GeneratorSet,
    structure_constants,
)


def build_realization(p: HahnParams) -> GeneratorSet:
    r"""The realization on the basis :math:`\psi_0, \ldots, \psi_N`.

    :math:`K_1 = \mathrm{diag}(0, 1, \ldots, N)`,
    :math:`P = \mathrm{diag}(1, -1, \ldots, (-1)^N)` and :math:`K_2 = J/2`
    with :math:`J` the Jacobi matrix of the recurrence, so that
    :math:`2K_2\psi_n = \psi_{n-1} + b_n\psi_n + u_{n+1}\psi_{n+1}` and the
    spectrum of :math:`2K_2` is the grid.
    """
    K1 = RMatrix.diag(list(range(p.dim)))
    P = RMatrix.diag([parity_sign(nn) for nn in range(p.dim)])
    K2 = jacobi_matrix(p) / 2
    return GeneratorSet(K1, K2, P, structure_constants(p))
