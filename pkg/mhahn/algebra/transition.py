import logging
from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
from typing import (
    Tuple,
)

from mhahn.core import (
    RMatrix,
    has_spectrum,
)
from mhahn.errors import (
    BandwidthViolation,
    DegenerateEigenvalue,
    SingularMatrixError,
    SingularTransition,
)
from mhahn.poly import (
    HahnParams,
    grid_values,
    value_matrix,
    weights,
)
from mhahn.report import (
    VerificationReport,
)

from .realization import (
    build_realization,
)


@dataclass(frozen=True)
class TransitionMatrix:
    r"""The matrix :math:`S_{ij} = Q_i(x_j)` and its exact inverse.

    ``report`` holds the invertibility, diagonalization and
    orthogonality checks done on construction.
    """

    S: RMatrix
    inverse: RMatrix
    report: VerificationReport


def transition_matrix(p: HahnParams, strict: bool = True) -> TransitionMatrix:
    r"""Build S and check that it diagonalizes :math:`K_2`.

    The columns of S are the eigenvectors of :math:`K_2` in the
    realization, normalized to first entry :math:`Q_0 = 1`:

    .. math::
        K_2 S = S \,\mathrm{diag}(x_j/2), \qquad
        S^{-1} = \mathrm{diag}(\omega) S^T \mathrm{diag}(1/v).

    Raises
    ------
    SingularTransition
        S is singular or a check fails, with ``strict``.
    """
    report = VerificationReport("transition", p.to_dict())
    S = value_matrix(p)
    try:
        inverse = S.inverse()
    except SingularMatrixError:
        report.record("S invertible", False, detail="Gaussian elimination hit no pivot")
        raise SingularTransition(report)
    report.record("S invertible", True)

    g = build_realization(p)
    half_grid = RMatrix.diag([xx / 2 for xx in grid_values(p)])
    report.record_equal("K2 S=S diag(x/2)", g.K2 @ S, S @ half_grid)
    table = weights(p)
    report.record_equal(
        "S^-1=diag(w) S^T diag(1/v)",
        inverse,
        RMatrix.diag(table.omega) @ S.T @ RMatrix.diag([1 / vv for vv in table.v]),
    )
    if strict:
        report.raise_for_failure(SingularTransition)
    return TransitionMatrix(S, inverse, report)


def eigenvector(mat: RMatrix, value: Fraction) -> Tuple[Fraction, ...]:
    r"""The eigenvector of a simple eigenvalue, scaled to first nonzero entry 1."""
    kernel = (mat - value).nullspace()
    if len(kernel) != 1:
        report = VerificationReport("eigenvector", {"eigenvalue": str(value)})
        report.record(
            "simple eigenvalue",
            False,
            detail=f"eigenspace of dimension {len(kernel)}",
        )
        raise DegenerateEigenvalue(report)
    vec = kernel[0]
    lead = next(vv for vv in vec if vv != 0)
    return tuple(vv / lead for vv in vec)


def k2_eigenbasis(p: HahnParams) -> RMatrix:
    r"""Eigenvectors of :math:`K_2` as columns, ordered by grid index s.

    Each column has first entry 1, so the result equals
    :attr:`TransitionMatrix.S`.
    """
    g = build_realization(p)
    return RMatrix.from_columns(
        [eigenvector(g.K2, xx / 2) for xx in grid_values(p)]
    )


def verify_pentadiagonality(p: HahnParams, strict: bool = True) -> VerificationReport:
    r"""Conjugate :math:`K_1` into the eigenbasis of :math:`K_2`.

    The conjugated :math:`K_1` must have bandwidth at most 2 and spectrum
    :math:`\{0, \ldots, N\}`; the conjugated :math:`K_2` must be diagonal.

    Raises
    ------
    BandwidthViolation
        With ``strict``, if one of the checks fails.
    """
    report = VerificationReport("pentadiagonality", p.to_dict())
    g = build_realization(p)
    basis = k2_eigenbasis(p)
    inverse = basis.inverse()
    K1 = inverse @ g.K1 @ basis
    K2 = inverse @ g.K2 @ basis
    bandwidth = K1.bandwidth()
    report.record("bandwidth(K1)<=2", bandwidth <= 2, detail=f"bandwidth={bandwidth}")
    report.record(
        "spec(K1)={0..N}", has_spectrum(K1, list(range(p.dim))), detail=f"N={p.N}"
    )
    report.record("K2 diagonal", K2.is_diagonal())
    logging.debug("pentadiagonality %s: %s", p.key(), report.summary())
    if strict:
        report.raise_for_failure(BandwidthViolation)
    return report
