import logging
from typing import (
    Optional,
)

from mhahn.core import (
    RMatrix,
)
from mhahn.errors import (
    OrthogonalityViolation,
)
from mhahn.report import (
    VerificationReport,
)

from .params import (
    HahnParams,
)
from .recurrence import (
    recurrence_table,
    value_matrix,
)
from .weights import (
    WeightTable,
    weights,
)


def gram_matrix(p: HahnParams, table: Optional[WeightTable] = None) -> RMatrix:
    r"""Gram matrix :math:`G_{nm} = \sum_s \omega_s Q_n(x_s) Q_m(x_s)`."""
    if table is None:
        table = weights(p)
    values = value_matrix(p)
    return values @ RMatrix.diag(table.omega) @ values.T


def verify_orthogonality(
    p: HahnParams,
    table: Optional[WeightTable] = None,
    strict: bool = True,
) -> VerificationReport:
    r"""Verify the discrete orthogonality relation exactly.

    .. math::
        \sum_{s=0}^{N} \omega_s Q_n(x_s) Q_m(x_s) = v_n \delta_{nm}

    One check is recorded per Gram entry, plus the truncation and
    positivity conditions of the recurrence and of the weights.

    Parameters
    ----------
    p : HahnParams
        The parameters.
    table : WeightTable, optional
        The weights to test, by default :func:`weights`.
    strict : bool
        Raise :class:`OrthogonalityViolation` on failure.
    """
    if table is None:
        table = weights(p)
    report = VerificationReport("orthogonality", p.to_dict())
    coeffs = recurrence_table(p)
    report.record_value("u_0=0", coeffs[0].u, 0)
    report.record_value(f"u_{p.N + 1}=0", coeffs[p.N + 1].u, 0)
    report.record(
        "u_n>0",
        all(cc.u > 0 for cc in coeffs[1 : p.N + 1]),
        detail="1<=n<=N",
    )
    report.record("weights>0", table.is_positive(), detail=table.source)

    gram = gram_matrix(p, table)
    for nn in range(p.dim):
        for mm in range(p.dim):
            expected = table.v[nn] if nn == mm else 0
            report.record_value(
                f"gram[{nn},{mm}]", gram[nn, mm], expected, detail=f"n={nn} m={mm}"
            )
    logging.debug("orthogonality %s: %s", p.key(), report.summary())
    if strict:
        report.raise_for_failure(OrthogonalityViolation)
    return report
