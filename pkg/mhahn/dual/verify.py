import logging

from mhahn.algebra import (
    casimir_H,
    record_relations,
)
from mhahn.core import (
    RMatrix,
    has_spectrum,
)
from mhahn.errors import (
    BandwidthViolation,
    RelationViolation,
)
from mhahn.report import (
    VerificationReport,
)

from .rep import (
    DualRep,
    block_indices,
    n_blocks,
)


def _block_structure(P: RMatrix) -> bool:
    dim = P.dim
    for ii in range(dim):
        for jj in range(dim):
            if ii // 2 != jj // 2 and P[ii, jj] != 0:
                return False
    return True


def verify_dual_rep(d: DualRep, strict: bool = True) -> VerificationReport:
    r"""Exact checks of a dual representation.

    - the seven defining relations and :math:`Q = q I` with the same
      :math:`q` as the realization;
    - :math:`\mathrm{spec}(K_1) = \{0, \ldots, N\}` and bandwidth at most 2;
    - :math:`K_2 = \mathrm{diag}(\lambda)`;
    - P block diagonal with :math:`\Gamma_p^2 = I`, and a trailing 1 for
      even N.

    Raises
    ------
    BandwidthViolation
        With ``strict``, if the bandwidth check is the first failure.
    RelationViolation
        With ``strict``, on any other failure.
    """
    p = d.params
    report = VerificationReport(
        "dual representation",
        {**p.to_dict(), "source": d.source, d.fp.name: d.fp.to_list()},
    )
    g = d.generators()
    bandwidth = d.K1.bandwidth()
    report.record("bandwidth(K1)<=2", bandwidth <= 2, detail=f"bandwidth={bandwidth}")
    record_relations(report, g)
    report.record_equal("Q=q*I", casimir_H(g), g.constants.casimir_value)
    report.record(
        "spec(K1)={0..N}", has_spectrum(d.K1, list(range(d.dim))), detail=f"N={p.N}"
    )
    report.record_equal("K2=diag(lambda)", d.K2, RMatrix.diag(d.lambdas))
    report.record("P block diagonal", _block_structure(d.P))
    for bb in range(n_blocks(d.dim)):
        idx = block_indices(d.dim, bb)
        gamma = d.P.block(idx, idx)
        report.record_equal(f"Gamma_{bb}^2=1", gamma @ gamma, 1)
    if p.even:
        report.record_value("P[N,N]=1", d.P[p.N, p.N], 1)
    logging.debug("dual rep %s (%s): %s", p.key(), d.source, report.summary())
    if strict and not report.passed():
        first = report.first_failure()
        if first.name == "bandwidth(K1)<=2":
            raise BandwidthViolation(report)
        raise RelationViolation(report)
    return report
