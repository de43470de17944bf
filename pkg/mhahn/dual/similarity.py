from fractions import (
    Fraction,
)
from typing import (
    List,
    Optional,
    Tuple,
)

from mhahn.algebra import (
    build_realization,
    k2_eigenbasis,
)
from mhahn.core import (
    RMatrix,
)
from mhahn.errors import (
    NoIntertwiner,
    SingularMatrixError,
)
from mhahn.poly import (
    HahnParams,
)
from mhahn.report import (
    VerificationReport,
)

from .free_params import (
    FreeParams,
)
from .printed import (
    printed_anchor_gamma,
    printed_anchor_u,
)
from .rep import (
    DualRep,
    n_blocks,
)

Vector = Tuple[Fraction, ...]


def intertwiner_system(p: HahnParams, d: DualRep) -> RMatrix:
    r"""Linear system for the diagonal part c of an intertwiner :math:`W \mathrm{diag}(c)`.

    With :math:`\bar X = W^{-1} X W` the realization conjugated into the
    eigenbasis of :math:`K_2`, every intertwiner of the two :math:`K_2`
    is :math:`W \mathrm{diag}(c)`, and the remaining equations are
    :math:`\bar X_{ij} c_j - c_i (d.X)_{ij} = 0` for :math:`X = K_1, P`.
    """
    g = build_realization(p)
    basis = k2_eigenbasis(p)
    inverse = basis.inverse()
    dim = p.dim
    rows: List[List[Fraction]] = []
    for primal, dual in ((g.K1, d.K1), (g.P, d.P)):
        conj = inverse @ primal @ basis
        for ii in range(dim):
            for jj in range(dim):
                row = [Fraction(0)] * dim
                row[jj] += conj[ii, jj]
                row[ii] -= dual[ii, jj]
                if any(vv != 0 for vv in row):
                    rows.append(row)
    if len(rows) == 0:
        return RMatrix.zeros(1, dim)
    return RMatrix(rows)


def intertwiner_space(p: HahnParams, d: DualRep) -> List[Vector]:
    r"""Basis of the solutions c; one-dimensional for irreducible representations."""
    return intertwiner_system(p, d).nullspace()


def _solve_similarity(
    p: HahnParams, d: DualRep
) -> Tuple[Optional[RMatrix], VerificationReport]:
    report = VerificationReport(
        "similarity to realization", {**p.to_dict(), d.fp.name: d.fp.to_list()}
    )
    basis = k2_eigenbasis(p)
    inverse = basis.inverse()
    g = build_realization(p)
    report.record_equal("d.K2=W^-1 K2 W", d.K2, inverse @ g.K2 @ basis)
    space = intertwiner_space(p, d)
    report.record(
        "dim intertwiner space=1", len(space) == 1, detail=f"dim={len(space)}"
    )
    if len(space) != 1:
        return None, report
    cc = space[0]
    lead = next(vv for vv in cc if vv != 0)
    M = basis @ RMatrix.diag([vv / lead for vv in cc])
    try:
        Minv = M.inverse()
    except SingularMatrixError:
        report.record("M invertible", False)
        return None, report
    report.record("M invertible", True)
    for name, primal, dual in (
        ("K1", g.K1, d.K1),
        ("K2", g.K2, d.K2),
        ("P", g.P, d.P),
    ):
        report.record_equal(f"M^-1 {name} M=d.{name}", Minv @ primal @ M, dual)
    return M, report


def verify_similarity(
    p: HahnParams, d: DualRep, strict: bool = True
) -> VerificationReport:
    r"""Find the intertwiner with the realization and check it.

    Raises
    ------
    NoIntertwiner
        With ``strict``, if the intertwiner space is not one-dimensional or
        the intertwiner fails to conjugate one of the generators.
    """
    report = _solve_similarity(p, d)[1]
    if strict:
        report.raise_for_failure(NoIntertwiner)
    return report


def similarity_to_primal(p: HahnParams, d: DualRep) -> RMatrix:
    r"""The exact M with :math:`M^{-1} X M = d.X` for every generator X.

    M is the eigenbasis of :math:`K_2` composed with the diagonal gauge
    solved from :func:`intertwiner_system`, normalized to :math:`c_0 = 1`.

    Raises
    ------
    NoIntertwiner
        The representations are not equivalent.
    """
    M, report = _solve_similarity(p, d)
    report.raise_for_failure(NoIntertwiner)
    return M


def unit_gauge(
    p: HahnParams, K1: RMatrix, P: RMatrix, report: VerificationReport
) -> List[Fraction]:
    r"""Diagonal gauge that brings the anchors to their closed-form values.

    The anchors :math:`P[2q][2q+1]` and :math:`K_1[2q-2][2q]` form a
    spanning tree of the basis, so the gauge is unique once :math:`g_0 = 1`.

    Raises
    ------
    NoIntertwiner
        An anchor of the conjugated realization vanishes.
    """
    dim = p.dim
    ret: List[Fraction] = [Fraction(0)] * dim
    ret[0] = Fraction(1)
    for qq in range(n_blocks(dim)):
        ii = 2 * qq
        if qq > 0:
            anchor = K1[ii - 2, ii]
            report.record(f"K1[{ii - 2},{ii}]!=0", anchor != 0)
            if anchor == 0:
                raise NoIntertwiner(report)
            ret[ii] = ret[ii - 2] * printed_anchor_u(p, qq) / anchor
        if ii + 1 < dim:
            anchor = P[ii, ii + 1]
            report.record(f"P[{ii},{ii + 1}]!=0", anchor != 0)
            if anchor == 0:
                raise NoIntertwiner(report)
            ret[ii + 1] = ret[ii] * printed_anchor_gamma(p, qq) / anchor
    return ret


def dual_intertwiner(p: HahnParams, fp: FreeParams) -> RMatrix:
    r"""The intertwiner :math:`M = W G T` built from the realization alone.

    W holds the eigenvectors of :math:`K_2` (first entry 1), G the unit
    gauge of the realization conjugated by W, and
    :math:`T = \mathrm{diag}(fp)`. :math:`M^{-1} X M` for the generators X
    of the realization is the dual representation in the gauge fp.
    """
    report = VerificationReport(
        "dual intertwiner", {**p.to_dict(), fp.name: fp.to_list()}
    )
    g = build_realization(p)
    basis = k2_eigenbasis(p)
    inverse = basis.inverse()
    gauge = unit_gauge(p, inverse @ g.K1 @ basis, inverse @ g.P @ basis, report)
    return basis @ RMatrix.diag(gauge) @ fp.matrix()
