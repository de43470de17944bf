import logging
from fractions import (
    Fraction,
)
from math import (
    isqrt,
)
from typing import (
    Callable,
    List,
    Optional,
    Sequence,
    Tuple,
)

from mhahn.algebra import (
    record_relations,
    structure_constants,
)
from mhahn.core import (
    RMatrix,
    Vector,
    commutator,
    has_spectrum,
)
from mhahn.errors import (
    InconsistentSystem,
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
    block_indices,
    dual_spectrum,
    n_blocks,
)

Entry = Tuple[int, int]
LinearMap = Callable[[RMatrix], RMatrix]


def band_entries(dim: int, width: int = 2) -> List[Entry]:
    r"""Positions :math:`(i, j)` with :math:`|i - j| \le` width, row by row."""
    return [
        (ii, jj) for ii in range(dim) for jj in range(dim) if abs(ii - jj) <= width
    ]


def _place(dim: int, entries: Sequence[Entry], values: Sequence[Fraction]) -> RMatrix:
    ret = RMatrix.zeros(dim).array()
    for ee, vv in zip(entries, values):
        ret[ee] = vv
    return RMatrix(ret)


def _double_commutator(X: RMatrix, Y: RMatrix, K2: RMatrix) -> RMatrix:
    return commutator(X, commutator(Y, K2))


def _solve_rows(
    rows: List[List[Fraction]], rhs: List[Fraction], nunknowns: int
) -> Optional[Tuple[Vector, List[Vector]]]:
    if len(rows) == 0:
        return RMatrix([], shape=(0, nunknowns)).solve([])
    return RMatrix(rows).solve(rhs)


def solve_involution(
    p: HahnParams,
    lambdas: Sequence[Fraction],
    fp: FreeParams,
    report: VerificationReport,
) -> RMatrix:
    r"""Solve :math:`\{K_2, P\} = -P - 2\nu` and :math:`\Gamma_p^2 = I` for P.

    With :math:`K_2 = \mathrm{diag}(\lambda)` the first relation reads
    :math:`(\lambda_i + \lambda_j + 1) P_{ij} = -2\nu \delta_{ij}`. It fixes
    the diagonal and forces zeros outside the blocks :math:`\{2p, 2p+1\}`,
    where :math:`\lambda_{2p} + \lambda_{2p+1} = -1` leaves the upper entry
    free. That entry is the block's gauge: it takes the closed-form unit-gauge
    value scaled by :math:`fp_{2p+1}/fp_{2p}`. The lower entry follows from
    :math:`\Gamma_p^2 = I`.

    Raises
    ------
    InconsistentSystem
        No block-diagonal solution with 2x2 blocks exists.
    """
    nu = structure_constants(p).nu
    dim = len(lambdas)
    ret = RMatrix.zeros(dim).array()
    for ii in range(dim):
        den = 2 * lambdas[ii] + 1
        report.record(f"2lambda_{ii}+1!=0", den != 0)
        if den == 0:
            raise InconsistentSystem(report)
        ret[ii, ii] = -2 * nu / den
    for qq in range(n_blocks(dim)):
        idx = block_indices(dim, qq)
        if len(idx) < 2:
            continue
        ii, jj = idx
        paired = lambdas[ii] + lambdas[jj] == -1
        report.record(f"lambda_{ii}+lambda_{jj}=-1", paired)
        upper = printed_anchor_gamma(p, qq) * fp[jj] / fp[ii]
        report.record(f"P[{ii},{jj}]!=0", upper != 0)
        if not paired or upper == 0:
            raise InconsistentSystem(report)
        ret[ii, jj] = upper
        ret[jj, ii] = (1 - ret[ii, ii] * ret[ii, ii]) / upper
    return RMatrix(ret)


def linear_relations(
    p: HahnParams, K2: RMatrix, P: RMatrix
) -> List[Tuple[str, LinearMap, RMatrix]]:
    r"""The relations that are linear in :math:`K_1` once :math:`K_2, P` are known.

    They are :math:`[K_1, P] = 0` and, with :math:`K_3 = [K_1, K_2]`,
    :math:`[K_3, K_2] - 4K_1 - 4\nu K_1 P + 2\nu K_3 P = \sigma P + \rho`,
    given as (name, map, right-hand side).
    """
    sc = structure_constants(p)

    def third(X: RMatrix) -> RMatrix:
        K3 = commutator(X, K2)
        return commutator(K3, K2) - 4 * X - 4 * sc.nu * (X @ P) + 2 * sc.nu * (K3 @ P)

    return [
        ("[K1,P]=0", lambda X: commutator(X, P), RMatrix.zeros(K2.dim)),
        ("[K3,K2]=4K1+4nuK1P-2nuK3P+sigmaP+rho", third, sc.sigma * P + sc.rho),
    ]


def _rational_roots(aa: Fraction, bb: Fraction, cc: Fraction) -> List[Fraction]:
    if aa == 0:
        return [] if bb == 0 else [-cc / bb]
    disc = bb * bb - 4 * aa * cc
    if disc < 0:
        return []
    num, den = isqrt(disc.numerator), isqrt(disc.denominator)
    if num * num != disc.numerator or den * den != disc.denominator:
        return []
    root = Fraction(num, den)
    return sorted({(-bb - root) / (2 * aa), (-bb + root) / (2 * aa)})


def _fix_line(
    p: HahnParams, K2: RMatrix, P: RMatrix, Y0: RMatrix, V: RMatrix
) -> List[RMatrix]:
    r"""Points :math:`Y_0 + tV` solving the quadratic relation, with spectrum 0..N."""
    sc = structure_constants(p)
    target = K2 + sc.nu * P + Fraction(1, 2)
    const = _double_commutator(Y0, Y0, K2) - target
    linear = _double_commutator(Y0, V, K2) + _double_commutator(V, Y0, K2)
    quadratic = _double_commutator(V, V, K2)
    dim = K2.dim
    entry = next(
        (
            (ii, jj)
            for ii in range(dim)
            for jj in range(dim)
            if quadratic[ii, jj] != 0 or linear[ii, jj] != 0
        ),
        None,
    )
    if entry is None:
        return []
    ret = []
    for tt in _rational_roots(quadratic[entry], linear[entry], const[entry]):
        K1 = Y0 + tt * V
        if _double_commutator(K1, K1, K2) != target:
            continue
        if has_spectrum(K1, list(range(dim))):
            ret.append(K1)
    return ret


def _fix_remaining(
    p: HahnParams,
    K2: RMatrix,
    P: RMatrix,
    X0: RMatrix,
    directions: List[RMatrix],
    report: VerificationReport,
) -> RMatrix:
    r"""Fix :math:`K_1 = X_0 + \sum_a c_a N_a` with :math:`[K_1, [K_1, K_2]] = K_2 + \nu P + 1/2`.

    The entries where every :math:`[N_a, [N_b, K_2]]` vanishes give equations
    linear in c. A single direction left over after them is fixed from the
    quadratic equation in its coefficient, keeping the rational root for
    which :math:`K_1` has spectrum :math:`\{0, \dots, N\}`.
    """
    nu = structure_constants(p).nu
    dim = K2.dim
    target = K2 + nu * P + Fraction(1, 2) - _double_commutator(X0, X0, K2)
    linear = [
        _double_commutator(X0, NN, K2) + _double_commutator(NN, X0, K2)
        for NN in directions
    ]
    quadratic = [
        _double_commutator(aa, bb, K2) for aa in directions for bb in directions
    ]
    rows, rhs = [], []
    for ii in range(dim):
        for jj in range(dim):
            if any(qq[ii, jj] != 0 for qq in quadratic):
                continue
            row = [ll[ii, jj] for ll in linear]
            if any(vv != 0 for vv in row) or target[ii, jj] != 0:
                rows.append(row)
                rhs.append(target[ii, jj])
    sol = _solve_rows(rows, rhs, len(directions))
    name = "[K1,K3]=K2+nuP+1/2 fixes the remaining entries"
    detail = f"{len(directions)} unknowns, {len(rows)} linear equations"
    if sol is None or len(sol[1]) > 1:
        report.record(name, False, detail=detail)
        raise InconsistentSystem(report)
    coeffs, rest = sol
    ret = X0
    for cc, NN in zip(coeffs, directions):
        ret = ret + cc * NN
    if len(rest) == 1:
        V = RMatrix.zeros(dim)
        for cc, NN in zip(rest[0], directions):
            V = V + cc * NN
        found = _fix_line(p, K2, P, ret, V)
        report.record(
            name, len(found) == 1, detail=f"{detail}, {len(found)} rational roots"
        )
        if len(found) != 1:
            raise InconsistentSystem(report)
        return found[0]
    report.record(name, True, detail=detail)
    return ret


def solve_k1(
    p: HahnParams,
    K2: RMatrix,
    P: RMatrix,
    fp: FreeParams,
    report: VerificationReport,
) -> RMatrix:
    r"""Solve for the entries of :math:`K_1` of bandwidth at most 2.

    The unknowns are the band entries. :func:`linear_relations` together with
    the gauge anchors :math:`K_1[2q-2][2q]` (closed-form unit-gauge value times
    :math:`fp_{2q}/fp_{2q-2}`) form a linear system. The directions it leaves
    free are fixed by :math:`[K_1, [K_1, K_2]] = K_2 + \nu P + 1/2`.

    Raises
    ------
    InconsistentSystem
        The linear system has no solution, or the solution is not unique.
    """
    dim = K2.dim
    unknowns = band_entries(dim)
    index = {ee: nn for nn, ee in enumerate(unknowns)}
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for _, func, target in linear_relations(p, K2, P):
        images = [func(_place(dim, [ee], [Fraction(1)])) for ee in unknowns]
        for ii in range(dim):
            for jj in range(dim):
                row = [img[ii, jj] for img in images]
                if any(vv != 0 for vv in row) or target[ii, jj] != 0:
                    rows.append(row)
                    rhs.append(target[ii, jj])
    for qq in range(1, n_blocks(dim)):
        ii = 2 * qq
        row = [Fraction(0)] * len(unknowns)
        row[index[(ii - 2, ii)]] = Fraction(1)
        rows.append(row)
        rhs.append(printed_anchor_u(p, qq) * fp[ii] / fp[ii - 2])
    sol = _solve_rows(rows, rhs, len(unknowns))
    report.record(
        "K1 linear system solvable",
        sol is not None,
        detail=f"{len(unknowns)} unknowns, {len(rows)} equations",
    )
    if sol is None:
        raise InconsistentSystem(report)
    particular, null = sol
    X0 = _place(dim, unknowns, particular)
    if len(null) == 0:
        return X0
    directions = [_place(dim, unknowns, vv) for vv in null]
    return _fix_remaining(p, K2, P, X0, directions, report)


def derive_dual_rep(p: HahnParams, fp: FreeParams) -> DualRep:
    r"""Solve the dual representation from the defining relations.

    :math:`K_2 = \mathrm{diag}(\lambda_s)` is fixed first. P is solved by
    :func:`solve_involution` and :math:`K_1` by :func:`solve_k1`, with the
    gauge of every block set by the free parameters. Nothing is taken from
    the realization. The result is checked against all seven relations and
    the bandwidth before it is returned.

    Parameters
    ----------
    p : HahnParams
        The parameters.
    fp : FreeParams
        N+1 nonzero free parameters.

    Returns
    -------
    DualRep
        K2 diagonal, P block diagonal and K1 of bandwidth at most 2.

    Raises
    ------
    InconsistentSystem
        The linear systems have no solution of the expected shape, or the
        solution violates one of the relations.
    """
    if fp.N != p.N:
        raise ValueError(f"free parameters are for N={fp.N}, parameters have N={p.N}")
    report = VerificationReport(
        "dual derivation", {**p.to_dict(), fp.name: fp.to_list()}
    )
    lambdas = dual_spectrum(p)
    K2 = RMatrix.diag(lambdas)
    P = solve_involution(p, lambdas, fp, report)
    K1 = solve_k1(p, K2, P, fp, report)
    ret = DualRep(K1=K1, K2=K2, P=P, params=p, fp=fp, lambdas=lambdas)
    record_relations(report, ret.generators())
    bandwidth = ret.K1.bandwidth()
    report.record("bandwidth(K1)<=2", bandwidth <= 2, detail=f"bandwidth={bandwidth}")
    logging.debug("dual derivation %s: %s", p.key(), report.summary())
    report.raise_for_failure(InconsistentSystem)
    return ret
