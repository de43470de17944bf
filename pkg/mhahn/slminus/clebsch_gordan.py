import logging
import math
from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Tuple,
)

from mhahn.algebra import (
    eigenvector,
)
from mhahn.core import (
    RMatrix,
    format_rational,
    has_spectrum,
    sign,
)
from mhahn.errors import (
    MatchViolation,
    OrthogonalityViolation,
    PhaseUndefined,
)
from mhahn.poly import (
    eval_all,
    grid_values,
    mu_factorial,
)
from mhahn.report import (
    VerificationReport,
)

from .correspondence import (
    cg_mapping,
)
from .coupling import (
    CasimirEigenvalue,
    CouplingProblem,
    casimir_spectrum,
    coupled_operators,
    kappa2_eigenvalues,
)


@dataclass(frozen=True)
class CGTable:
    r"""Clebsch-Gordan coefficients as exact squares and separate signs.

    Entry (n, k) belongs to the basis vector
    :math:`e^{(a)}_n \otimes e^{(b)}_{N-n}` and to the coupled vector of
    the k-th eigenvalue of :math:`\kappa_2`.

    Attributes
    ----------
    squares : RMatrix
        :math:`C_{n,k}^2`.
    signs : tuple of tuple of int
        :math:`\mathrm{sign}(C_{n,k}) \in \{-1, 0, 1\}`, rows n.
    eigenvalues : tuple of Fraction
        Eigenvalue of :math:`\kappa_2` of column k.
    labels : tuple of CasimirEigenvalue
        :math:`(\epsilon_{ab}, \mu_{ab})` of column k.
    vectors : RMatrix
        Eigenvectors in the scaled basis :math:`g_n`, columns k.
    factorials : tuple of Fraction
        :math:`[n]_{\mu_a}! [N-n]_{\mu_b}!`, the squared scale of :math:`g_n`.
    """

    squares: RMatrix
    signs: Tuple[Tuple[int, ...], ...]
    eigenvalues: Tuple[Fraction, ...]
    labels: Tuple[CasimirEigenvalue, ...]
    vectors: RMatrix
    factorials: Tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return self.squares.dim

    def approx(self, n: int, k: int) -> float:
        r"""Signed decimal value, for display only."""
        return self.signs[n][k] * math.sqrt(self.squares[n, k])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "squares": [
                [format_rational(vv) for vv in row] for row in self.squares.to_list()
            ],
            "signs": [list(row) for row in self.signs],
            "kappa2_eigenvalues": [format_rational(ee) for ee in self.eigenvalues],
            "labels": [
                {"epsilon_ab": ll.epsilon, "mu_ab": format_rational(ll.mu)}
                for ll in self.labels
            ],
        }


def basis_factorials(cp: CouplingProblem) -> Tuple[Fraction, ...]:
    return tuple(
        mu_factorial(nn, cp.a.mu) * mu_factorial(cp.N - nn, cp.b.mu)
        for nn in range(cp.dim)
    )


def clebsch_gordan(cp: CouplingProblem, strict_phase: bool = False) -> CGTable:
    r"""Clebsch-Gordan coefficients from the exact eigenvectors of :math:`\kappa_2`.

    An eigenvector :math:`w` in the scaled basis has orthonormal components
    :math:`w_n / \sqrt{F_n}` with :math:`F_n = [n]_{\mu_a}! [N-n]_{\mu_b}!`, so

    .. math::
        C_{n,k}^2 = \frac{w_n^2 / F_n}{\sum_m w_m^2 / F_m}

    is exact. The phase makes the n=0 entry positive. If it vanishes, the
    lowest nonzero entry is made positive instead, or
    :class:`PhaseUndefined` is raised when ``strict_phase`` is set.

    Raises
    ------
    DegenerateEigenvalue
        An eigenvalue of :math:`\kappa_2` is not simple.
    """
    ks = coupled_operators(cp, check=False)
    factorials = basis_factorials(cp)
    eigenvalues = kappa2_eigenvalues(cp)
    columns: List[Tuple[Fraction, ...]] = []
    squares: List[List[Fraction]] = []
    signs: List[List[int]] = []
    for kk, ee in enumerate(eigenvalues):
        vec = eigenvector(ks.kappa2, ee)
        if vec[0] == 0:
            lead = next(ii for ii, vv in enumerate(vec) if vv != 0)
            if strict_phase:
                report = VerificationReport("cg phase", cp.to_dict())
                report.record(
                    "C[0,k]!=0", False, detail=f"k={kk}, lowest nonzero n={lead}"
                )
                raise PhaseUndefined(report)
            logging.warning(
                "n=0 entry of CG column %d vanishes for %s, phase fixed at n=%d",
                kk,
                cp.key(),
                lead,
            )
        scaled = [vv * vv / ff for vv, ff in zip(vec, factorials)]
        total = sum(scaled, Fraction(0))
        columns.append(vec)
        squares.append([ss / total for ss in scaled])
        signs.append([sign(vv) for vv in vec])
    return CGTable(
        squares=RMatrix.from_columns(squares),
        signs=tuple(zip(*signs)),
        eigenvalues=tuple(eigenvalues),
        labels=tuple(casimir_spectrum(cp)),
        vectors=RMatrix.from_columns(columns),
        factorials=factorials,
    )


def verify_cg_orthonormality(
    table: CGTable, strict: bool = True
) -> VerificationReport:
    r"""Exact orthonormality of the table.

    Squares sum to one along every column and every row. Distinct columns
    are orthogonal, checked as :math:`\sum_n w_n w'_n / F_n = 0` on the
    scaled eigenvectors.
    """
    report = VerificationReport("cg orthonormality", {"dim": table.dim})
    for kk in range(table.dim):
        report.record_value(
            f"sum_n C[n,{kk}]^2=1", sum(table.squares.column(kk), Fraction(0)), 1
        )
    for nn in range(table.dim):
        report.record_value(
            f"sum_k C[{nn},k]^2=1", sum(table.squares.row(nn), Fraction(0)), 1
        )
    for kk in range(table.dim):
        for ll in range(kk + 1, table.dim):
            cross = sum(
                (
                    aa * bb / ff
                    for aa, bb, ff in zip(
                        table.vectors.column(kk),
                        table.vectors.column(ll),
                        table.factorials,
                    )
                ),
                Fraction(0),
            )
            report.record_value(f"<C[.,{kk}],C[.,{ll}]>=0", cross, 0)
    if strict:
        report.raise_for_failure(OrthogonalityViolation)
    return report


def basis_phases(kappa2: RMatrix) -> Tuple[int, ...]:
    r""":math:`\theta_n = \prod_{m=1}^{n} \mathrm{sign}(\kappa_2[m-1][m])`."""
    ret = [1]
    for mm in range(1, kappa2.dim):
        ret.append(ret[-1] * sign(kappa2[mm - 1, mm]))
    return tuple(ret)


def verify_cg_polynomial_match(
    cp: CouplingProblem,
    table: Optional[CGTable] = None,
    strict: bool = True,
) -> VerificationReport:
    r"""Match the Clebsch-Gordan table with dual -1 Hahn polynomials.

    With the mapped parameters, for :math:`\epsilon_a = \epsilon_b = 1`:

    - :math:`\{2\,\mathrm{spec}(\kappa_2)\} = \{z_k\}`;
    - :math:`z_k = x_{N-k}` for N even and :math:`z_k = x_k` for N odd;
    - :math:`C_{n,k}^2 = \tilde\omega_k Q_n(z_k)^2 / v_n`;
    - :math:`\mathrm{sign}(C_{n,k}) = \theta_n \, \mathrm{sign}(Q_n(z_k))`.

    Raises
    ------
    RegimeError
        The module signs are not both +1.
    MatchViolation
        With ``strict``, on the first mismatching entry.
    """
    mapping = cg_mapping(cp)
    if table is None:
        table = clebsch_gordan(cp)
    p = mapping.params
    ks = coupled_operators(cp, check=False)
    report = VerificationReport(
        "cg polynomial match", {**cp.to_dict(), "mapped": p.to_dict()}
    )
    report.record("2 spec(k2)={z_k}", has_spectrum(2 * ks.kappa2, list(mapping.z)))
    grid = grid_values(p)
    expected_z = list(reversed(grid)) if p.even else grid
    mismatch = [kk for kk in range(p.dim) if mapping.z[kk] != expected_z[kk]]
    report.record(
        "z_k=x_(N-k)" if p.even else "z_k=x_k",
        len(mismatch) == 0,
        detail="" if len(mismatch) == 0 else f"k={mismatch[0]}",
    )
    theta = basis_phases(ks.kappa2)
    for kk, zz in enumerate(mapping.z):
        values = eval_all(p, zz)
        for nn, qq in enumerate(values):
            report.record_value(
                f"C^2[{nn},{kk}]",
                table.squares[nn, kk],
                mapping.omega_tilde[kk] * qq * qq / mapping.v[nn],
                detail=f"n={nn} k={kk}",
            )
            expected_sign = theta[nn] * sign(qq)
            report.record(
                f"sign[{nn},{kk}]",
                table.signs[nn][kk] == expected_sign,
                detail=f"n={nn} k={kk} expected {expected_sign}",
            )
    if strict:
        report.raise_for_failure(MatchViolation)
    return report
