from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
from typing import (
    Any,
    Dict,
    Tuple,
)

from mhahn.algebra import (
    GeneratorSet,
    record_relations,
    structure_constants,
)
from mhahn.core import (
    format_rational,
)
from mhahn.errors import (
    MatchViolation,
    RegimeError,
)
from mhahn.poly import (
    HahnParams,
    weights,
)
from mhahn.report import (
    VerificationReport,
)

from .coupling import (
    CouplingProblem,
    coupled_operators,
    kappa2_eigenvalues,
)


@dataclass(frozen=True)
class CGMapping:
    r"""Dual -1 Hahn data attached to a coupling problem.

    ``z`` holds twice the eigenvalues of :math:`\kappa_2` and
    ``omega_tilde`` the weights :math:`\tilde\omega_k`, both indexed by k.
    """

    params: HahnParams
    z: Tuple[Fraction, ...]
    omega_tilde: Tuple[Fraction, ...]
    v: Tuple[Fraction, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "z": [format_rational(zz) for zz in self.z],
            "omega_tilde": [format_rational(ww) for ww in self.omega_tilde],
            "v": [format_rational(vv) for vv in self.v],
        }


def _require_positive_signs(cp: CouplingProblem):
    if cp.a.epsilon != 1 or cp.b.epsilon != 1:
        raise RegimeError(
            "the polynomial identification needs eps_a = eps_b = 1, "
            f"got eps_a={cp.a.epsilon}, eps_b={cp.b.epsilon}"
        )


def cg_mapping(cp: CouplingProblem) -> CGMapping:
    r"""Map :math:`(\mu_a, \mu_b, N)` to :math:`(\alpha, \beta, N)`.

    N even: :math:`\alpha = 2\mu_b + N + 1`, :math:`\beta = 2\mu_a + N + 1`,
    :math:`\tilde\omega_k = \omega_{N-k}`.
    N odd: :math:`\alpha = 2\mu_a`, :math:`\beta = 2\mu_b`,
    :math:`\tilde\omega_k = \omega_k`.
    """
    _require_positive_signs(cp)
    N = cp.N
    if N % 2 == 0:
        p = HahnParams(2 * cp.b.mu + N + 1, 2 * cp.a.mu + N + 1, N)
    else:
        p = HahnParams(2 * cp.a.mu, 2 * cp.b.mu, N)
    table = weights(p)
    if p.even:
        omega_tilde = tuple(reversed(table.omega))
    else:
        omega_tilde = table.omega
    z = tuple(2 * ee for ee in kappa2_eigenvalues(cp))
    return CGMapping(p, z, omega_tilde, table.v)


def verify_kappa_is_H(cp: CouplingProblem, strict: bool = True) -> VerificationReport:
    r"""Check that :math:`(\kappa_1 - \rho/4, \kappa_2, r)` realizes the algebra.

    The constants are those of the mapped parameters. The witnessed
    correspondence is :math:`-2\nu = \lambda_1 + \lambda_2\lambda_3` and
    :math:`\sigma - \nu\rho = \lambda_4(\lambda_1 - \lambda_2\lambda_3)`; the
    Casimir values differ by :math:`q_{C.G.} = q + \rho^2/4`.

    Raises
    ------
    MatchViolation
        With ``strict``, if a relation or a correspondence fails.
    """
    mapping = cg_mapping(cp)
    constants = structure_constants(mapping.params)
    ks = coupled_operators(cp)
    l1, l2, l3, l4 = ks.lambdas
    report = VerificationReport(
        "kappa is H",
        {**cp.to_dict(), "mapped": mapping.params.to_dict(), **constants.to_dict()},
    )
    report.record_value("-2nu=l1+l2l3", -2 * constants.nu, l1 + l2 * l3)
    report.record_value(
        "sigma-nu rho=l4(l1-l2l3)",
        constants.sigma - constants.nu * constants.rho,
        l4 * (l1 - l2 * l3),
    )
    report.record_value(
        "q_CG=q+rho^2/4", ks.q_cg, constants.casimir_value + constants.rho**2 / 4
    )
    shifted = GeneratorSet(
        ks.kappa1 - constants.rho / 4, ks.kappa2, ks.r, constants
    )
    record_relations(report, shifted)
    if strict:
        report.raise_for_failure(MatchViolation)
    return report
