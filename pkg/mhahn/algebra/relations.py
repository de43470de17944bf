import logging
from fractions import (
    Fraction,
)
from typing import (
    List,
    Tuple,
)

from mhahn.core import (
    RMatrix,
    anticommutator,
    commutator,
)
from mhahn.errors import (
    RelationViolation,
)
from mhahn.report import (
    VerificationReport,
)

from .generators import (
    GeneratorSet,
    StructureConstants,
)

Relation = Tuple[str, RMatrix, RMatrix]


def relation_terms(
    K1: RMatrix,
    K2: RMatrix,
    K3: RMatrix,
    P: RMatrix,
    constants: StructureConstants,
) -> List[Relation]:
    r"""The seven defining relations as (name, lhs, rhs) triples.

    .. math::
        P^2 = 1, \quad [K_1, P] = 0, \quad \{K_2, P\} = -P - 2\nu, \quad
        \{K_3, P\} = 0, \\
        [K_1, K_2] = K_3, \quad [K_1, K_3] = K_2 + \nu P + 1/2, \\
        [K_3, K_2] = 4K_1 + 4\nu K_1 P - 2\nu K_3 P + \sigma P + \rho
    """
    nu, sigma, rho = constants.nu, constants.sigma, constants.rho
    zero = RMatrix.zeros(K1.dim)
    eye = RMatrix.identity(K1.dim)
    return [
        ("P^2=1", P @ P, eye),
        ("[K1,P]=0", commutator(K1, P), zero),
        ("{K2,P}=-P-2nu", anticommutator(K2, P), -P - 2 * nu),
        ("{K3,P}=0", anticommutator(K3, P), zero),
        ("[K1,K2]=K3", commutator(K1, K2), K3),
        ("[K1,K3]=K2+nuP+1/2", commutator(K1, K3), K2 + nu * P + Fraction(1, 2)),
        (
            "[K3,K2]=4K1+4nuK1P-2nuK3P+sigmaP+rho",
            commutator(K3, K2),
            4 * K1 + 4 * nu * (K1 @ P) - 2 * nu * (K3 @ P) + sigma * P + rho,
        ),
    ]


def record_relations(report: VerificationReport, g: GeneratorSet):
    for name, lhs, rhs in relation_terms(g.K1, g.K2, g.K3, g.P, g.constants):
        report.record_equal(name, lhs, rhs)


def verify_relations(g: GeneratorSet, strict: bool = True) -> VerificationReport:
    r"""Check the seven defining relations as exact matrix equalities.

    Raises
    ------
    RelationViolation
        When ``strict`` and a relation fails; the report names the first one.
    """
    report = VerificationReport("relations", {"dim": g.dim})
    record_relations(report, g)
    logging.debug("relations dim=%d: %s", g.dim, report.summary())
    if strict:
        report.raise_for_failure(RelationViolation)
    return report


def casimir_H(g: GeneratorSet) -> RMatrix:
    r""":math:`Q = 4K_1^2 + K_2^2 - K_3^2 + K_2 + 2\rho K_1 + 2\nu P`."""
    nu, rho = g.constants.nu, g.constants.rho
    return (
        4 * (g.K1 @ g.K1)
        + g.K2 @ g.K2
        - g.K3 @ g.K3
        + g.K2
        + 2 * rho * g.K1
        + 2 * nu * g.P
    )


def verify_casimir(g: GeneratorSet, strict: bool = True) -> VerificationReport:
    r"""Check that the Casimir operator is :math:`q \cdot I` and central."""
    report = VerificationReport(
        "casimir", {"q": str(g.constants.casimir_value), "dim": g.dim}
    )
    casimir = casimir_H(g)
    report.record_equal("Q=q*I", casimir, g.constants.casimir_value)
    for name, mm in g.matrices().items():
        report.record_equal(f"[Q,{name}]=0", commutator(casimir, mm), 0)
    if strict:
        report.raise_for_failure(RelationViolation)
    return report
