from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
from typing import (
    List,
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
)
from .relations import (
    Relation,
)


@dataclass(frozen=True)
class TildeGenerators:
    r"""Generators of the tilde presentation.

    .. math::
        \tilde K_1 = K_1 + \rho/4, \quad
        \tilde K_2 = (K_2 + \nu P + 1/2)/2, \quad
        \tilde K_3 = K_3/2
    """

    K1: RMatrix
    K2: RMatrix
    K3: RMatrix
    P: RMatrix
    nu: Fraction
    chi: Fraction

    @property
    def dim(self) -> int:
        return self.K1.dim


def tilde_presentation(g: GeneratorSet) -> TildeGenerators:
    nu, rho = g.constants.nu, g.constants.rho
    return TildeGenerators(
        K1=g.K1 + rho / 4,
        K2=(g.K2 + nu * g.P + Fraction(1, 2)) / 2,
        K3=g.K3 / 2,
        P=g.P,
        nu=nu,
        chi=g.constants.chi,
    )


def tilde_casimir(t: TildeGenerators) -> RMatrix:
    r""":math:`\tilde Q = \tilde K_1^2 + \tilde K_2^2 - \tilde K_3^2 + (\nu/2) P`."""
    return t.K1 @ t.K1 + t.K2 @ t.K2 - t.K3 @ t.K3 + (t.nu / 2) * t.P


def tilde_relation_terms(t: TildeGenerators) -> List[Relation]:
    zero = RMatrix.zeros(t.dim)
    return [
        ("[K~1,P]=0", commutator(t.K1, t.P), zero),
        ("{K~2,P}=0", anticommutator(t.K2, t.P), zero),
        ("{K~3,P}=0", anticommutator(t.K3, t.P), zero),
        ("[K~1,K~2]=K~3", commutator(t.K1, t.K2), t.K3),
        ("[K~1,K~3]=K~2", commutator(t.K1, t.K3), t.K2),
        (
            "[K~3,K~2]=K~1+nuK~1P+chiP",
            commutator(t.K3, t.K2),
            t.K1 + t.nu * (t.K1 @ t.P) + t.chi * t.P,
        ),
    ]


def verify_tilde(g: GeneratorSet, strict: bool = True) -> VerificationReport:
    r"""Check the tilde relations and that :math:`\tilde Q` is a scalar."""
    t = tilde_presentation(g)
    report = VerificationReport("tilde", {"dim": t.dim, "chi": str(t.chi)})
    for name, lhs, rhs in tilde_relation_terms(t):
        report.record_equal(name, lhs, rhs)
    casimir = tilde_casimir(t)
    value = casimir.scalar_value()
    report.record(
        "Q~ scalar",
        value is not None,
        detail="" if value is None else f"Q~={value}",
    )
    if strict:
        report.raise_for_failure(RelationViolation)
    return report


def verify_symmetrization(g: GeneratorSet, strict: bool = True) -> VerificationReport:
    r"""Check that :math:`\tilde K_2` has zero diagonal in the given basis.

    For the realization this says that the shift by :math:`\nu P + 1/2`
    removes the diagonal recurrence coefficients :math:`b_n`.
    """
    t = tilde_presentation(g)
    report = VerificationReport("symmetrization", {"dim": t.dim})
    diagonal = t.K2.diagonal()
    offending = [ii for ii, vv in enumerate(diagonal) if vv != 0]
    report.record(
        "diag(K~2)=0",
        len(offending) == 0,
        residual=RMatrix.diag(diagonal),
        detail="" if len(offending) == 0 else f"n={offending[0]}",
    )
    if strict:
        report.raise_for_failure(RelationViolation)
    return report
