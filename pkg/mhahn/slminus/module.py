from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
from typing import (
    Dict,
)

from mhahn.core import (
    RationalLike,
    RMatrix,
    anticommutator,
    commutator,
    format_rational,
    parity_sign,
    to_rational,
)
from mhahn.errors import (
    RegimeError,
    RelationViolation,
)
from mhahn.poly import (
    mu_number,
)
from mhahn.report import (
    VerificationReport,
)

generator_names = ("A0", "A+", "A-", "R", "Q")


@dataclass(frozen=True)
class ModuleLabel:
    r"""Label :math:`(\epsilon, \mu)` of a positive-discrete-series module."""

    epsilon: int
    mu: Fraction

    def __post_init__(self):
        if self.epsilon not in (1, -1) or isinstance(self.epsilon, bool):
            raise RegimeError(f"module sign must be +1 or -1, got {self.epsilon!r}")
        mu = to_rational(self.mu)
        if mu < 0:
            raise RegimeError(f"module parameter mu must be >= 0, got {mu}")
        object.__setattr__(self, "mu", mu)

    @classmethod
    def make(cls, epsilon: int, mu: RationalLike) -> "ModuleLabel":
        return cls(epsilon, to_rational(mu))

    @property
    def casimir_value(self) -> Fraction:
        return -self.epsilon * self.mu

    def to_dict(self) -> Dict[str, str]:
        return {"epsilon": str(self.epsilon), "mu": format_rational(self.mu)}


def _check_cutoff(cutoff: int, minimum: int):
    if cutoff < minimum:
        raise RegimeError(f"cutoff must be >= {minimum}, got {cutoff}")


def module_action(label: ModuleLabel, generator: str, cutoff: int) -> RMatrix:
    r"""Truncated action of a generator in the scaled basis.

    In the basis :math:`f_n = e_n / \sqrt{[n]_\mu!}`:

    .. math::
        A_+ f_n = [n+1]_\mu f_{n+1}, \quad A_- f_n = f_{n-1}, \quad
        A_0 f_n = (n + \mu + 1/2) f_n, \quad R f_n = \epsilon (-1)^n f_n,

    and :math:`Q = A_+ A_- R - A_0 R + R/2`, which is exact on every row
    since :math:`A_-` acts first.

    Parameters
    ----------
    label : ModuleLabel
        The module.
    generator : str
        One of ``A0``, ``A+``, ``A-``, ``R`` and ``Q``.
    cutoff : int
        Number of basis vectors kept.
    """
    _check_cutoff(cutoff, 1)
    mu, eps = label.mu, label.epsilon
    if generator == "A0":
        return RMatrix.diag([nn + mu + Fraction(1, 2) for nn in range(cutoff)])
    elif generator == "A+":
        return RMatrix.from_function(
            cutoff, cutoff, lambda ii, jj: mu_number(ii, mu) if ii == jj + 1 else 0
        )
    elif generator == "A-":
        return RMatrix.from_function(
            cutoff, cutoff, lambda ii, jj: 1 if jj == ii + 1 else 0
        )
    elif generator == "R":
        return RMatrix.diag([eps * parity_sign(nn) for nn in range(cutoff)])
    elif generator == "Q":
        Ap = module_action(label, "A+", cutoff)
        Am = module_action(label, "A-", cutoff)
        A0 = module_action(label, "A0", cutoff)
        R = module_action(label, "R", cutoff)
        return Ap @ Am @ R - A0 @ R + R / 2
    else:
        raise ValueError(
            f"unknown generator {generator}, expected one of {generator_names}"
        )


def _safe_rows(mm: RMatrix) -> RMatrix:
    return mm.block(range(mm.nrows - 1), range(mm.ncols))


def verify_parabose(
    label: ModuleLabel,
    cutoff: int,
    strict: bool = True,
) -> VerificationReport:
    r"""Check :math:`[A_-, A_+] = 1 + 2\epsilon\mu R` on rows 0..cutoff-2.

    The last row is polluted by the truncation and is excluded.
    """
    _check_cutoff(cutoff, 3)
    report = VerificationReport("parabose", {**label.to_dict(), "cutoff": cutoff})
    Ap = module_action(label, "A+", cutoff)
    Am = module_action(label, "A-", cutoff)
    R = module_action(label, "R", cutoff)
    rhs = RMatrix.identity(cutoff) + 2 * label.epsilon * label.mu * R
    report.record_equal(
        "[A-,A+]=1+2eps mu R",
        _safe_rows(commutator(Am, Ap)),
        _safe_rows(rhs),
        detail=f"rows 0..{cutoff - 2}",
    )
    if strict:
        report.raise_for_failure(RelationViolation)
    return report


def verify_module_relations(
    label: ModuleLabel,
    cutoff: int,
    strict: bool = True,
) -> VerificationReport:
    r"""Check the defining relations of the truncated module.

    :math:`[A_0, A_\pm] = \pm A_\pm`, :math:`\{A_+, A_-\} = 2A_0`,
    :math:`\{A_\pm, R\} = 0`, :math:`[A_0, R] = 0`, :math:`R^2 = 1`, on rows
    0..cutoff-2, and :math:`Q = -\epsilon\mu` on every row.
    """
    _check_cutoff(cutoff, 3)
    report = VerificationReport(
        "module relations", {**label.to_dict(), "cutoff": cutoff}
    )
    A0 = module_action(label, "A0", cutoff)
    Ap = module_action(label, "A+", cutoff)
    Am = module_action(label, "A-", cutoff)
    R = module_action(label, "R", cutoff)
    zero = RMatrix.zeros(cutoff)
    terms = [
        ("[A0,A+]=A+", commutator(A0, Ap), Ap),
        ("[A0,A-]=-A-", commutator(A0, Am), -Am),
        ("{A+,A-}=2A0", anticommutator(Ap, Am), 2 * A0),
        ("{A+,R}=0", anticommutator(Ap, R), zero),
        ("{A-,R}=0", anticommutator(Am, R), zero),
        ("[A0,R]=0", commutator(A0, R), zero),
        ("R^2=1", R @ R, RMatrix.identity(cutoff)),
    ]
    for name, lhs, rhs in terms:
        report.record_equal(name, _safe_rows(lhs), _safe_rows(rhs))
    report.record_equal(
        "Q=-eps mu", module_action(label, "Q", cutoff), label.casimir_value
    )
    if strict:
        report.raise_for_failure(RelationViolation)
    return report
