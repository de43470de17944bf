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
    parity_sign,
)
from mhahn.errors import (
    RelationViolation,
)
from mhahn.poly import (
    mu_number,
)
from mhahn.report import (
    VerificationReport,
)

from .coupling import (
    CouplingProblem,
    casimir_spectrum,
    coupled_casimir,
)


@dataclass(frozen=True)
class Coproduct:
    r"""Coproduct generators between the degree N-1 and degree N subspaces.

    ``Cminus`` maps degree N to degree N-1, ``Cplus`` maps degree N-1 to
    degree N. :math:`C_0` and :math:`R_c` are scalars on a fixed degree.
    """

    Cplus: RMatrix
    Cminus: RMatrix
    C0: Fraction
    Rc: Fraction


def coproduct_operators(cp: CouplingProblem) -> Coproduct:
    r""":math:`C_0 = A_0 + B_0`, :math:`C_\pm = A_\pm R_b + B_\pm`, :math:`R_c = R_aR_b`.

    With :math:`g_n = f_n \otimes f_{N-n}` and
    :math:`g'_m = f_m \otimes f_{N-1-m}`:

    .. math::
        C_- g_n = \epsilon_b (-1)^{N-n} g'_{n-1} + g'_n, \qquad
        C_+ g'_m = \epsilon_b (-1)^{N-1-m} [m+1]_a g_{m+1} + [N-m]_b g_m,

    where the terms outside the index range vanish.
    """
    N = cp.N
    mu_a, mu_b = cp.a.mu, cp.b.mu
    eps_b = cp.b.epsilon

    def minus(ii: int, jj: int) -> Fraction:
        # row ii is g'_ii of degree N-1, column jj is g_jj of degree N
        ret = Fraction(0)
        if ii == jj - 1:
            ret += eps_b * parity_sign(N - jj)
        if ii == jj:
            ret += 1
        return ret

    def plus(ii: int, jj: int) -> Fraction:
        ret = Fraction(0)
        if ii == jj + 1:
            ret += eps_b * parity_sign(N - 1 - jj) * mu_number(jj + 1, mu_a)
        if ii == jj:
            ret += mu_number(N - jj, mu_b)
        return ret

    return Coproduct(
        Cplus=RMatrix.from_function(N + 1, N, plus),
        Cminus=RMatrix.from_function(N, N + 1, minus),
        C0=mu_a + mu_b + N + 1,
        Rc=Fraction(cp.a.epsilon * eps_b * parity_sign(N)),
    )


def coproduct_casimir(cp: CouplingProblem) -> RMatrix:
    r""":math:`Q_c = C_+C_-R_c - C_0R_c + R_c/2` on the degree-N subspace."""
    co = coproduct_operators(cp)
    Rc = co.Rc
    return (co.Cplus @ co.Cminus) * Rc - co.C0 * Rc + Rc / 2


def verify_coproduct_casimir(
    cp: CouplingProblem, strict: bool = True
) -> VerificationReport:
    r"""Check that the coproduct Casimir equals the cast form :math:`Q_{ab}`."""
    report = VerificationReport("coproduct casimir", cp.to_dict())
    report.record_equal("Qc=Qab", coproduct_casimir(cp), coupled_casimir(cp))
    if strict:
        report.raise_for_failure(RelationViolation)
    return report


def highest_coupled_vector(cp: CouplingProblem) -> Tuple[Fraction, ...]:
    r"""The kernel of :math:`C_-` on the degree-N subspace, first nonzero entry 1."""
    kernel = coproduct_operators(cp).Cminus.nullspace()
    assert len(kernel) == 1, f"Error: ker C- has dimension {len(kernel)}"
    vec = kernel[0]
    lead = next(vv for vv in vec if vv != 0)
    return tuple(vv / lead for vv in vec)


def verify_highest_vector(
    cp: CouplingProblem, strict: bool = True
) -> VerificationReport:
    r"""Check the coupled highest vector.

    It is an eigenvector of :math:`Q_{ab}` with
    :math:`q_{ab} = (-1)^{N+1}\epsilon_a\epsilon_b(\mu_a+\mu_b+N+1/2)`, on which
    :math:`R_c` is :math:`\epsilon_{ab}|_{max}` and :math:`C_0` is
    :math:`\mu_a+\mu_b+N+1`.
    """
    report = VerificationReport("highest vector", cp.to_dict())
    vec = highest_coupled_vector(cp)
    co = coproduct_operators(cp)
    top = casimir_spectrum(cp)[-1]
    image = coupled_casimir(cp).apply(vec)
    residual = [ii - top.q * vv for ii, vv in zip(image, vec)]
    report.record(
        "Qab v=q_max v",
        all(rr == 0 for rr in residual),
        RMatrix.from_columns([residual]),
        detail=f"q_max={top.q}",
    )
    report.record_value("Rc=eps_ab|max", co.Rc, Fraction(top.epsilon))
    report.record_value("C0=mu_ab|max+1/2", co.C0, top.mu + Fraction(1, 2))
    if strict:
        report.raise_for_failure(RelationViolation)
    return report
