import logging
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
    Tuple,
)

from mhahn.core import (
    RMatrix,
    anticommutator,
    commutator,
    format_rational,
    has_spectrum,
    parity_sign,
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

from .module import (
    ModuleLabel,
)


@dataclass(frozen=True)
class CouplingProblem:
    r"""Two modules and the total degree N of the coupled subspace.

    The subspace is spanned by :math:`g_n = f^{(a)}_n \otimes f^{(b)}_{N-n}`,
    :math:`0 \le n \le N`.
    """

    a: ModuleLabel
    b: ModuleLabel
    N: int

    def __post_init__(self):
        if isinstance(self.N, bool) or not isinstance(self.N, int) or self.N < 0:
            raise RegimeError(f"N must be a non-negative integer, got {self.N!r}")

    @classmethod
    def make(cls, mu_a, mu_b, N: int, eps_a: int = 1, eps_b: int = 1):
        return cls(ModuleLabel.make(eps_a, mu_a), ModuleLabel.make(eps_b, mu_b), N)

    @property
    def dim(self) -> int:
        return self.N + 1

    @property
    def lambdas(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        r""":math:`(\lambda_1, \lambda_2, \lambda_3, \lambda_4)`."""
        return (
            -2 * self.a.epsilon * self.a.mu,
            -2 * self.b.epsilon * self.b.mu,
            Fraction(parity_sign(self.N) * self.a.epsilon * self.b.epsilon),
            self.a.mu + self.b.mu + self.N + 1,
        )

    def key(self) -> str:
        return (
            f"mu_a={format_rational(self.a.mu)},mu_b={format_rational(self.b.mu)},"
            f"eps_a={self.a.epsilon},eps_b={self.b.epsilon},N={self.N}"
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu_a": format_rational(self.a.mu),
            "mu_b": format_rational(self.b.mu),
            "eps_a": self.a.epsilon,
            "eps_b": self.b.epsilon,
            "N": self.N,
        }


@dataclass(frozen=True)
class CasimirEigenvalue:
    r"""One eigenvalue :math:`q_{ab} = -\epsilon_{ab}\mu_{ab}` of the coupled Casimir."""

    s: int
    epsilon: int
    mu: Fraction

    @property
    def q(self) -> Fraction:
        return -self.epsilon * self.mu


@dataclass(frozen=True)
class KappaSet:
    r"""The operators :math:`\kappa_1, \kappa_2, \kappa_3, r` on the coupled subspace."""

    kappa1: RMatrix
    kappa2: RMatrix
    kappa3: RMatrix
    r: RMatrix
    Qab: RMatrix
    lambdas: Tuple[Fraction, Fraction, Fraction, Fraction]

    @property
    def dim(self) -> int:
        return self.kappa1.dim

    @property
    def q_cg(self) -> Fraction:
        r"""Value of :math:`Q_{C.G.}` on the subspace,
        :math:`\frac14(\lambda_1 - \lambda_2\lambda_3)^2 + \lambda_4^2 - 5/4`."""
        l1, l2, l3, l4 = self.lambdas
        return (l1 - l2 * l3) ** 2 / 4 + l4**2 - Fraction(5, 4)

    @property
    def q_cg_printed(self) -> Fraction:
        r"""The closed form with :math:`(\lambda_1 + \lambda_2\lambda_3)^2`.

        It agrees with :attr:`q_cg` only when :math:`\lambda_1\lambda_2\lambda_3 = 0`.
        """
        l1, l2, l3, l4 = self.lambdas
        return (l1 + l2 * l3) ** 2 / 4 + l4**2 - Fraction(5, 4)


def _degree_operators(cp: CouplingProblem) -> Dict[str, RMatrix]:
    dim, N = cp.dim, cp.N
    mu_a, mu_b = cp.a.mu, cp.b.mu
    # A-B+ g_n = [N-n+1]_b g_{n-1},  A+B- g_n = [n+1]_a g_{n+1}
    AmBp = RMatrix.from_function(
        dim, dim, lambda ii, jj: mu_number(N - jj + 1, mu_b) if ii == jj - 1 else 0
    )
    ApBm = RMatrix.from_function(
        dim, dim, lambda ii, jj: mu_number(jj + 1, mu_a) if ii == jj + 1 else 0
    )
    A0 = RMatrix.diag([nn + mu_a + Fraction(1, 2) for nn in range(dim)])
    B0 = RMatrix.diag([N - nn + mu_b + Fraction(1, 2) for nn in range(dim)])
    Ra = RMatrix.diag([cp.a.epsilon * parity_sign(nn) for nn in range(dim)])
    Rb = RMatrix.diag([cp.b.epsilon * parity_sign(N - nn) for nn in range(dim)])
    return {"A-B+": AmBp, "A+B-": ApBm, "A0": A0, "B0": B0, "Ra": Ra, "Rb": Rb}


def coupled_casimir(cp: CouplingProblem) -> RMatrix:
    r"""The coupled Casimir in cast form on the degree-N subspace.

    .. math::
        Q_{ab} = (A_-B_+ - A_+B_-)R_a - \tfrac12 R_aR_b + Q_aR_b + Q_bR_a
    """
    ops = _degree_operators(cp)
    Ra, Rb = ops["Ra"], ops["Rb"]
    return (
        (ops["A-B+"] - ops["A+B-"]) @ Ra
        - (Ra @ Rb) / 2
        + cp.a.casimir_value * Rb
        + cp.b.casimir_value * Ra
    )


def coupled_operators(cp: CouplingProblem, check: bool = True) -> KappaSet:
    r"""Build :math:`\kappa_1 = (A_0 - B_0)/2`, :math:`\kappa_2 = \lambda_3 Q_{ab}`,
    :math:`\kappa_3 = [\kappa_1, \kappa_2]` and :math:`r = R_a`.

    With ``check`` the relations of the set and the value of its Casimir
    are verified, raising :class:`RelationViolation` on failure.
    """
    ops = _degree_operators(cp)
    Qab = coupled_casimir(cp)
    lambdas = cp.lambdas
    kappa1 = (ops["A0"] - ops["B0"]) / 2
    kappa2 = lambdas[2] * Qab
    ks = KappaSet(
        kappa1=kappa1,
        kappa2=kappa2,
        kappa3=commutator(kappa1, kappa2),
        r=ops["Ra"],
        Qab=Qab,
        lambdas=lambdas,
    )
    if check:
        verify_kappa_relations(ks, strict=True)
    return ks


def kappa_casimir(ks: KappaSet) -> RMatrix:
    r""":math:`Q_{C.G.} = 4\kappa_1^2 + \kappa_2^2 - \kappa_3^2 + \kappa_2 - (\lambda_1+\lambda_2\lambda_3) r`."""
    l1, l2, l3, _ = ks.lambdas
    return (
        4 * (ks.kappa1 @ ks.kappa1)
        + ks.kappa2 @ ks.kappa2
        - ks.kappa3 @ ks.kappa3
        + ks.kappa2
        - (l1 + l2 * l3) * ks.r
    )


def verify_kappa_relations(ks: KappaSet, strict: bool = True) -> VerificationReport:
    r"""Check the relations of the :math:`\kappa` operators and their Casimir.

    With :math:`\Lambda = \lambda_1 + \lambda_2\lambda_3`:

    .. math::
        [\kappa_1, r] = 0, \quad \{\kappa_2, r\} = -r + \Lambda, \quad
        \{\kappa_3, r\} = 0, \\
        [\kappa_1, \kappa_3] = \kappa_2 - \tfrac12\Lambda r + \tfrac12, \\
        [\kappa_3, \kappa_2] = 4\kappa_1 + \Lambda\kappa_3 r - 2\Lambda\kappa_1 r
            + \lambda_4(\lambda_1 - \lambda_2\lambda_3) r
    """
    l1, l2, l3, l4 = ks.lambdas
    big = l1 + l2 * l3
    report = VerificationReport(
        "kappa relations", {"lambdas": [format_rational(ll) for ll in ks.lambdas]}
    )
    k1, k2, k3, r = ks.kappa1, ks.kappa2, ks.kappa3, ks.r
    zero = RMatrix.zeros(ks.dim)
    terms = [
        ("r^2=1", r @ r, RMatrix.identity(ks.dim)),
        ("[k1,r]=0", commutator(k1, r), zero),
        ("{k2,r}=-r+L", anticommutator(k2, r), -r + big),
        ("{k3,r}=0", anticommutator(k3, r), zero),
        ("[k1,k2]=k3", commutator(k1, k2), k3),
        (
            "[k1,k3]=k2-Lr/2+1/2",
            commutator(k1, k3),
            k2 - (big / 2) * r + Fraction(1, 2),
        ),
        (
            "[k3,k2]=4k1+Lk3r-2Lk1r+l4(l1-l2l3)r",
            commutator(k3, k2),
            4 * k1
            + big * (k3 @ r)
            - 2 * big * (k1 @ r)
            + l4 * (l1 - l2 * l3) * r,
        ),
    ]
    for name, lhs, rhs in terms:
        report.record_equal(name, lhs, rhs)
    report.record_equal(
        "Q_CG=q_CG", kappa_casimir(ks), ks.q_cg, detail=f"q_CG={ks.q_cg}"
    )
    if ks.q_cg_printed != ks.q_cg:
        logging.debug(
            "closed form (l1+l2l3) of q_CG gives %s, the realized value is %s",
            ks.q_cg_printed,
            ks.q_cg,
        )
    if strict:
        report.raise_for_failure(RelationViolation)
    return report


def casimir_spectrum(cp: CouplingProblem) -> List[CasimirEigenvalue]:
    r"""Eigenvalues of the coupled Casimir on the degree-N subspace.

    :math:`\mu_{ab} = \mu_a + \mu_b + s + 1/2` and
    :math:`\epsilon_{ab} = (-1)^s \epsilon_a\epsilon_b` for :math:`s = 0, \ldots, N`,
    so :math:`q_{ab} = (-1)^{s+1}\epsilon_a\epsilon_b(\mu_a + \mu_b + s + 1/2)`.
    The last entry is the maximal :math:`\mu_{ab}`.
    """
    eps = cp.a.epsilon * cp.b.epsilon
    return [
        CasimirEigenvalue(
            s=ss,
            epsilon=parity_sign(ss) * eps,
            mu=cp.a.mu + cp.b.mu + ss + Fraction(1, 2),
        )
        for ss in range(cp.dim)
    ]


def kappa2_eigenvalues(cp: CouplingProblem) -> List[Fraction]:
    r"""Eigenvalues :math:`\lambda_3 q_{ab}` of :math:`\kappa_2`, indexed like
    :func:`casimir_spectrum`; twice them is the grid :math:`z_k`."""
    l3 = cp.lambdas[2]
    return [l3 * ee.q for ee in casimir_spectrum(cp)]


def verify_casimir_spectrum(
    cp: CouplingProblem, strict: bool = True
) -> VerificationReport:
    r"""Compare :func:`casimir_spectrum` with the exact spectrum of :math:`Q_{ab}`."""
    report = VerificationReport("casimir spectrum", cp.to_dict())
    spectrum = casimir_spectrum(cp)
    Qab = coupled_casimir(cp)
    report.record("spec(Qab)", has_spectrum(Qab, [ee.q for ee in spectrum]))
    top = spectrum[-1]
    report.record_value(
        "eps_ab|max",
        Fraction(top.epsilon),
        Fraction(parity_sign(cp.N) * cp.a.epsilon * cp.b.epsilon),
    )
    kappa1 = coupled_operators(cp, check=False).kappa1
    offset = (cp.a.mu - cp.b.mu - cp.N) / 2
    report.record(
        "spec(k1)", has_spectrum(kappa1, [nn + offset for nn in range(cp.dim)])
    )
    if strict:
        report.raise_for_failure(RelationViolation)
    return report
