from dataclasses import (
    dataclass,
    field,
)
from fractions import (
    Fraction,
)
from typing import (
    Any,
    Dict,
    Optional,
    Tuple,
)

from mhahn.core import (
    RMatrix,
    commutator,
    format_rational,
)
from mhahn.poly import (
    HahnParams,
)


@dataclass(frozen=True)
class StructureConstants:
    r"""Structure constants :math:`(\nu, \sigma, \rho)` of the algebra."""

    nu: Fraction
    sigma: Fraction
    rho: Fraction

    @property
    def casimir_value(self) -> Fraction:
        r""":math:`q = \nu^2 + 2\nu - \sigma - \rho - 1/4`."""
        return self.nu**2 + 2 * self.nu - self.sigma - self.rho - Fraction(1, 4)

    @property
    def chi(self) -> Fraction:
        r""":math:`\chi = (\sigma - \nu\rho)/4`, the constant of the tilde presentation."""
        return (self.sigma - self.nu * self.rho) / 4

    def to_dict(self) -> Dict[str, str]:
        return {
            "nu": format_rational(self.nu),
            "sigma": format_rational(self.sigma),
            "rho": format_rational(self.rho),
            "casimir": format_rational(self.casimir_value),
        }


def structure_constants(p: HahnParams) -> StructureConstants:
    r"""Parity dispatched structure constants.

    N even: :math:`\nu = (\alpha+\beta-2N-2)/2`,
    :math:`\sigma = \alpha-\beta+2N(N+1-\beta)`, :math:`\rho = \beta-\alpha-2N`.

    N odd: :math:`\nu = (\alpha-\beta)/2`,
    :math:`\sigma = -(\alpha+\beta+2\alpha\beta+2N\alpha)`, :math:`\rho = \alpha-\beta-2N`.
    """
    a, b, N = p.alpha, p.beta, p.N
    if p.even:
        return StructureConstants(
            nu=(a + b - 2 * N - 2) / 2,
            sigma=a - b + 2 * N * (N + 1 - b),
            rho=b - a - 2 * N,
        )
    return StructureConstants(
        nu=(a - b) / 2,
        sigma=-(a + b + 2 * a * b + 2 * N * a),
        rho=a - b - 2 * N,
    )


@dataclass(frozen=True)
class GeneratorSet:
    r"""Matrices representing the generators :math:`K_1, K_2, K_3, P`.

    :math:`K_3` defaults to :math:`[K_1, K_2]`.

    Parameters
    ----------
    K1, K2, P : RMatrix
        Square matrices of the same dimension.
    constants : StructureConstants
        The constants the relations are checked against.
    K3 : RMatrix, optional
        Overrides the commutator.
    names : tuple of str
        Display names of (K1, K2, K3, P).
    """

    K1: RMatrix
    K2: RMatrix
    P: RMatrix
    constants: StructureConstants
    K3: Optional[RMatrix] = None
    names: Tuple[str, str, str, str] = field(default=("K1", "K2", "K3", "P"))

    def __post_init__(self):
        dims = {mm.shape for mm in (self.K1, self.K2, self.P)}
        assert len(dims) == 1, f"Error: generator shapes differ: {sorted(dims)}"
        assert self.K1.is_square(), "Error: generators must be square"
        if self.K3 is None:
            object.__setattr__(self, "K3", commutator(self.K1, self.K2))

    @property
    def dim(self) -> int:
        return self.K1.dim

    def matrices(self) -> Dict[str, RMatrix]:
        return dict(zip(self.names, (self.K1, self.K2, self.K3, self.P)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "constants": self.constants.to_dict(),
            "matrices": {
                name: [[format_rational(vv) for vv in row] for row in mm.to_list()]
                for name, mm in self.matrices().items()
            },
        }
