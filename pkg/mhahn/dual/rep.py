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

from mhahn.algebra import (
    GeneratorSet,
    structure_constants,
)
from mhahn.core import (
    RMatrix,
    commutator,
    format_rational,
)
from mhahn.poly import (
    HahnParams,
    grid_values,
)

from .free_params import (
    FreeParams,
)


def dual_spectrum(p: HahnParams) -> Tuple[Fraction, ...]:
    r"""Eigenvalues :math:`\lambda_s = x_s/2` of :math:`K_2`.

    N odd: :math:`(-1)^s(s + 1/2 + \alpha/2 + \beta/2)`; N even:
    :math:`(-1)^s(s + 1/2 - \alpha/2 - \beta/2)`.
    """
    return tuple(xx / 2 for xx in grid_values(p))


def block_indices(dim: int, block: int) -> List[int]:
    r"""Basis indices :math:`\{2p, 2p+1\}` of block p, clipped to the dimension."""
    return [ii for ii in (2 * block, 2 * block + 1) if ii < dim]


def n_blocks(dim: int) -> int:
    return (dim + 1) // 2


def block_label(matrix: str, row: int, col: int) -> str:
    r"""Name of the block holding entry (row, col), e.g. ``C_1`` or ``U_2``."""
    bi, bj = row // 2, col // 2
    if matrix == "K2":
        return f"Lambda_{bi}"
    if matrix == "P":
        return f"Gamma_{bi}"
    if bi == bj:
        return f"C_{bi}"
    if bj == bi + 1:
        return f"U_{bj}"
    if bi == bj + 1:
        return f"D_{bj}"
    return f"({bi},{bj})"


@dataclass(frozen=True)
class DualRep:
    r"""The representation in the basis where :math:`K_2` is diagonal.

    :math:`K_2 = \mathrm{diag}(\Lambda_0, \ldots)`, :math:`P = \mathrm{diag}(\Gamma_0, \ldots)`,
    trailing 1x1 blocks for even N, and :math:`K_1` block tridiagonal with
    diagonal blocks :math:`C_p`, upper blocks :math:`U_p` and lower blocks
    :math:`D_p`.
    """

    K1: RMatrix
    K2: RMatrix
    P: RMatrix
    params: HahnParams
    fp: FreeParams
    lambdas: Tuple[Fraction, ...]
    source: str = "derived"

    @property
    def dim(self) -> int:
        return self.K1.dim

    @property
    def K3(self) -> RMatrix:
        return commutator(self.K1, self.K2)

    def generators(self) -> GeneratorSet:
        return GeneratorSet(
            self.K1, self.K2, self.P, structure_constants(self.params), K3=self.K3
        )

    def blocks(self) -> List[Tuple[str, int, RMatrix]]:
        r"""The labeled blocks (label, p, matrix) with labels Lambda, Gamma, C, U and D."""
        ret = []
        nb = n_blocks(self.dim)
        for bb in range(nb):
            idx = block_indices(self.dim, bb)
            ret.append(("Lambda", bb, self.K2.block(idx, idx)))
            ret.append(("Gamma", bb, self.P.block(idx, idx)))
            ret.append(("C", bb, self.K1.block(idx, idx)))
        for bb in range(1, nb):
            rows = block_indices(self.dim, bb - 1)
            cols = block_indices(self.dim, bb)
            ret.append(("U", bb, self.K1.block(rows, cols)))
        for bb in range(nb - 1):
            rows = block_indices(self.dim, bb + 1)
            cols = block_indices(self.dim, bb)
            ret.append(("D", bb, self.K1.block(rows, cols)))
        return ret

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "source": self.source,
            self.fp.name: self.fp.to_list(),
            "lambda": [format_rational(ll) for ll in self.lambdas],
            "blocks": [
                {
                    "label": label,
                    "p": index,
                    "matrix": [
                        [format_rational(vv) for vv in row] for row in mm.to_list()
                    ],
                }
                for label, index, mm in self.blocks()
            ],
        }
