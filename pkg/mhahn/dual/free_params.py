from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
from typing import (
    List,
    Sequence,
    Tuple,
)

import numpy as np

from mhahn.constants import (
    default_free_parameter,
)
from mhahn.core import (
    RationalLike,
    RMatrix,
    format_rational,
    to_rational,
)
from mhahn.errors import (
    RegimeError,
    ZeroParameter,
)


@dataclass(frozen=True)
class FreeParams:
    r"""Nonzero gauge parameters of the dual representation, one per basis vector.

    They are called :math:`\theta_i` for odd N and :math:`\xi_i` for even N;
    the representation is conjugated by :math:`T = \mathrm{diag}(\text{values})`.
    """

    values: Tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(to_rational(vv) for vv in self.values)
        if len(values) == 0:
            raise RegimeError("at least one free parameter is needed")
        zeros = [ii for ii, vv in enumerate(values) if vv == 0]
        if len(zeros) > 0:
            raise ZeroParameter(
                f"free parameters must be nonzero, entry {zeros[0]} is zero"
            )
        object.__setattr__(self, "values", values)

    @classmethod
    def make(cls, values: Sequence[RationalLike], N: int) -> "FreeParams":
        if len(values) != N + 1:
            raise RegimeError(
                f"expected N+1={N + 1} free parameters, got {len(values)}"
            )
        return cls(tuple(values))

    @classmethod
    def unit(cls, N: int) -> "FreeParams":
        return cls(tuple([Fraction(default_free_parameter)] * (N + 1)))

    @classmethod
    def random(cls, N: int, rng: np.random.Generator) -> "FreeParams":
        r"""Random nonzero rationals :math:`\pm a/b`, :math:`1 \le a \le 9`, :math:`1 \le b \le 5`."""
        nums = rng.integers(1, 10, size=N + 1)
        dens = rng.integers(1, 6, size=N + 1)
        signs = rng.choice([-1, 1], size=N + 1)
        return cls(
            tuple(
                Fraction(int(ss) * int(nn), int(dd))
                for ss, nn, dd in zip(signs, nums, dens)
            )
        )

    @property
    def N(self) -> int:
        return len(self.values) - 1

    @property
    def name(self) -> str:
        return "xi" if self.N % 2 == 0 else "theta"

    def __getitem__(self, ii: int) -> Fraction:
        return self.values[ii]

    def matrix(self) -> RMatrix:
        return RMatrix.diag(self.values)

    def is_unit(self) -> bool:
        return all(vv == 1 for vv in self.values)

    def to_list(self) -> List[str]:
        return [format_rational(vv) for vv in self.values]
