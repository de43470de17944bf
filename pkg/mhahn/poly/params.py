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
    format_rational,
    to_rational,
)
from mhahn.errors import (
    RegimeError,
)


def check_positivity_regime(alpha: Fraction, beta: Fraction, N: int):
    r"""Raise :class:`RegimeError` unless (alpha, beta, N) is in the positivity regime.

    For even N the regime is :math:`\alpha > N, \beta > N`; for odd N it
    is :math:`\alpha > -1, \beta > -1`. The second odd-N branch that also
    keeps the recurrence coefficients positive is not supported.
    """
    if isinstance(N, bool) or not isinstance(N, int) or N < 0:
        raise RegimeError(f"N must be a non-negative integer, got {N!r}")
    bound = Fraction(N) if N % 2 == 0 else Fraction(-1)
    parity = "even" if N % 2 == 0 else "odd"
    for name, value in (("alpha", alpha), ("beta", beta)):
        if not value > bound:
            raise RegimeError(
                f"positivity regime violated: {parity} N={N} requires {name} > "
                f"{format_rational(bound)}, got {name}={format_rational(value)}"
            )


@dataclass(frozen=True)
class HahnParams:
    r"""Parameters :math:`(\alpha, \beta, N)` of the dual -1 Hahn polynomials.

    The positivity regime is enforced on construction.
    """

    alpha: Fraction
    beta: Fraction
    N: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", to_rational(self.alpha))
        object.__setattr__(self, "beta", to_rational(self.beta))
        check_positivity_regime(self.alpha, self.beta, self.N)

    @classmethod
    def make(cls, alpha: RationalLike, beta: RationalLike, N: int) -> "HahnParams":
        return cls(to_rational(alpha), to_rational(beta), N)

    @property
    def even(self) -> bool:
        return self.N % 2 == 0

    @property
    def dim(self) -> int:
        return self.N + 1

    @property
    def xi(self) -> Fraction:
        if self.even:
            return (self.beta - self.N - 1) / 2
        return self.alpha / 2

    @property
    def zeta(self) -> Fraction:
        if self.even:
            return (self.alpha - self.N - 1) / 2
        return self.beta / 2

    def key(self) -> str:
        return (
            f"alpha={format_rational(self.alpha)},"
            f"beta={format_rational(self.beta)},N={self.N}"
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "N": self.N,
        }
