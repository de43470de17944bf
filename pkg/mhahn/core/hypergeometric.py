from fractions import (
    Fraction,
)
from typing import (
    Sequence,
)

from mhahn.errors import (
    NonTerminating,
    PoleInLowerParameter,
)

from .rational import (
    RationalLike,
    is_nonpositive_integer,
    to_rational,
)


def termination_index(upper: Sequence[RationalLike]) -> int:
    r"""Smallest :math:`|a|` over upper parameters that are non-positive integers.

    Raises
    ------
    NonTerminating
        If no upper parameter is a non-positive integer.
    """
    stops = [-aa for aa in map(to_rational, upper) if is_nonpositive_integer(aa)]
    if len(stops) == 0:
        raise NonTerminating(
            "no upper parameter is a non-positive integer, the series does not terminate"
        )
    return int(min(stops))


def hypergeometric_terminating(
    upper: Sequence[RationalLike],
    lower: Sequence[RationalLike],
    z: RationalLike,
) -> Fraction:
    r"""Exact value of a terminating :math:`{}_pF_q` series.

    The terms are accumulated through their ratio

    .. math::
        t_{k+1} / t_k = \frac{\prod_i (a_i + k)}{\prod_j (b_j + k)} \frac{z}{k+1},

    up to the termination index.

    Parameters
    ----------
    upper : list of rationals
        The upper parameters; at least one must be a non-positive integer.
    lower : list of rationals
        The lower parameters.
    z : rational
        The argument.

    Returns
    -------
    Fraction
        The finite sum.
    """
    upper = [to_rational(aa) for aa in upper]
    lower = [to_rational(bb) for bb in lower]
    z = to_rational(z)
    stop = termination_index(upper)
    term = Fraction(1)
    total = Fraction(1)
    for kk in range(stop):
        den = Fraction(kk + 1)
        for bb in lower:
            den *= bb + kk
        if den == 0:
            raise PoleInLowerParameter(
                f"lower Pochhammer vanishes at index {kk + 1} "
                f"before termination at {stop}",
                kk + 1,
            )
        num = z
        for aa in upper:
            num *= aa + kk
        term = term * num / den
        total += term
    return total


def hypergeometric_3F2_terminating(
    a1: RationalLike,
    a2: RationalLike,
    a3: RationalLike,
    b1: RationalLike,
    b2: RationalLike,
    z: RationalLike,
) -> Fraction:
    r""":math:`{}_3F_2(a_1, a_2, a_3; b_1, b_2; z)` for a terminating series."""
    return hypergeometric_terminating([a1, a2, a3], [b1, b2], z)
