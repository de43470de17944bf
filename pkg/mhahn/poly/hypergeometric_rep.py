from fractions import (
    Fraction,
)

from mhahn.core import (
    RationalLike,
    hypergeometric_3F2_terminating,
    pochhammer,
    to_rational,
)

from .params import (
    HahnParams,
)


def _even_n(p: HahnParams, n: int, x: Fraction) -> Fraction:
    half, q = divmod(n, 2)
    delta = Fraction(1, 2) - (p.alpha + p.beta) / 4
    shift = (x + 1) / 4
    b2 = 1 - p.alpha / 2
    if q == 0:
        b1 = Fraction(-p.N, 2)
        prefactor = 16**half * pochhammer(b1, half) * pochhammer(b2, half)
    else:
        tau = 2 * p.N + 2 - p.alpha - p.beta
        b1 = 1 - Fraction(p.N, 2)
        prefactor = (
            16**half * pochhammer(b1, half) * pochhammer(b2, half) * (x + 1 - tau)
        )
    return prefactor * hypergeometric_3F2_terminating(
        -half, delta + shift, delta - shift, b1, b2, 1
    )


def _odd_n(p: HahnParams, n: int, x: Fraction) -> Fraction:
    half, q = divmod(n, 2)
    eta = (p.alpha + p.beta + 2) / 4
    shift = (x + 1) / 4
    b1 = Fraction(1 - p.N, 2)
    if q == 0:
        b2 = (p.alpha + 1) / 2
        prefactor = 16**half * pochhammer(b1, half) * pochhammer(b2, half)
    else:
        b2 = (p.alpha + 3) / 2
        prefactor = (
            16**half
            * pochhammer(b1, half)
            * pochhammer(b2, half)
            * (x + 1 + p.alpha - p.beta)
        )
    return prefactor * hypergeometric_3F2_terminating(
        -half, eta + shift, eta - shift, b1, b2, 1
    )


def eval_hypergeometric(p: HahnParams, n: int, x: RationalLike) -> Fraction:
    r"""Monic :math:`Q_n(x)` from its terminating :math:`{}_3F_2` representation.

    Both the parity of N and the parity of n select the branch. With
    :math:`n = 2m + q`, N even:

    .. math::
        Q_{2m}(x) = 16^m (-N/2)_m (1-\alpha/2)_m
            \,{}_3F_2(-m, \delta + \tfrac{x+1}{4}, \delta - \tfrac{x+1}{4};
                      -N/2, 1-\alpha/2; 1),

    with :math:`\delta = 1/2 - (\alpha+\beta)/4`, and the odd-degree branch
    carries the factor :math:`(x + 1 - \tau)`, :math:`\tau = 2N+2-\alpha-\beta`.
    For odd N the shift is :math:`\eta = (\alpha+\beta+2)/4` and the odd-degree
    factor is :math:`(x + 1 + \alpha - \beta)`.

    Raises
    ------
    PoleInLowerParameter
        A lower parameter is a non-positive integer hit before termination.
    """
    if not 0 <= n <= p.N:
        raise ValueError(f"polynomial degree {n} outside 0..{p.N}")
    x = to_rational(x)
    if p.even:
        return _even_n(p, n, x)
    return _odd_n(p, n, x)
