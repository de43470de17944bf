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
    RationalLike,
    RMatrix,
    parity_sign,
    to_rational,
)

from .params import (
    HahnParams,
)


def mu_number(n: int, mu: RationalLike) -> Fraction:
    r"""The :math:`\mu`-number :math:`[n]_\mu = n + \mu(1 - (-1)^n)`."""
    assert n >= 0, f"Error: negative index {n}"
    return n + to_rational(mu) * (1 - parity_sign(n))


def mu_factorial(n: int, mu: RationalLike) -> Fraction:
    r""":math:`[n]_\mu! = [1]_\mu [2]_\mu \cdots [n]_\mu`, with :math:`[0]_\mu! = 1`."""
    ret = Fraction(1)
    for kk in range(1, n + 1):
        ret *= mu_number(kk, mu)
    return ret


@dataclass(frozen=True)
class RecurrencePair:
    b: Fraction
    u: Fraction


@dataclass(frozen=True)
class GridPoint:
    s: int
    x: Fraction


def recurrence_coefficients(p: HahnParams, n: int) -> RecurrencePair:
    r"""Recurrence coefficients :math:`(b_n, u_n)` for :math:`0 \le n \le N+1`.

    .. math::
        Q_{n+1}(x) + b_n Q_n(x) + u_n Q_{n-1}(x) = x Q_n(x)
    """
    if not 0 <= n <= p.N + 1:
        raise ValueError(f"recurrence index {n} outside 0..{p.N + 1}")
    if p.even:
        shift = 2 * p.xi + 2 * p.zeta
    else:
        shift = 2 * p.xi - 2 * p.zeta
    b_n = parity_sign(n + 1) * shift - 1
    if n == 0:
        u_n = Fraction(0)
    else:
        u_n = 4 * mu_number(n, p.xi) * mu_number(p.N - n + 1, p.zeta)
    return RecurrencePair(b_n, u_n)


def recurrence_table(p: HahnParams) -> List[RecurrencePair]:
    return [recurrence_coefficients(p, nn) for nn in range(p.N + 2)]


def eval_all(p: HahnParams, x: RationalLike) -> List[Fraction]:
    r"""Values :math:`Q_0(x), \ldots, Q_N(x)` of the monic polynomials."""
    x = to_rational(x)
    coeffs = recurrence_table(p)
    values = [Fraction(1)]
    prev = Fraction(0)
    for nn in range(p.N):
        nxt = (x - coeffs[nn].b) * values[nn] - coeffs[nn].u * prev
        prev = values[nn]
        values.append(nxt)
    return values


def eval_recurrence(p: HahnParams, n: int, x: RationalLike) -> Fraction:
    r"""Monic :math:`Q_n(x; \alpha, \beta, N)` from the three-term recurrence."""
    if not 0 <= n <= p.N:
        raise ValueError(f"polynomial degree {n} outside 0..{p.N}")
    return eval_all(p, x)[n]


def grid(p: HahnParams, s: int) -> GridPoint:
    r"""Grid point :math:`x_s`, the zeros of :math:`Q_{N+1}`."""
    if not 0 <= s <= p.N:
        raise ValueError(f"grid index {s} outside 0..{p.N}")
    if p.even:
        x_s = parity_sign(s) * (2 * s + 1 - p.alpha - p.beta)
    else:
        x_s = parity_sign(s) * (2 * s + 1 + p.alpha + p.beta)
    return GridPoint(s, x_s)


def grid_values(p: HahnParams) -> List[Fraction]:
    return [grid(p, ss).x for ss in range(p.N + 1)]


def jacobi_matrix(p: HahnParams) -> RMatrix:
    r"""The Jacobi matrix J with :math:`J_{nn} = b_n`, :math:`J_{n,n+1} = 1`
    and :math:`J_{n+1,n} = u_{n+1}`.

    Row n of :math:`J` is the recurrence for :math:`x Q_n`, so the spectrum
    of J is the grid.
    """
    coeffs = recurrence_table(p)

    def entry(ii: int, jj: int) -> Fraction:
        if ii == jj:
            return coeffs[ii].b
        elif jj == ii + 1:
            return Fraction(1)
        elif ii == jj + 1:
            return coeffs[ii].u
        return Fraction(0)

    return RMatrix.from_function(p.dim, p.dim, entry)


def value_matrix(p: HahnParams) -> RMatrix:
    r"""The matrix with entries :math:`Q_n(x_s)`, rows n and columns s."""
    columns = [eval_all(p, xx) for xx in grid_values(p)]
    return RMatrix.from_columns(columns)
