r"""Closed-form blocks of the dual representation.

The blocks are evaluated in the unit gauge and the free parameters enter
through :math:`T^{-1} X T` with :math:`T = \mathrm{diag}(t)`, which
multiplies entry (l, k) by :math:`t_k / t_l`. Entries whose printed
closed form differs from the consistent one are listed in
:data:`known_issues`; ``corrected=True`` applies them.
"""

from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
from typing import (
    Callable,
    Dict,
    List,
    Tuple,
)

import numpy as np

from mhahn.core import (
    RMatrix,
)
from mhahn.errors import (
    SingularFormula,
)
from mhahn.poly import (
    HahnParams,
)

from .free_params import (
    FreeParams,
)
from .rep import (
    DualRep,
    dual_spectrum,
    n_blocks,
)

Block = Dict[Tuple[int, int], Fraction]


@dataclass(frozen=True)
class KnownIssue:
    r"""A printed entry that fails the defining relations.

    ``entry`` is the (row, column) inside the 2x2 block.
    """

    parity: str
    block: str
    entry: Tuple[int, int]
    printed: str
    consistent: str


known_issues: List[KnownIssue] = [
    KnownIssue(
        "odd",
        "Gamma",
        (1, 0),
        "gauge ratio theta_{2p+1}/theta_{2p}",
        "theta_{2p}/theta_{2p+1}, as with gamma_p in the one-parameter display",
    ),
    KnownIssue(
        "odd",
        "U",
        (1, 0),
        "denominator factor (4p+4+alpha+beta), gauge ratio theta_{2p}/theta_{2p+1}",
        "(4p+2+alpha+beta) as in the two-parameter display, ratio theta_{2p}/theta_{2p-1}",
    ),
    KnownIssue(
        "odd",
        "U",
        (1, 1),
        "numerator factor (2p+1+alpha+beta)",
        "(2p+1+beta) as in the two-parameter display",
    ),
    KnownIssue(
        "even",
        "C",
        (1, 0),
        "(N-2p)(alpha^2-beta^2)/(...)",
        "(2p-N)(alpha^2-beta^2)/(...), the opposite sign",
    ),
]


# N odd, S = alpha + beta


def _gamma_odd(p: HahnParams, q: int, corrected: bool) -> Block:
    a, b, S = p.alpha, p.beta, p.alpha + p.beta
    den = 4 * q + 2 + S
    d = (b - a) / den
    return {
        (0, 0): d,
        (0, 1): 2 * (2 * q + 1 + b) / den,
        (1, 0): 2 * (2 * q + 1 + a) / den,
        (1, 1): -d,
    }


def _c_odd(p: HahnParams, q: int, corrected: bool) -> Block:
    a, b, N, S = p.alpha, p.beta, p.N, p.alpha + p.beta
    den3 = (4 * q + S) * (4 * q + 2 + S) * (4 * q + 4 + S)
    upper_left = (
        2 * q
        - 2 * q * (N + 1 - 2 * q) * (2 * q + a) / (4 * q + S)
        + (2 * q + 1) * (N - 2 * q) * (2 * q + 1 + a) / (4 * q + 2 + S)
    )
    lower_right = (
        2 * q
        + 1
        - (2 * q + 1) * (N - 2 * q) * (2 * q + 1 + a) / (4 * q + 2 + S)
        + (2 * q + 2) * (N - 2 * q - 1) * (2 * q + 2 + a) / (4 * q + 4 + S)
    )
    return {
        (0, 0): upper_left,
        (0, 1): -(2 * q + 1 + b) * (2 * N + 2 + S) * S / den3,
        (1, 0): -(2 * q + 1 + a) * (2 * N + 2 + S) * S / den3,
        (1, 1): lower_right,
    }


def _u_odd(p: HahnParams, q: int, corrected: bool) -> Block:
    a, b, N, S = p.alpha, p.beta, p.N, p.alpha + p.beta
    tail = N + 1 + 2 * q + S
    third = 4 * q + 2 + S if corrected else 4 * q + 4 + S
    lead = 2 * q + 1 + b if corrected else 2 * q + 1 + S
    return {
        (0, 0): (2 * q - 1 + b) * tail / ((4 * q - 2 + S) * (4 * q + S)),
        (0, 1): Fraction(0),
        (1, 0): 2 * (a - b) * tail / ((4 * q - 2 + S) * (4 * q + S) * third),
        (1, 1): lead * tail / ((4 * q + S) * (4 * q + 2 + S)),
    }


def _d_odd(p: HahnParams, q: int, corrected: bool) -> Block:
    a, b, N, S = p.alpha, p.beta, p.N, p.alpha + p.beta
    head = (2 * q + 2) * (N - 2 * q - 1) * (2 * q + 2 + S)
    return {
        (0, 0): head * (2 * q + 1 + a) / ((4 * q + 2 + S) * (4 * q + 4 + S)),
        (0, 1): 2
        * head
        * (a - b)
        / ((4 * q + 2 + S) * (4 * q + 4 + S) * (4 * q + 6 + S)),
        (1, 0): Fraction(0),
        (1, 1): head * (2 * q + 3 + a) / ((4 * q + 4 + S) * (4 * q + 6 + S)),
    }


# N even, S = alpha + beta


def _gamma_even(p: HahnParams, q: int, corrected: bool) -> Block:
    N, S = p.N, p.alpha + p.beta
    if 2 * q == N:
        return {(0, 0): Fraction(1)}
    den = 4 * q + 2 - S
    d = (2 * N + 2 - S) / den
    return {
        (0, 0): d,
        (0, 1): 2 * (N + 2 * q + 2 - S) / den,
        (1, 0): 2 * (2 * q - N) / den,
        (1, 1): -d,
    }


def _c_even(p: HahnParams, q: int, corrected: bool) -> Block:
    a, b, N, S = p.alpha, p.beta, p.N, p.alpha + p.beta
    if 2 * q == N:
        return {(0, 0): N - N * (N - a) / (2 * N - S)}
    den3 = (4 * q - S) * (4 * q + 2 - S) * (4 * q + 4 - S)
    upper_left = (
        2 * q
        + (N - 2 * q) * (2 * q + 1) * (2 * q + 1 - a) / (4 * q + 2 - S)
        - 2 * q * (N + 1 - 2 * q) * (2 * q - a) / (4 * q - S)
    )
    lower_right = (
        2 * q
        + 1
        - (N - 2 * q) * (2 * q + 1) * (2 * q + 1 - a) / (4 * q + 2 - S)
        + (2 * q + 2) * (N - 2 * q - 1) * (2 * q + 2 - a) / (4 * q + 4 - S)
    )
    lower_left = (N - 2 * q) * (a * a - b * b) / den3
    return {
        (0, 0): upper_left,
        (0, 1): (N + 2 * q + 2 - S) * (a * a - b * b) / den3,
        (1, 0): -lower_left if corrected else lower_left,
        (1, 1): lower_right,
    }


def _u_even(p: HahnParams, q: int, corrected: bool) -> Block:
    N, S = p.N, p.alpha + p.beta
    head = 2 * q * (N + 2 - 2 * q) * (2 * q - S)
    ret = {
        (0, 0): head * (2 * q + N - S) / ((4 * q - 2 - S) * (4 * q - S)),
        (1, 0): -2
        * head
        * (2 * N + 2 - S)
        / ((4 * q - 2 - S) * (4 * q - S) * (4 * q + 2 - S)),
    }
    if 2 * q < N:
        ret[(0, 1)] = Fraction(0)
        ret[(1, 1)] = head * (N + 2 * q + 2 - S) / ((4 * q - S) * (4 * q + 2 - S))
    return ret


def _d_even(p: HahnParams, q: int, corrected: bool) -> Block:
    a, b, N, S = p.alpha, p.beta, p.N, p.alpha + p.beta
    head = (2 * q + 2 - a) * (2 * q + 2 - b)
    ret = {
        (0, 0): head / ((4 * q + 2 - S) * (4 * q + 4 - S)),
        (0, 1): 2
        * head
        * (2 * N + 2 - S)
        / ((N - 2 * q) * (4 * q + 2 - S) * (4 * q + 4 - S) * (4 * q + 6 - S)),
    }
    if 2 * q + 3 <= N:
        ret[(1, 0)] = Fraction(0)
        ret[(1, 1)] = (
            (N - 2 * q - 2)
            * head
            / ((N - 2 * q) * (4 * q + 4 - S) * (4 * q + 6 - S))
        )
    return ret


BlockFunc = Callable[[HahnParams, int, bool], Block]


def _eval(label: str, q: int, p: HahnParams, func: BlockFunc, corrected: bool):
    try:
        return func(p, q, corrected)
    except ZeroDivisionError as err:
        raise SingularFormula(
            f"closed form of {label}_{q} has a vanishing denominator at {p.key()}"
        ) from err


def printed_anchor_gamma(p: HahnParams, q: int) -> Fraction:
    r"""Unit-gauge :math:`\Gamma_q[0][1]`, the entry :math:`P[2q][2q+1]`."""
    func = _gamma_even if p.even else _gamma_odd
    return _eval("Gamma", q, p, func, True)[(0, 1)]


def printed_anchor_u(p: HahnParams, q: int) -> Fraction:
    r"""Unit-gauge :math:`U_q[0][0]`, the entry :math:`K_1[2q-2][2q]`."""
    func = _u_even if p.even else _u_odd
    return _eval("U", q, p, func, True)[(0, 0)]


def _place(arr: np.ndarray, row0: int, col0: int, block: Block):
    dim = arr.shape[0]
    for (ii, jj), value in block.items():
        if row0 + ii < dim and col0 + jj < dim:
            arr[row0 + ii, col0 + jj] = value


def unit_gauge_printed(
    p: HahnParams, corrected: bool = False
) -> Tuple[RMatrix, RMatrix]:
    r"""Closed-form :math:`(K_1, P)` in the unit gauge."""
    if p.even:
        gamma, cc, uu, dd = _gamma_even, _c_even, _u_even, _d_even
    else:
        gamma, cc, uu, dd = _gamma_odd, _c_odd, _u_odd, _d_odd
    dim = p.dim
    nb = n_blocks(dim)
    K1 = np.full((dim, dim), Fraction(0), dtype=object)
    P = np.full((dim, dim), Fraction(0), dtype=object)
    for qq in range(nb):
        _place(P, 2 * qq, 2 * qq, _eval("Gamma", qq, p, gamma, corrected))
        _place(K1, 2 * qq, 2 * qq, _eval("C", qq, p, cc, corrected))
    for qq in range(1, nb):
        _place(K1, 2 * qq - 2, 2 * qq, _eval("U", qq, p, uu, corrected))
    for qq in range(nb - 1):
        _place(K1, 2 * qq + 2, 2 * qq, _eval("D", qq, p, dd, corrected))
    return RMatrix(K1), RMatrix(P)


def _printed_ratios(p: HahnParams) -> Dict[Tuple[str, int, int], Tuple[int, int]]:
    r"""Entries whose printed gauge ratio is not :math:`t_k/t_l`.

    Maps (matrix, row, col) to the (numerator, denominator) indices of
    the printed ratio.
    """
    if p.even:
        return {}
    ret = {}
    for qq in range(n_blocks(p.dim)):
        ret[("P", 2 * qq + 1, 2 * qq)] = (2 * qq + 1, 2 * qq)
    for qq in range(1, n_blocks(p.dim)):
        ret[("K1", 2 * qq - 1, 2 * qq)] = (2 * qq, 2 * qq + 1)
    return ret


def build_dual_rep_printed(
    p: HahnParams, fp: FreeParams, corrected: bool = False
) -> DualRep:
    r"""Assemble the dual representation from the closed-form blocks.

    Parameters
    ----------
    p : HahnParams
        The parameters.
    fp : FreeParams
        :math:`\theta` (N odd) or :math:`\xi` (N even), N+1 nonzero values.
    corrected : bool
        Apply :data:`known_issues` instead of the closed forms as printed.

    Raises
    ------
    SingularFormula
        A closed form has a vanishing denominator at these parameters.
    """
    if fp.N != p.N:
        raise ValueError(f"free parameters are for N={fp.N}, parameters have N={p.N}")
    K1, P = unit_gauge_printed(p, corrected)
    T = fp.matrix()
    Tinv = RMatrix.diag([1 / vv for vv in fp.values])
    gauged = {"K1": (Tinv @ K1 @ T).array(), "P": (Tinv @ P @ T).array()}
    if not corrected:
        unit = {"K1": K1, "P": P}
        for (name, row, col), (num, den) in _printed_ratios(p).items():
            gauged[name][row, col] = unit[name][row, col] * fp[num] / fp[den]
    lambdas = dual_spectrum(p)
    return DualRep(
        K1=RMatrix(gauged["K1"]),
        K2=RMatrix.diag(lambdas),
        P=RMatrix(gauged["P"]),
        params=p,
        fp=fp,
        lambdas=lambdas,
        source="printed (corrected)" if corrected else "printed",
    )
