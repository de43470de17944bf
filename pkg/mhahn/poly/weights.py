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
    Tuple,
)

from mhahn.core import (
    format_rational,
    parity_sign,
    pochhammer,
)

from .params import (
    HahnParams,
)
from .recurrence import (
    eval_all,
    grid_values,
    recurrence_table,
)


@dataclass(frozen=True)
class WeightTable:
    r"""Weights :math:`\omega_s` and norms :math:`v_n` of one parameter set.

    ``source`` is ``"printed"`` when the closed forms were used and
    ``"derived"`` when the table comes from the Christoffel weights.
    """

    omega: Tuple[Fraction, ...]
    v: Tuple[Fraction, ...]
    source: str = "printed"

    def is_positive(self) -> bool:
        return all(ww > 0 for ww in self.omega) and all(vv > 0 for vv in self.v)

    def same_values(self, other: "WeightTable") -> bool:
        return self.omega == other.omega and self.v == other.v

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source,
            "omega": [format_rational(ww) for ww in self.omega],
            "v": [format_rational(vv) for vv in self.v],
        }


def _printed_omega(p: HahnParams, s: int) -> Fraction:
    j, q = divmod(s, 2)
    a, b, N = p.alpha, p.beta, p.N
    if p.even:
        num = (
            pochhammer(Fraction(-N, 2), j + q)
            * pochhammer(1 - a / 2, j)
            * pochhammer(1 - a / 2 - b / 2, j)
        )
        den = pochhammer(1 - b / 2, j) * pochhammer(
            Fraction(N, 2) + 1 - a / 2 - b / 2, j + q
        )
    else:
        num = (
            pochhammer(Fraction(-(N - 1), 2), j)
            * pochhammer(Fraction(1, 2) + a / 2, j + q)
            * pochhammer(1 + a / 2 + b / 2, j)
        )
        den = pochhammer(Fraction(1, 2) + b / 2, j + q) * pochhammer(
            Fraction(N + 3, 2) + a / 2 + b / 2, j
        )
    return parity_sign(j) * num / (pochhammer(1, j) * den)


def _printed_norm(p: HahnParams, n: int) -> Fraction:
    j, q = divmod(n, 2)
    a, b, N = p.alpha, p.beta, p.N
    if p.even:
        tail = pochhammer(1 - (a + b) / 2, N // 2) / pochhammer(1 - b / 2, N // 2)
        body = (
            pochhammer(1 - a / 2, j)
            * pochhammer(Fraction(-N, 2), j + q)
            * pochhammer(b / 2 - Fraction(N, 2), j + q)
        )
    else:
        ceil_half = (N + 1) // 2
        tail = pochhammer(1 + (a + b) / 2, ceil_half) / pochhammer(
            (b + 1) / 2, ceil_half
        )
        body = (
            pochhammer(Fraction(1, 2) + a / 2, j + q)
            * pochhammer(Fraction(1 - N, 2), j)
            * pochhammer(-b / 2 - Fraction(N, 2), j + q)
        )
    return parity_sign(q) * Fraction(16) ** n * pochhammer(1, j) * body * tail


def printed_weights(p: HahnParams) -> WeightTable:
    r"""Weights and norms from the closed forms, split as :math:`s = 2j + q`."""
    return WeightTable(
        tuple(_printed_omega(p, ss) for ss in range(p.dim)),
        tuple(_printed_norm(p, nn) for nn in range(p.dim)),
        source="printed",
    )


def derived_weights(p: HahnParams) -> WeightTable:
    r"""Christoffel weights of the recurrence, normalized to :math:`\omega_0 = 1`.

    With :math:`h_n = u_1 \cdots u_n`,

    .. math::
        \omega_s = v_0 \Big/ \sum_n \frac{Q_n(x_s)^2}{h_n}, \qquad v_n = v_0 h_n.
    """
    coeffs = recurrence_table(p)
    h = [Fraction(1)]
    for nn in range(1, p.dim):
        h.append(h[-1] * coeffs[nn].u)
    inv_omega = []
    for xx in grid_values(p):
        values = eval_all(p, xx)
        inv_omega.append(sum(vv * vv / hh for vv, hh in zip(values, h)))
    v0 = inv_omega[0]
    return WeightTable(
        tuple(v0 / ii for ii in inv_omega),
        tuple(v0 * hh for hh in h),
        source="derived",
    )


def weights(p: HahnParams) -> WeightTable:
    r"""The printed weight table, guarded by the derived one.

    If the closed forms disagree with the Christoffel weights, a warning
    is logged and the derived table is returned.
    """
    derived = derived_weights(p)
    printed = printed_weights(p)
    if printed.same_values(derived):
        return printed
    logging.warning(
        "closed-form weights disagree with the orthogonality relation for %s, "
        "using derived weights",
        p.key(),
    )
    return derived
