import re
from fractions import (
    Fraction,
)
from typing import (
    Iterable,
    Union,
)

from mhahn.constants import (
    rational_pattern,
)
from mhahn.errors import (
    RationalSyntaxError,
)

RationalLike = Union[Fraction, int, str]

_rational_re = re.compile(rational_pattern)


def to_rational(value: RationalLike) -> Fraction:
    r"""Convert a value to an exact rational.

    Parameters
    ----------
    value : Fraction, int or str
        Strings use the syntax ``p/q`` with an optional sign on ``p``;
        integers are accepted as shorthand. Floats and decimal strings
        are rejected.

    Returns
    -------
    Fraction
        The value in lowest terms.
    """
    if isinstance(value, bool):
        raise RationalSyntaxError(f"a boolean is not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _rational_re.match(value)
        if match is None:
            raise RationalSyntaxError(
                f"cannot parse '{value}' as an exact rational, expected p/q"
            )
        den = int(match.group(2)) if match.group(2) is not None else 1
        if den == 0:
            raise RationalSyntaxError(f"zero denominator in '{value}'")
        return Fraction(int(match.group(1)), den)
    raise RationalSyntaxError(
        f"cannot interpret {value!r} (type {type(value).__name__}) as an exact rational"
    )


def format_rational(value: RationalLike) -> str:
    r"""Format as ``p/q``, or ``p`` when the denominator is one."""
    return str(to_rational(value))


def parse_rational_list(text: str) -> list:
    r"""Parse a comma separated list such as ``1,1/2,-3``."""
    items = [ii for ii in text.split(",") if ii.strip() != ""]
    if len(items) == 0:
        raise RationalSyntaxError(f"empty rational list '{text}'")
    return [to_rational(ii) for ii in items]


def pochhammer(a: RationalLike, n: int) -> Fraction:
    r"""The rising factorial :math:`(a)_n = a(a+1)\cdots(a+n-1)`."""
    assert n >= 0, f"Error: negative Pochhammer length {n}"
    a = to_rational(a)
    ret = Fraction(1)
    for kk in range(n):
        ret *= a + kk
    return ret


def is_nonpositive_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value <= 0


def sign(value: Fraction) -> int:
    if value > 0:
        return 1
    elif value < 0:
        return -1
    return 0


def parity_sign(n: int) -> int:
    r""":math:`(-1)^n`."""
    return -1 if n % 2 else 1


def rational_sum(values: Iterable[Fraction]) -> Fraction:
    return sum(values, Fraction(0))


def approx(value: Fraction, digits: int) -> str:
    r"""Decimal rendering for the labeled ``--approx`` columns only."""
    return f"{float(value):.{digits}g}"
