import argparse
import sys
from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
from typing import (
    List,
    Optional,
    Tuple,
)

from mhahn.core import (
    parse_rational_list,
    to_rational,
)
from mhahn.errors import (
    InputError,
)


def expand_idx(in_list) -> List[int]:
    r"""Expand index expressions such as ``0-10:2`` (end exclusive) into sorted indices."""
    ret = []
    for ii in in_list:
        if isinstance(ii, int):
            ret.append(ii)
        elif isinstance(ii, str):
            step_str = ii.split(":")
            range_str = step_str[0].split("-")
            try:
                if len(step_str) > 1:
                    step = int(step_str[1])
                else:
                    step = 1
                if len(range_str) == 2:
                    ret += range(int(range_str[0]), int(range_str[1]), step)
                elif len(range_str) == 1:
                    ret += [int(range_str[0])]
                else:
                    raise InputError(f"not expected range string {step_str[0]}")
            except ValueError as err:
                raise InputError(f"bad index expression '{ii}': {err}") from err
    ret = sorted(list(set(ret)))
    return ret


def _optional_rational(value: Optional[str]) -> Optional[Fraction]:
    return None if value is None else to_rational(value)


@dataclass(frozen=True)
class RunConfig:
    r"""Parsed command line of one invocation.

    Rationals are exact; unset options keep their argparse defaults.
    """

    command: str
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    N: Optional[int] = None
    mu_a: Optional[Fraction] = None
    mu_b: Optional[Fraction] = None
    eps_a: int = 1
    eps_b: int = 1
    params: Optional[Tuple[Fraction, ...]] = None
    format: str = "json"
    approx: bool = False
    output: Optional[str] = None
    cutoff: Optional[int] = None
    notes: bool = False
    config: Optional[str] = None
    seed: Optional[int] = None
    keep_going: bool = False
    n_values: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        dict_args = vars(args)
        params = dict_args.get("params")
        n_values = dict_args.get("n_values")
        return cls(
            command=args.command,
            alpha=_optional_rational(dict_args.get("alpha")),
            beta=_optional_rational(dict_args.get("beta")),
            N=dict_args.get("N"),
            mu_a=_optional_rational(dict_args.get("mu_a")),
            mu_b=_optional_rational(dict_args.get("mu_b")),
            eps_a=dict_args.get("eps_a", 1),
            eps_b=dict_args.get("eps_b", 1),
            params=None if params is None else tuple(parse_rational_list(params)),
            format=dict_args.get("format", "json"),
            approx=dict_args.get("approx", False),
            output=dict_args.get("output"),
            cutoff=dict_args.get("cutoff"),
            notes=dict_args.get("notes", False),
            config=dict_args.get("CONFIG"),
            seed=dict_args.get("seed"),
            keep_going=dict_args.get("keep_going", False),
            n_values=None if n_values is None else tuple(expand_idx(n_values)),
        )


def write_output(text: str, output: Optional[str] = None):
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fp:
            fp.write(text)
