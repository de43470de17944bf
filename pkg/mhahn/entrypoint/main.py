import argparse
import logging
import textwrap
from typing import (
    List,
    Optional,
)

from mhahn import (
    __version__,
)
from mhahn.constants import (
    default_module_cutoff,
)
from mhahn.errors import (
    InputError,
)

from .common import (
    RunConfig,
)
from .sweep import (
    cmd_sweep,
)
from .tables import (
    cmd_tables,
)
from .verify import (
    cmd_verify,
)

verify_commands = ("verify-h", "verify-sl", "cg", "dual-rep")


def _add_hahn_args(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--alpha", type=str, required=True, help="alpha as p/q, e.g. 3 or 7/2."
    )
    parser.add_argument("--beta", type=str, required=True, help="beta as p/q.")
    parser.add_argument(
        "--N", type=int, required=True, help="the degree bound N >= 0."
    )


def _add_coupling_args(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--mu-a", type=str, required=True, help="mu of the first module, p/q >= 0."
    )
    parser.add_argument(
        "--mu-b", type=str, required=True, help="mu of the second module, p/q >= 0."
    )
    parser.add_argument(
        "--N", type=int, required=True, help="the total degree N >= 0."
    )
    parser.add_argument(
        "--eps-a",
        type=int,
        choices=[1, -1],
        default=1,
        help="sign of the first module.",
    )
    parser.add_argument(
        "--eps-b",
        type=int,
        choices=[1, -1],
        default=1,
        help="sign of the second module.",
    )


def _add_output_args(
    parser: argparse.ArgumentParser,
    formats: List[str],
    default: str,
    approx: bool = False,
):
    parser.add_argument(
        "--format",
        type=str,
        choices=formats,
        default=default,
        help="the output format.",
    )
    parser.add_argument(
        "-o",
        "--output",
        type=str,
        default=None,
        help="write to this file instead of the standard output.",
    )
    if approx:
        parser.add_argument(
            "--approx",
            action="store_true",
            help="add decimal columns labeled approx; the exact values are kept.",
        )


def main_parser() -> argparse.ArgumentParser:
    """MHAHN commandline options argument parser.

    Notes
    -----
    This function is used by documentation.

    Returns
    -------
    argparse.ArgumentParser
        the argument parser
    """
    parser = argparse.ArgumentParser(
        description="MHAHN: exact verification of the dual -1 Hahn polynomials, "
        "the algebra H and the Clebsch-Gordan problem of sl_-1(2).",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    subparsers = parser.add_subparsers(title="Valid subcommands", dest="command")

    ##########################################
    # tables
    parser_tables = subparsers.add_parser(
        "tables",
        help="Print the recurrence, grid, weight, norm and value tables",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    _add_hahn_args(parser_tables)
    _add_output_args(parser_tables, ["json", "csv"], "json", approx=True)

    ##########################################
    # verify-h
    parser_verify_h = subparsers.add_parser(
        "verify-h",
        help="Verify orthogonality, the hypergeometric representation and the algebra H",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    _add_hahn_args(parser_verify_h)
    _add_output_args(parser_verify_h, ["json", "csv"], "json")

    ##########################################
    # verify-sl
    parser_verify_sl = subparsers.add_parser(
        "verify-sl",
        help="Verify the sl_-1(2) modules and the coupled operators",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    _add_coupling_args(parser_verify_sl)
    parser_verify_sl.add_argument(
        "--cutoff",
        type=int,
        default=default_module_cutoff,
        help="truncation of the module checks.",
    )
    _add_output_args(parser_verify_sl, ["json", "csv"], "json")

    ##########################################
    # cg
    parser_cg = subparsers.add_parser(
        "cg",
        help="Compute and verify the Clebsch-Gordan coefficients",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    _add_coupling_args(parser_cg)
    _add_output_args(parser_cg, ["json", "csv"], "json", approx=True)

    ##########################################
    # dual-rep
    parser_dual = subparsers.add_parser(
        "dual-rep",
        help="Derive and verify the representation where K2 is diagonal",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    _add_hahn_args(parser_dual)
    parser_dual.add_argument(
        "--params",
        type=str,
        default=None,
        help="N+1 nonzero free parameters p0,p1,... (theta for odd N, xi for even N). All ones if not set.",
    )
    parser_dual.add_argument(
        "--notes",
        action="store_true",
        help="include the comparison with the closed-form blocks.",
    )
    _add_output_args(parser_dual, ["json", "csv"], "json")

    ##########################################
    # sweep
    parser_sweep = subparsers.add_parser(
        "sweep",
        help="Run every check over a parameter lattice",
        description=(
            textwrap.dedent(
                """
            Run every check over a parameter lattice and print one line per cell.

            The lattice is defined by an optional config file in json format, e.g.
            $ mhahn sweep sweep.json --keep-going

            Restrict N with range expressions (end exclusive), e.g.
            $ mhahn sweep --n-values 0-4 7
            """
            )
        ),
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser_sweep.add_argument(
        "CONFIG", nargs="?", default=None, help="the sweep config file in json format."
    )
    parser_sweep.add_argument(
        "--seed",
        type=int,
        default=None,
        help="the seed of the random gauges and points, overrides the config.",
    )
    parser_sweep.add_argument(
        "-k",
        "--keep-going",
        action="store_true",
        help="run every cell instead of stopping at the first failure.",
    )
    parser_sweep.add_argument(
        "-n",
        "--n-values",
        type=str,
        nargs="+",
        default=None,
        help="the values of N to run, support ranging expression as 0-10:2.",
    )
    _add_output_args(parser_sweep, ["text", "json", "csv"], "text")

    # --verbose
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="log at debug level.",
    )
    # --version
    parser.add_argument(
        "-v",
        "--version",
        action="version",
        version="MHAHN v%s" % __version__,
    )

    return parser


def parse_args(args: Optional[List[str]] = None):
    """MHAHN commandline options argument parsing.

    Parameters
    ----------
    args : List[str]
        list of command line arguments, main purpose is testing default option None
        takes arguments from sys.argv
    """
    parser = main_parser()

    parsed_args = parser.parse_args(args=args)
    if parsed_args.command is None:
        parser.print_help()

    return parsed_args


def main(args: Optional[List[str]] = None) -> int:
    """Run a command and return the exit code.

    0 when every check passes, 1 on a verification failure and 2 on an
    input or regime error.
    """
    #####################################
    # logging
    logging.basicConfig(level=logging.INFO)

    args = parse_args(args)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        cfg = RunConfig.from_args(args)
        if args.command == "tables":
            return cmd_tables(cfg)
        elif args.command in verify_commands:
            return cmd_verify(cfg)
        elif args.command == "sweep":
            return cmd_sweep(cfg)
        elif args.command is None:
            return 0
        else:
            raise RuntimeError(f"unknown command {args.command}")
    except InputError as err:
        logging.error("%s", err)
        return 2
