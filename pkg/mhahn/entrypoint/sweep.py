import json
import logging
from dataclasses import (
    dataclass,
    field,
)
from fractions import (
    Fraction,
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from mhahn.constants import (
    cell_key_pattern,
)
from mhahn.core import (
    format_rational,
    to_rational,
)
from mhahn.dual import (
    FreeParams,
)
from mhahn.errors import (
    InputError,
    RegimeError,
)
from mhahn.poly import (
    HahnParams,
    grid_values,
)
from mhahn.slminus import (
    CouplingProblem,
    ModuleLabel,
)
from mhahn.utils import (
    ExactTable,
    dumps_csv,
    dumps_json,
    ordered_map,
    pool_size,
)

from .args import (
    normalize_sweep_config,
)
from .common import (
    RunConfig,
    write_output,
)
from .verify import (
    suite_cg,
    suite_dual,
    suite_h,
    suite_kappa,
    suite_module,
    suite_poly,
)


def default_pairs(N: int) -> List[Tuple[Fraction, Fraction]]:
    r"""Three (alpha, beta) pairs in the positivity regime of N.

    The values are not integers, which keeps the lower parameters of the
    hypergeometric representation away from poles.
    """
    if N % 2 == 0:
        return [
            (N + Fraction(1, 3), N + Fraction(7, 5)),
            (N + Fraction(5, 2), N + Fraction(3, 4)),
            (2 * N + Fraction(11, 3), N + Fraction(9, 7)),
        ]
    return [
        (Fraction(3), Fraction(2)),
        (Fraction(1, 2), Fraction(7, 3)),
        (Fraction(-1, 3), Fraction(5, 4)),
    ]


def lattice_params(N: int, params: Optional[Dict[str, Any]]) -> List[HahnParams]:
    parity = "even" if N % 2 == 0 else "odd"
    explicit = None if params is None else params.get(parity)
    if explicit is None:
        pairs = default_pairs(N)
    else:
        pairs = [(to_rational(aa), to_rational(bb)) for aa, bb in explicit]
    ret = []
    for aa, bb in pairs:
        try:
            ret.append(HahnParams.make(aa, bb, N))
        except RegimeError as err:
            logging.warning("skip lattice point: %s", err)
    return ret


@dataclass(frozen=True)
class SweepCell:
    r"""One independent unit of the sweep.

    ``values`` holds the exact parameters as strings, ``index`` the gauge
    (dual cells) or the lattice position used to seed random draws.
    """

    suite: str
    N: int
    label: str
    values: Tuple[str, ...]
    seed: int = 0
    index: int = 0
    count: int = 0
    cutoff: int = 0

    @property
    def key(self) -> str:
        return cell_key_pattern % (self.suite, self.N, self.label)


@dataclass
class CellResult:
    key: str
    passed: bool
    n_checks: int
    summary: str
    report: Dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "FAIL"

    def line(self) -> str:
        return f"{self.key} {self.verdict} {self.n_checks}"


def _n_range(n_max: int, n_values: Optional[Sequence[int]]) -> List[int]:
    ret = range(n_max + 1)
    if n_values is None:
        return list(ret)
    return [nn for nn in ret if nn in n_values]


def _hahn_label(p: HahnParams) -> str:
    return f"alpha={format_rational(p.alpha)},beta={format_rational(p.beta)}"


def make_cells(
    config: Dict[str, Any],
    n_values: Optional[Sequence[int]] = None,
) -> List[SweepCell]:
    r"""The cells of a normalized sweep config, sorted by key."""
    seed = config["seed"]
    cells = []
    n_max = max(config["n_max"], config["n_max_poly"])
    for N in _n_range(n_max, n_values):
        for ii, p in enumerate(lattice_params(N, config["params"])):
            values = (format_rational(p.alpha), format_rational(p.beta))
            label = _hahn_label(p)
            if N <= config["n_max_poly"]:
                cells.append(
                    SweepCell(
                        "poly", N, label, values, seed, ii, config["random_points"]
                    )
                )
            if N > config["n_max"]:
                continue
            cells.append(SweepCell("h", N, label, values, seed, ii))
            for gg in range(config["gauges"] + 1):
                cells.append(
                    SweepCell(
                        "dual",
                        N,
                        f"{label}:gauge={gg}",
                        values,
                        seed,
                        ii * (config["gauges"] + 1) + gg,
                        gg,
                    )
                )
    mu_values = [format_rational(to_rational(mm)) for mm in config["mu_values"]]
    for N in _n_range(config["n_max_kappa"], n_values):
        for mu_a in mu_values:
            for mu_b in mu_values:
                for eps_a in (1, -1):
                    for eps_b in (1, -1):
                        label = (
                            f"mu_a={mu_a},mu_b={mu_b},"
                            f"eps_a={eps_a:+d},eps_b={eps_b:+d}"
                        )
                        values = (mu_a, mu_b, str(eps_a), str(eps_b))
                        cells.append(SweepCell("kappa", N, label, values))
                        if eps_a == 1 and eps_b == 1:
                            cells.append(SweepCell("cg", N, label, values))
    for eps in (1, -1):
        for mu in mu_values:
            cells.append(
                SweepCell(
                    "module",
                    config["cutoff"],
                    f"eps={eps:+d},mu={mu}",
                    (str(eps), mu),
                    cutoff=config["cutoff"],
                )
            )
    return sorted(cells, key=lambda cc: cc.key)


def _random_points(p: HahnParams, cell: SweepCell) -> List[Fraction]:
    rng = np.random.default_rng([cell.seed, cell.N, cell.index])
    on_grid = set(grid_values(p))
    ret: List[Fraction] = []
    while len(ret) < cell.count:
        xx = Fraction(int(rng.integers(-60, 61)), int(rng.integers(1, 10)))
        if xx not in on_grid and xx not in ret:
            ret.append(xx)
    return ret


def _free_params(cell: SweepCell) -> FreeParams:
    if cell.count == 0:
        return FreeParams.unit(cell.N)
    rng = np.random.default_rng([cell.seed, cell.N, cell.index])
    return FreeParams.random(cell.N, rng)


def run_cell(cell: SweepCell) -> CellResult:
    logging.info("cell %s", cell.key)
    if cell.suite in ("poly", "h", "dual"):
        p = HahnParams.make(cell.values[0], cell.values[1], cell.N)
        if cell.suite == "poly":
            report = suite_poly(p, _random_points(p, cell))
        elif cell.suite == "h":
            report = suite_h(p)
        else:
            report = suite_dual(p, _free_params(cell))[1]
    elif cell.suite in ("kappa", "cg"):
        mu_a, mu_b, eps_a, eps_b = cell.values
        cp = CouplingProblem.make(mu_a, mu_b, cell.N, int(eps_a), int(eps_b))
        if cell.suite == "kappa":
            report = suite_kappa(cp)
        else:
            report = suite_cg(cp)[1]
    elif cell.suite == "module":
        report = suite_module(
            ModuleLabel.make(int(cell.values[0]), cell.values[1]), cell.cutoff
        )
    else:
        raise RuntimeError(f"unknown sweep suite {cell.suite}")
    return CellResult(
        key=cell.key,
        passed=report.passed(),
        n_checks=len(report),
        summary=report.summary(),
        report=report.to_dict(),
    )


def run_sweep(
    cells: Sequence[SweepCell],
    workers: int = 1,
    keep_going: bool = False,
) -> List[CellResult]:
    r"""Run the cells in key order; stop after the first failure unless ``keep_going``."""
    ret = []
    results = ordered_map(run_cell, cells, workers)
    for result in results:
        ret.append(result)
        if not result.passed:
            logging.warning("cell %s failed: %s", result.key, result.summary)
            if not keep_going:
                results.close()
                break
    return ret


def sweep_summary(results: Sequence[CellResult], n_cells: int) -> str:
    n_failed = sum(1 for rr in results if not rr.passed)
    lines = [rr.line() for rr in results]
    lines.append(
        f"# cells {n_cells} run {len(results)} passed {len(results) - n_failed} "
        f"failed {n_failed}"
    )
    return "\n".join(lines) + "\n"


def load_sweep_config(cfg: RunConfig) -> Dict[str, Any]:
    r"""Read and normalize the sweep config; ``--seed`` overrides the file."""
    data: Dict[str, Any] = {}
    if cfg.config is not None:
        try:
            with open(cfg.config, encoding="utf-8") as fp:
                data = json.load(fp)
        except (OSError, json.JSONDecodeError) as err:
            raise InputError(f"cannot read sweep config {cfg.config}: {err}") from err
    if cfg.seed is not None:
        data["seed"] = cfg.seed
    try:
        return normalize_sweep_config(data)
    except Exception as err:
        raise InputError(f"bad sweep config: {err}") from err


def cmd_sweep(cfg: RunConfig) -> int:
    config = load_sweep_config(cfg)
    cells = make_cells(config, cfg.n_values)
    workers = pool_size()
    logging.info("sweep of %d cells on %d workers", len(cells), workers)
    results = run_sweep(cells, workers=workers, keep_going=cfg.keep_going)
    passed = len(results) == len(cells) and all(rr.passed for rr in results)
    logging.info("sweep %s", "pass" if passed else "FAIL")
    if cfg.format == "json":
        text = dumps_json(
            {
                "command": cfg.command,
                "config": config,
                "passed": passed,
                "cells": [
                    {
                        "key": rr.key,
                        "verdict": rr.verdict,
                        "n_checks": rr.n_checks,
                        "report": rr.report,
                    }
                    for rr in results
                ],
            }
        )
    elif cfg.format == "csv":
        table = ExactTable("cells", ["key", "verdict", "n_checks"])
        for rr in results:
            table.append([rr.key, rr.verdict, rr.n_checks])
        text = dumps_csv([table])
    else:
        text = sweep_summary(results, len(cells))
    write_output(text, cfg.output)
    return 0 if passed else 1
