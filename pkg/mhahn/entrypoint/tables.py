import logging
from typing import (
    Any,
    Dict,
    List,
    Tuple,
)

from mhahn.poly import (
    HahnParams,
    grid,
    recurrence_table,
    value_matrix,
    weights,
)
from mhahn.utils import (
    ExactTable,
    dumps_csv,
    dumps_json,
)

from .common import (
    RunConfig,
    write_output,
)


def make_tables(p: HahnParams) -> Tuple[List[ExactTable], Dict[str, Any]]:
    r"""Recurrence, grid, norm and value tables of one parameter set.

    Returns
    -------
    tables : list of ExactTable
        ``recurrence`` (n, b_n, u_n) for n = 0..N+1, ``grid`` (s, x_s,
        omega_s), ``norms`` (n, v_n) and ``values`` with
        :math:`Q_n(x_s)` in row n, column s.
    meta : dict
        The parameters and the source of the weights.
    """
    table = weights(p)
    recurrence = ExactTable("recurrence", ["n", "b", "u"], approx_columns=["b", "u"])
    for nn, pair in enumerate(recurrence_table(p)):
        recurrence.append([nn, pair.b, pair.u])
    grid_table = ExactTable("grid", ["s", "x", "omega"], approx_columns=["omega"])
    for ss in range(p.dim):
        grid_table.append([ss, grid(p, ss).x, table.omega[ss]])
    norms = ExactTable("norms", ["n", "v"], approx_columns=["v"])
    for nn, vv in enumerate(table.v):
        norms.append([nn, vv])
    values = ExactTable.from_matrix("values", value_matrix(p), prefix="s=")
    meta = {"params": p.to_dict(), "weights_source": table.source}
    return [recurrence, grid_table, norms, values], meta


def cmd_tables(cfg: RunConfig) -> int:
    p = HahnParams.make(cfg.alpha, cfg.beta, cfg.N)
    tables, meta = make_tables(p)
    logging.info("tables %s, weights %s", p.key(), meta["weights_source"])
    if cfg.format == "csv":
        text = dumps_csv(tables, with_approx=cfg.approx)
    else:
        text = dumps_json(
            {
                "command": cfg.command,
                **meta,
                "tables": [tt.to_dict(with_approx=cfg.approx) for tt in tables],
            }
        )
    write_output(text, cfg.output)
    return 0
