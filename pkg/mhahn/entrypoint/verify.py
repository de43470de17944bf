r"""Verification suites behind the ``verify-h``, ``verify-sl``, ``cg`` and
``dual-rep`` commands and the sweep cells.

Every suite runs its checks with ``strict=False`` and returns one report,
so that the output lists each check. Failures that abort an operation
before a report exists are folded in through the report they carry.
"""

import logging
from fractions import (
    Fraction,
)
from typing import (
    Any,
    Callable,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple,
)

from mhahn.algebra import (
    build_realization,
    transition_matrix,
    verify_casimir,
    verify_pentadiagonality,
    verify_relations,
    verify_symmetrization,
    verify_tilde,
)
from mhahn.constants import (
    approx_digits,
    default_module_cutoff,
)
from mhahn.core import (
    has_spectrum,
)
from mhahn.dual import (
    DualRep,
    FreeParams,
    TranscriptionNotes,
    derive_dual_rep,
    transcription_notes,
    verify_dual_rep,
    verify_similarity,
)
from mhahn.errors import (
    PoleInLowerParameter,
    VerificationFailure,
)
from mhahn.poly import (
    HahnParams,
    eval_hypergeometric,
    eval_recurrence,
    grid_values,
    verify_orthogonality,
)
from mhahn.report import (
    VerificationReport,
)
from mhahn.slminus import (
    CGTable,
    CouplingProblem,
    ModuleLabel,
    cg_mapping,
    clebsch_gordan,
    coupled_operators,
    verify_casimir_spectrum,
    verify_cg_orthonormality,
    verify_cg_polynomial_match,
    verify_coproduct_casimir,
    verify_highest_vector,
    verify_kappa_is_H,
    verify_kappa_relations,
    verify_module_relations,
    verify_parabose,
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


def _run(
    report: VerificationReport,
    prefix: str,
    func: Callable[[], VerificationReport],
):
    try:
        sub = func()
    except VerificationFailure as err:
        sub = err.report
    report.extend(sub, prefix=prefix)


def check_hypergeometric(
    p: HahnParams, points: Sequence[Fraction] = ()
) -> VerificationReport:
    r"""Hypergeometric against recurrence evaluation at the grid and at ``points``.

    A pole of a lower parameter skips the affected check.
    """
    report = VerificationReport("hypergeometric representation", p.to_dict())
    for xx in list(grid_values(p)) + list(points):
        for nn in range(p.dim):
            name = f"Q_{nn}({xx}) hyp=rec"
            try:
                value = eval_hypergeometric(p, nn, xx)
            except PoleInLowerParameter as err:
                logging.warning("skip %s at %s: %s", name, p.key(), err)
                report.skip(name, str(err))
                continue
            report.record_value(name, value, eval_recurrence(p, nn, xx))
    return report


def suite_poly(p: HahnParams, points: Sequence[Fraction] = ()) -> VerificationReport:
    report = VerificationReport("polynomials", p.to_dict())
    _run(report, "orthogonality", lambda: verify_orthogonality(p, strict=False))
    _run(report, "transition", lambda: transition_matrix(p, strict=False).report)
    _run(report, "hypergeometric", lambda: check_hypergeometric(p, points))
    return report


def suite_h(p: HahnParams) -> VerificationReport:
    report = VerificationReport("algebra", p.to_dict())
    g = build_realization(p)
    _run(report, "relations", lambda: verify_relations(g, strict=False))
    _run(report, "casimir", lambda: verify_casimir(g, strict=False))
    report.record(
        "spec(2K2)={x_s}", has_spectrum(2 * g.K2, grid_values(p)), detail=p.key()
    )
    _run(report, "pentadiagonality", lambda: verify_pentadiagonality(p, strict=False))
    _run(report, "tilde", lambda: verify_tilde(g, strict=False))
    _run(report, "symmetrization", lambda: verify_symmetrization(g, strict=False))
    return report


def suite_module(label: ModuleLabel, cutoff: int) -> VerificationReport:
    report = VerificationReport("module", {**label.to_dict(), "cutoff": cutoff})
    _run(report, "parabose", lambda: verify_parabose(label, cutoff, strict=False))
    _run(
        report,
        "relations",
        lambda: verify_module_relations(label, cutoff, strict=False),
    )
    return report


def suite_kappa(cp: CouplingProblem) -> VerificationReport:
    report = VerificationReport("coupled operators", cp.to_dict())
    _run(
        report,
        "kappa",
        lambda: verify_kappa_relations(coupled_operators(cp), strict=False),
    )
    _run(report, "spectrum", lambda: verify_casimir_spectrum(cp, strict=False))
    _run(report, "coproduct", lambda: verify_coproduct_casimir(cp, strict=False))
    _run(report, "highest", lambda: verify_highest_vector(cp, strict=False))
    if cp.a.epsilon == 1 and cp.b.epsilon == 1:
        _run(report, "kappa=H", lambda: verify_kappa_is_H(cp, strict=False))
    else:
        report.skip("kappa=H", "needs eps_a = eps_b = 1")
    return report


def suite_sl(cp: CouplingProblem, cutoff: int) -> VerificationReport:
    report = VerificationReport("sl_-1(2)", {**cp.to_dict(), "cutoff": cutoff})
    report.extend(suite_module(cp.a, cutoff), prefix="module a")
    report.extend(suite_module(cp.b, cutoff), prefix="module b")
    report.extend(suite_kappa(cp))
    return report


def suite_cg(cp: CouplingProblem) -> Tuple[Optional[CGTable], VerificationReport]:
    report = VerificationReport("clebsch-gordan", cp.to_dict())
    try:
        table = clebsch_gordan(cp)
    except VerificationFailure as err:
        report.extend(err.report, prefix="eigenvectors")
        return None, report
    _run(
        report,
        "orthonormality",
        lambda: verify_cg_orthonormality(table, strict=False),
    )
    if cp.a.epsilon == 1 and cp.b.epsilon == 1:
        _run(
            report,
            "polynomials",
            lambda: verify_cg_polynomial_match(cp, table, strict=False),
        )
    else:
        report.skip("polynomials", "needs eps_a = eps_b = 1")
    return table, report


def suite_dual(
    p: HahnParams, fp: FreeParams, with_notes: bool = True
) -> Tuple[Optional[DualRep], VerificationReport, Optional[TranscriptionNotes]]:
    report = VerificationReport(
        "dual representation", {**p.to_dict(), fp.name: fp.to_list()}
    )
    try:
        d = derive_dual_rep(p, fp)
    except VerificationFailure as err:
        report.extend(err.report, prefix="derivation")
        return None, report, None
    _run(report, "derived", lambda: verify_dual_rep(d, strict=False))
    _run(report, "similarity", lambda: verify_similarity(p, d, strict=False))
    notes = None
    if with_notes:
        notes = transcription_notes(p, fp)
        report.record(
            "unexplained discrepancies=0",
            notes.explained,
            detail=(
                f"{len(notes.discrepancies)} discrepancies, "
                f"{len(notes.unknown())} outside the known issues, "
                f"corrected closed forms agree: {notes.corrected_agrees}"
            ),
        )
    return d, report, notes


def report_table(report: VerificationReport, name: str = "checks") -> ExactTable:
    ret = ExactTable(name, ["check", "verdict", "residual", "detail"])
    for cc in report.checks:
        ret.append([cc.name, cc.verdict, cc.residual_summary(), cc.detail])
    return ret


def approx_signed(table: CGTable, n: int, k: int) -> str:
    r"""Decimal :math:`\mathrm{sign}(C_{n,k}) \sqrt{C_{n,k}^2}`."""
    return f"{table.approx(n, k):.{approx_digits}g}"


def _cg_tables(table: CGTable) -> List[ExactTable]:
    squares = ExactTable.from_matrix("cg_squares", table.squares, prefix="k=")
    squares.approx_values = [
        [approx_signed(table, nn, kk) for kk in range(table.dim)]
        for nn in range(table.dim)
    ]
    signs = ExactTable(
        "cg_signs",
        [f"k={kk}" for kk in range(table.dim)],
        [list(row) for row in table.signs],
    )
    return [squares, signs]


def _coupling_problem(cfg: RunConfig) -> CouplingProblem:
    return CouplingProblem.make(cfg.mu_a, cfg.mu_b, cfg.N, cfg.eps_a, cfg.eps_b)


def cmd_verify(cfg: RunConfig) -> int:
    r"""Run the suite of ``verify-h``, ``verify-sl``, ``cg`` or ``dual-rep``.

    Returns 0 when every check passes and 1 otherwise.
    """
    payload: Dict[str, Any] = {"command": cfg.command}
    tables: List[ExactTable] = []
    if cfg.command == "verify-h":
        p = HahnParams.make(cfg.alpha, cfg.beta, cfg.N)
        report = VerificationReport("verify-h", p.to_dict())
        report.extend(suite_poly(p), prefix="poly")
        report.extend(suite_h(p), prefix="h")
    elif cfg.command == "verify-sl":
        cutoff = default_module_cutoff if cfg.cutoff is None else cfg.cutoff
        report = suite_sl(_coupling_problem(cfg), cutoff)
    elif cfg.command == "cg":
        cp = _coupling_problem(cfg)
        table, report = suite_cg(cp)
        payload["problem"] = cp.to_dict()
        if table is not None:
            payload["cg"] = table.to_dict()
            if cfg.approx:
                payload["cg"]["approx"] = [
                    [approx_signed(table, nn, kk) for kk in range(table.dim)]
                    for nn in range(table.dim)
                ]
            tables += _cg_tables(table)
        if cp.a.epsilon == 1 and cp.b.epsilon == 1:
            payload["mapping"] = cg_mapping(cp).to_dict()
    elif cfg.command == "dual-rep":
        p = HahnParams.make(cfg.alpha, cfg.beta, cfg.N)
        if cfg.params is None:
            fp = FreeParams.unit(cfg.N)
        else:
            fp = FreeParams.make(cfg.params, cfg.N)
        d, report, notes = suite_dual(p, fp)
        if d is not None:
            payload["dual"] = d.to_dict()
            for label, index, mm in d.blocks():
                tables.append(ExactTable.from_matrix(f"{label}_{index}", mm))
        if cfg.notes and notes is not None:
            payload["notes"] = notes.to_dict()
            diffs = ExactTable(
                "discrepancies", ["matrix", "row", "col", "block", "printed", "derived"]
            )
            for dd in notes.discrepancies:
                diffs.append(
                    [dd.matrix, dd.row, dd.col, dd.block, dd.printed, dd.derived]
                )
            tables.append(diffs)
    else:
        raise RuntimeError(f"unknown verification command {cfg.command}")

    logging.info("%s", report.summary())
    for check in report.failures():
        logging.info("failed %s: %s", check.name, check.detail)
    if cfg.format == "csv":
        text = dumps_csv(tables + [report_table(report)], with_approx=cfg.approx)
    else:
        payload["report"] = report.to_dict()
        text = dumps_json(payload)
    write_output(text, cfg.output)
    return 0 if report.passed() else 1
