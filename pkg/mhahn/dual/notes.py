r"""Entry-wise comparison of the closed-form blocks with the derived ones.

Every entry where the verbatim closed forms differ from the derivation is
recorded. A discrepancy is explained when it is one of the
:data:`known_issues` and the closed forms with those issues corrected
reproduce the derivation exactly; anything else is unexplained.
"""

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
)

from mhahn.core import (
    format_rational,
)
from mhahn.errors import (
    SingularFormula,
)
from mhahn.poly import (
    HahnParams,
)
from mhahn.report import (
    VerificationReport,
)

from .derive import (
    derive_dual_rep,
)
from .free_params import (
    FreeParams,
)
from .printed import (
    KnownIssue,
    build_dual_rep_printed,
    known_issues,
)
from .rep import (
    DualRep,
    block_label,
)
from .verify import (
    verify_dual_rep,
)


@dataclass(frozen=True)
class Discrepancy:
    matrix: str
    row: int
    col: int
    block: str
    printed: Fraction
    derived: Fraction
    known: Optional[KnownIssue] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "matrix": self.matrix,
            "row": self.row,
            "col": self.col,
            "block": self.block,
            "printed": format_rational(self.printed),
            "derived": format_rational(self.derived),
            "known": self.known is not None,
        }


@dataclass
class TranscriptionNotes:
    r"""Printed against derived for one parameter point.

    Attributes
    ----------
    discrepancies : list of Discrepancy
        Entries where the verbatim closed forms differ from the derivation.
    derived_report : VerificationReport
        :func:`verify_dual_rep` on the derived representation.
    corrected_agrees : bool or None
        Whether the closed forms with :data:`known_issues` applied equal
        the derivation; None if a closed form is singular here.
    printed_error : str
        Message of the :class:`SingularFormula` raised by the closed forms.
    """

    params: HahnParams
    fp: FreeParams
    discrepancies: List[Discrepancy] = field(default_factory=list)
    derived_report: Optional[VerificationReport] = None
    corrected_agrees: Optional[bool] = None
    printed_error: str = ""

    @property
    def explained(self) -> bool:
        r"""The derivation verifies and every discrepancy is a corrected known issue."""
        return (
            self.derived_report is not None
            and self.derived_report.passed()
            and self.corrected_agrees is not False
            and len(self.unknown()) == 0
        )

    def unexplained(self) -> List[Discrepancy]:
        r"""All discrepancies if the derivation fails or the corrections do not
        reproduce it, otherwise those outside :data:`known_issues`.
        """
        if (
            self.derived_report is None
            or not self.derived_report.passed()
            or self.corrected_agrees is False
        ):
            return list(self.discrepancies)
        return self.unknown()

    def unknown(self) -> List[Discrepancy]:
        r"""Discrepancies outside :data:`known_issues`."""
        return [dd for dd in self.discrepancies if dd.known is None]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            self.fp.name: self.fp.to_list(),
            "explained": self.explained,
            "corrected_agrees": self.corrected_agrees,
            "printed_error": self.printed_error,
            "discrepancies": [dd.to_dict() for dd in self.discrepancies],
        }


def _match_issue(p: HahnParams, block: str, row: int, col: int) -> Optional[KnownIssue]:
    parity = "even" if p.even else "odd"
    name = block.split("_")[0]
    for issue in known_issues:
        if (
            issue.parity == parity
            and issue.block == name
            and issue.entry == (row % 2, col % 2)
        ):
            return issue
    return None


def diff_reps(printed: DualRep, derived: DualRep) -> List[Discrepancy]:
    ret = []
    p = derived.params
    for name in ("K1", "K2", "P"):
        lhs, rhs = getattr(printed, name), getattr(derived, name)
        for ii in range(derived.dim):
            for jj in range(derived.dim):
                if lhs[ii, jj] != rhs[ii, jj]:
                    block = block_label(name, ii, jj)
                    ret.append(
                        Discrepancy(
                            matrix=name,
                            row=ii,
                            col=jj,
                            block=block,
                            printed=lhs[ii, jj],
                            derived=rhs[ii, jj],
                            known=_match_issue(p, block, ii, jj),
                        )
                    )
    return ret


def compare_printed_derived(p: HahnParams, fp: FreeParams) -> List[Discrepancy]:
    r"""Entries where the verbatim closed forms and the derivation differ."""
    return diff_reps(build_dual_rep_printed(p, fp), derive_dual_rep(p, fp))


def transcription_notes(p: HahnParams, fp: FreeParams) -> TranscriptionNotes:
    derived = derive_dual_rep(p, fp)
    ret = TranscriptionNotes(
        params=p,
        fp=fp,
        derived_report=verify_dual_rep(derived, strict=False),
    )
    try:
        printed = build_dual_rep_printed(p, fp)
        corrected = build_dual_rep_printed(p, fp, corrected=True)
    except SingularFormula as err:
        logging.warning("closed forms unavailable at %s: %s", p.key(), err)
        ret.printed_error = str(err)
        return ret
    ret.discrepancies = diff_reps(printed, derived)
    ret.corrected_agrees = len(diff_reps(corrected, derived)) == 0
    if len(ret.discrepancies) > 0:
        logging.warning(
            "%d closed-form entries replaced by derived ones at %s (%d outside the known issues)",
            len(ret.discrepancies),
            p.key(),
            len(ret.unknown()),
        )
    return ret


def render_notes(notes: Sequence[TranscriptionNotes]) -> str:
    r"""Markdown rendering of the known issues and of each parameter point."""
    lines = [
        "# Transcription notes",
        "",
        "## Known issues of the closed-form blocks",
        "",
        "| N | block | entry | printed | consistent |",
        "|---|---|---|---|---|",
    ]
    for issue in known_issues:
        lines.append(
            f"| {issue.parity} | {issue.block}_p | {issue.entry} "
            f"| {issue.printed} | {issue.consistent} |"
        )
    lines += ["", "## Parameter points", ""]
    for nn in notes:
        status = "explained" if nn.explained else "UNEXPLAINED"
        lines.append(
            f"### {nn.params.key()} {nn.fp.name}=({', '.join(nn.fp.to_list())})"
        )
        lines.append("")
        if nn.printed_error:
            lines.append(f"closed forms singular: {nn.printed_error}")
            lines.append("")
            continue
        lines.append(
            f"{len(nn.discrepancies)} discrepancies ({status}, "
            f"{len(nn.unknown())} outside the known issues); "
            f"corrected closed forms agree: {'yes' if nn.corrected_agrees else 'no'}"
        )
        lines.append("")
        if len(nn.discrepancies) > 0:
            lines += [
                "| matrix | entry | block | printed | derived |",
                "|---|---|---|---|---|",
            ]
            for dd in nn.discrepancies:
                lines.append(
                    f"| {dd.matrix} | ({dd.row},{dd.col}) | {dd.block} "
                    f"| {format_rational(dd.printed)} | {format_rational(dd.derived)} |"
                )
            lines.append("")
    return "\n".join(lines) + "\n"
