from dataclasses import (
    dataclass,
)
from fractions import (
    Fraction,
)
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Type,
    Union,
)

from mhahn.core import (
    RMatrix,
    format_rational,
)
from mhahn.errors import (
    VerificationFailure,
)

Residual = Union[RMatrix, Fraction, None]


@dataclass(frozen=True)
class Check:
    r"""The outcome of one exact identity.

    Parameters
    ----------
    name : str
        Short name of the identity, e.g. ``"[K1,K2]=K3"``.
    passed : bool
        Whether the identity holds exactly.
    residual : RMatrix, Fraction or None
        lhs - rhs when the identity is an equality.
    detail : str
        Free text, e.g. the offending index.
    skipped : bool
        The identity does not apply to this input.
    """

    name: str
    passed: bool
    residual: Residual = None
    detail: str = ""
    skipped: bool = False

    @property
    def verdict(self) -> str:
        if self.skipped:
            return "skip"
        return "pass" if self.passed else "FAIL"

    def residual_summary(self) -> str:
        if self.residual is None:
            return "-"
        if isinstance(self.residual, RMatrix):
            if self.residual.is_zero():
                return "0"
            return (
                f"nnz={self.residual.nonzero_count()} "
                f"max={format_rational(self.residual.max_abs())}"
            )
        return format_rational(self.residual)

    def to_dict(self) -> Dict[str, Any]:
        ret: Dict[str, Any] = {
            "name": self.name,
            "verdict": self.verdict,
            "detail": self.detail,
        }
        if isinstance(self.residual, RMatrix):
            ret["residual"] = [
                [format_rational(vv) for vv in row] for row in self.residual.to_list()
            ]
        elif self.residual is not None:
            ret["residual"] = format_rational(self.residual)
        return ret


class VerificationReport:
    r"""An ordered collection of :class:`Check` records.

    A report passes iff every check that was not skipped passes.

    Parameters
    ----------
    title : str
        What was verified.
    context : dict, optional
        Parameters of the verified object, exported with the report.
    """

    def __init__(
        self,
        title: str,
        context: Optional[Dict[str, Any]] = None,
    ):
        self.title = title
        self.context = {} if context is None else dict(context)
        self._checks: List[Check] = []

        print_tuple = ("check", "verdict", "residual", "detail")
        spaces = [44, 8, 24, 0]
        self.fmt_str = " ".join([f"%-{ii}s" for ii in spaces])
        self.header_str = "#" + self.fmt_str % print_tuple

    @property
    def checks(self) -> List[Check]:
        return list(self._checks)

    def __len__(self) -> int:
        return len(self._checks)

    def record(
        self,
        name: str,
        passed: bool,
        residual: Residual = None,
        detail: str = "",
    ) -> Check:
        check = Check(name, bool(passed), residual, detail)
        self._checks.append(check)
        return check

    def record_equal(
        self,
        name: str,
        lhs: RMatrix,
        rhs: Union[RMatrix, Fraction, int],
        detail: str = "",
    ) -> Check:
        r"""Record the matrix identity lhs = rhs, a scalar rhs meaning rhs*I."""
        residual = lhs - rhs
        return self.record(name, residual.is_zero(), residual, detail)

    def record_value(
        self,
        name: str,
        lhs: Fraction,
        rhs: Fraction,
        detail: str = "",
    ) -> Check:
        return self.record(name, lhs == rhs, Fraction(lhs) - Fraction(rhs), detail)

    def skip(self, name: str, detail: str) -> Check:
        check = Check(name, True, None, detail, skipped=True)
        self._checks.append(check)
        return check

    def extend(self, other: "VerificationReport", prefix: Optional[str] = None):
        for check in other.checks:
            if prefix is not None:
                check = Check(
                    f"{prefix}/{check.name}",
                    check.passed,
                    check.residual,
                    check.detail,
                    check.skipped,
                )
            self._checks.append(check)

    def passed(self) -> bool:
        return all(cc.passed for cc in self._checks if not cc.skipped)

    def failures(self) -> List[Check]:
        return [cc for cc in self._checks if not cc.skipped and not cc.passed]

    def first_failure(self) -> Optional[Check]:
        failures = self.failures()
        return failures[0] if len(failures) > 0 else None

    def n_skipped(self) -> int:
        return sum(1 for cc in self._checks if cc.skipped)

    def raise_for_failure(
        self,
        exc_cls: Type[VerificationFailure] = VerificationFailure,
    ) -> "VerificationReport":
        if not self.passed():
            raise exc_cls(self)
        return self

    def print_header(self) -> str:
        r"""Print the header of report"""
        return self.header_str

    def print(self) -> str:
        r"""Print the report, one line per check."""
        lines = [
            " "
            + (
                self.fmt_str
                % (cc.name, cc.verdict, cc.residual_summary(), cc.detail)
            ).rstrip()
            for cc in self._checks
        ]
        return "\n".join(lines)

    def summary(self) -> str:
        return (
            f"{self.title}: {'pass' if self.passed() else 'FAIL'} "
            f"({len(self._checks) - len(self.failures()) - self.n_skipped()} passed, "
            f"{len(self.failures())} failed, {self.n_skipped()} skipped)"
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "context": self.context,
            "passed": self.passed(),
            "checks": [cc.to_dict() for cc in self._checks],
        }
