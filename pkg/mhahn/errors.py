"""Exception hierarchy of mhahn.

Input-side errors map to CLI exit code 2, verdict-side errors to exit
code 1.
"""

from typing import (
    TYPE_CHECKING,
    Optional,
)

if TYPE_CHECKING:
    from mhahn.report import (
        VerificationReport,
    )


class MHahnError(RuntimeError):
    r"""Base class of every error raised by mhahn."""


class InputError(MHahnError, ValueError):
    r"""Bad user input: the CLI exits with code 2."""


class RationalSyntaxError(InputError):
    pass


class RegimeError(InputError):
    r"""A parameter set violates the precondition of the invoked module."""


class ZeroParameter(InputError):
    pass


class NonTerminating(InputError):
    pass


class PoleInLowerParameter(MHahnError):
    r"""A lower Pochhammer symbol vanishes before the series terminates."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class SingularMatrixError(MHahnError, ZeroDivisionError):
    pass


class VerificationFailure(MHahnError):
    r"""An exact identity failed.

    Parameters
    ----------
    report : VerificationReport
        The complete report, including the checks that passed.
    """

    def __init__(self, report: "VerificationReport", message: Optional[str] = None):
        if message is None:
            first = report.first_failure()
            message = (
                f"{report.title}: check '{first.name}' failed"
                if first is not None
                else f"{report.title}: failed"
            )
            if first is not None and first.detail:
                message += f" ({first.detail})"
        super().__init__(message)
        self.report = report


class OrthogonalityViolation(VerificationFailure):
    pass


class RelationViolation(VerificationFailure):
    pass


class BandwidthViolation(VerificationFailure):
    pass


class MatchViolation(VerificationFailure):
    pass


class InconsistentSystem(VerificationFailure):
    pass


class NoIntertwiner(VerificationFailure):
    pass


class SingularTransition(VerificationFailure):
    pass


class DegenerateEigenvalue(VerificationFailure):
    pass


class PhaseUndefined(VerificationFailure):
    pass


class SingularFormula(MHahnError, ZeroDivisionError):
    r"""A closed-form entry has a vanishing denominator at these parameters."""
