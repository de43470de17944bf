from .report import (
    Check,
    VerificationReport,
)
