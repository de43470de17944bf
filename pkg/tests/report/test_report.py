import unittest
from fractions import (
    Fraction,
)

from context import (
    mhahn,
)

from mhahn.core import (
    RMatrix,
)
from mhahn.errors import (
    RelationViolation,
    VerificationFailure,
)
from mhahn.report import (
    VerificationReport,
)


class TestVerificationReport(unittest.TestCase):
    def setUp(self):
        self.report = VerificationReport("demo", {"N": 2})
        self.report.record_equal("A=A", RMatrix.identity(2), 1)
        self.report.record_value("x=y", Fraction(1, 2), Fraction(1, 3), detail="x")
        self.report.skip("pole", "lower parameter")

    def test_verdict(self):
        self.assertEqual(len(self.report), 3)
        self.assertFalse(self.report.passed())
        self.assertEqual(self.report.first_failure().name, "x=y")
        self.assertEqual(self.report.n_skipped(), 1)
        self.assertEqual(
            self.report.summary(), "demo: FAIL (1 passed, 1 failed, 1 skipped)"
        )
        self.assertEqual(
            [cc.verdict for cc in self.report.checks], ["pass", "FAIL", "skip"]
        )

    def test_raise(self):
        with self.assertRaises(RelationViolation) as ctx:
            self.report.raise_for_failure(RelationViolation)
        self.assertIs(ctx.exception.report, self.report)
        self.assertIn("check 'x=y' failed (x)", str(ctx.exception))
        self.assertIsInstance(ctx.exception, VerificationFailure)

    def test_skip_passes(self):
        report = VerificationReport("skips")
        report.skip("pole", "lower parameter")
        self.assertTrue(report.passed())
        self.assertIs(report.raise_for_failure(), report)

    def test_extend(self):
        outer = VerificationReport("outer")
        outer.extend(self.report, prefix="inner")
        self.assertEqual(
            [cc.name for cc in outer.checks], ["inner/A=A", "inner/x=y", "inner/pole"]
        )
        self.assertFalse(outer.passed())

    def test_to_dict(self):
        ret = self.report.to_dict()
        self.assertEqual(ret["title"], "demo")
        self.assertEqual(ret["context"], {"N": 2})
        self.assertFalse(ret["passed"])
        self.assertEqual(len(ret["checks"]), 3)

    def test_print(self):
        self.assertTrue(self.report.print_header().startswith("#check"))
        self.assertEqual(len(self.report.print().splitlines()), 3)
