import os
import unittest
from pathlib import (
    Path,
)

import mock
from context import (
    mhahn,
)

from mhahn.dual import (
    FreeParams,
)
from mhahn.entrypoint.main import (
    main,
)
from mhahn.entrypoint.verify import (
    suite_dual,
)
from mhahn.poly import (
    HahnParams,
)

_c_odd = mhahn.dual.printed._c_odd


def _shifted_c_odd(p, q, corrected):
    ret = dict(_c_odd(p, q, corrected))
    ret[(0, 0)] += 7
    return ret


class TestSuiteDual(unittest.TestCase):
    def setUp(self):
        self.p = HahnParams.make(3, 2, 3)
        self.fp = FreeParams.unit(3)

    def test_pass(self):
        d, report, notes = suite_dual(self.p, self.fp)
        self.assertIsNotNone(d)
        self.assertTrue(report.passed())
        self.assertTrue(notes.explained)
        self.assertEqual(report.checks[-1].name, "unexplained discrepancies=0")

    def test_without_notes(self):
        _, report, notes = suite_dual(self.p, self.fp, with_notes=False)
        self.assertIsNone(notes)
        names = [cc.name for cc in report.checks]
        self.assertNotIn("unexplained discrepancies=0", names)

    @mock.patch("mhahn.dual.printed._c_odd", side_effect=_shifted_c_odd)
    def test_corrupted_closed_form(self, mocked_block):
        d, report, notes = suite_dual(self.p, self.fp)
        self.assertTrue(mocked_block.called)
        # the derivation does not read the closed-form C blocks
        self.assertIsNotNone(d)
        self.assertFalse(report.passed())
        self.assertEqual(
            [cc.name for cc in report.failures()], ["unexplained discrepancies=0"]
        )
        self.assertEqual(
            sorted((dd.row, dd.col) for dd in notes.unknown()), [(0, 0), (2, 2)]
        )
        self.assertIs(notes.corrected_agrees, False)
        self.assertFalse(notes.explained)
        self.assertEqual(len(notes.unexplained()), len(notes.discrepancies))


class TestCmdDual(unittest.TestCase):
    def setUp(self):
        self.out = Path("mhahn_verify_out")

    def tearDown(self):
        if self.out.is_file():
            os.remove(self.out)

    def _dual(self):
        return [
            "dual-rep",
            "--alpha",
            "3",
            "--beta",
            "2",
            "--N",
            "3",
            "--notes",
            "-o",
            str(self.out),
        ]

    def test_exit(self):
        self.assertEqual(main(self._dual()), 0)
        with mock.patch("mhahn.dual.printed._c_odd", side_effect=_shifted_c_odd):
            self.assertEqual(main(self._dual()), 1)
