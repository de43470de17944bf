import unittest

from context import (
    mhahn,
)

from mhahn.algebra import (
    build_realization,
    eigenvector,
    k2_eigenbasis,
    transition_matrix,
    verify_pentadiagonality,
)
from mhahn.core import (
    RMatrix,
)
from mhahn.errors import (
    DegenerateEigenvalue,
)
from mhahn.poly import (
    HahnParams,
)


class TestTransition(unittest.TestCase):
    def test_values(self):
        p = HahnParams.make(5, 4, 2)
        tm = transition_matrix(p)
        self.assertEqual(tm.S, RMatrix([[1, 1, 1], [-4, 10, 0], [24, 24, -16]]))
        self.assertEqual(tm.inverse @ tm.S, RMatrix.identity(3))
        self.assertEqual(k2_eigenbasis(p), tm.S)
        self.assertTrue(tm.report.passed())
        self.assertEqual(len(tm.report), 3)

    def test_pentadiagonal(self):
        for aa, bb, NN in [
            (5, 4, 2),
            ("13/3", "27/5", 4),
            ("17/2", "27/4", 6),
            (3, 2, 1),
            (3, 2, 3),
            ("1/2", "7/3", 5),
        ]:
            p = HahnParams.make(aa, bb, NN)
            report = verify_pentadiagonality(p)
            self.assertTrue(report.passed(), p.key())
            self.assertEqual(
                [cc.name for cc in report.checks],
                ["bandwidth(K1)<=2", "spec(K1)={0..N}", "K2 diagonal"],
            )

    def test_degenerate(self):
        with self.assertRaises(DegenerateEigenvalue):
            eigenvector(RMatrix.identity(2), 1)
        g = build_realization(HahnParams.make(4, 4, 2))
        self.assertEqual(eigenvector(g.K1, 2), (0, 0, 1))
