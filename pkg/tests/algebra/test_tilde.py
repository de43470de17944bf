import unittest
from fractions import (
    Fraction,
)

from context import (
    mhahn,
)

from mhahn.algebra import (
    build_realization,
    tilde_casimir,
    tilde_presentation,
    verify_symmetrization,
    verify_tilde,
)
from mhahn.poly import (
    HahnParams,
)


class TestTilde(unittest.TestCase):
    def test_casimir(self):
        t = tilde_presentation(build_realization(HahnParams.make(4, 4, 2)))
        self.assertEqual(t.chi, 0)
        self.assertEqual(tilde_casimir(t).scalar_value(), Fraction(7, 2))

    def test_relations(self):
        params = [(4, 4, 2), ("13/3", "27/5", 4), (3, 2, 3), ("-1/3", "5/4", 5)]
        for aa, bb, NN in params:
            g = build_realization(HahnParams.make(aa, bb, NN))
            report = verify_tilde(g)
            self.assertTrue(report.passed())
            self.assertTrue(verify_symmetrization(g).passed())

    def test_symmetrization(self):
        t = tilde_presentation(build_realization(HahnParams.make(4, 4, 2)))
        self.assertEqual(t.K2.diagonal(), (0, 0, 0))
        self.assertEqual(t.K2[0, 1], Fraction(1, 4))
        self.assertEqual(t.K2[1, 0], 4)
