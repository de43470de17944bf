import unittest
from fractions import (
    Fraction,
)

from context import (
    mhahn,
)

from mhahn.poly import (
    HahnParams,
    eval_hypergeometric,
    eval_recurrence,
    grid_values,
)

points = [Fraction(0), Fraction(1, 2), Fraction(-7, 3), Fraction(11), Fraction(-40, 9)]


class TestHypergeometricRep(unittest.TestCase):
    def test_match_recurrence(self):
        for aa, bb, NN in [
            ("7/3", "17/5", 2),
            ("9/2", "11/4", 2),
            ("13/3", "27/5", 4),
            ("17/2", "27/4", 6),
            (3, 2, 1),
            ("1/2", "7/3", 3),
            ("-1/3", "5/4", 5),
            ("1/2", "7/3", 7),
        ]:
            p = HahnParams.make(aa, bb, NN)
            for xx in grid_values(p) + points:
                for nn in range(p.dim):
                    self.assertEqual(
                        eval_hypergeometric(p, nn, xx),
                        eval_recurrence(p, nn, xx),
                        f"{p.key()} n={nn} x={xx}",
                    )

    def test_monic(self):
        p = HahnParams.make("9/2", "11/4", 2)
        self.assertEqual(eval_hypergeometric(p, 0, 5), 1)

    def test_degree(self):
        p = HahnParams.make(3, 2, 1)
        with self.assertRaises(ValueError):
            eval_hypergeometric(p, 2, 0)
