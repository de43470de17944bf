import unittest
from fractions import (
    Fraction,
)

from context import (
    mhahn,
)

from mhahn.core import (
    hypergeometric_3F2_terminating,
    hypergeometric_terminating,
    pochhammer,
    termination_index,
)
from mhahn.errors import (
    NonTerminating,
    PoleInLowerParameter,
)


class TestTerminating(unittest.TestCase):
    def test_termination_index(self):
        self.assertEqual(termination_index([-3, Fraction(1, 2), -5]), 3)
        self.assertEqual(termination_index([0, 2]), 0)
        with self.assertRaises(NonTerminating):
            termination_index([Fraction(1, 2), 1, Fraction(-1, 2)])

    def test_chu_vandermonde(self):
        # 2F1(-n, b; c; 1) = (c - b)_n / (c)_n
        for nn in range(5):
            for bb, cc in [(2, 5), (Fraction(1, 2), Fraction(7, 3))]:
                self.assertEqual(
                    hypergeometric_terminating([-nn, bb], [cc], 1),
                    pochhammer(cc - bb, nn) / pochhammer(cc, nn),
                )
        self.assertEqual(hypergeometric_terminating([-3, 2], [5], 1), Fraction(2, 7))

    def test_pfaff_saalschutz(self):
        # balanced 3F2 sums to (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
        aa, bb, cc = Fraction(1, 3), Fraction(5, 2), Fraction(7, 4)
        for nn in range(5):
            self.assertEqual(
                hypergeometric_3F2_terminating(
                    -nn, aa, bb, cc, 1 + aa + bb - cc - nn, 1
                ),
                pochhammer(cc - aa, nn)
                * pochhammer(cc - bb, nn)
                / (pochhammer(cc, nn) * pochhammer(cc - aa - bb, nn)),
            )

    def test_zero_length(self):
        self.assertEqual(hypergeometric_terminating([0, 3], [-1], 7), 1)

    def test_pole(self):
        with self.assertRaises(PoleInLowerParameter) as ctx:
            hypergeometric_terminating([-3, 1], [-1], 1)
        self.assertEqual(ctx.exception.index, 2)
        # the pole lies past the termination index
        self.assertEqual(hypergeometric_terminating([-1, 1], [-1], 1), 2)
