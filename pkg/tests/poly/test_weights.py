import unittest
from fractions import (
    Fraction,
)

from context import (
    mhahn,
)

from mhahn.errors import (
    OrthogonalityViolation,
)
from mhahn.poly import (
    HahnParams,
    WeightTable,
    derived_weights,
    gram_matrix,
    printed_weights,
    verify_orthogonality,
    weights,
)

param_sets = [
    (4, 4, 2),
    (5, 4, 2),
    (3, 2, 1),
    (3, 2, 3),
    ("1/2", "7/3", 3),
    ("-1/3", "5/4", 5),
    ("13/3", "27/5", 4),
    ("17/2", "27/4", 6),
    (7, 9, 0),
]


class TestWeights(unittest.TestCase):
    def test_even_values(self):
        p = HahnParams.make(4, 4, 2)
        table = weights(p)
        self.assertEqual(table.source, "printed")
        self.assertEqual(table.omega, (1, Fraction(1, 2), Fraction(3, 2)))
        self.assertEqual(table.v, (3, 48, 768))
        table = weights(HahnParams.make(5, 4, 2))
        self.assertEqual(table.omega, (1, Fraction(2, 5), Fraction(21, 10)))
        self.assertEqual(table.v, (Fraction(7, 2), 56, 1344))

    def test_odd_values(self):
        table = weights(HahnParams.make(3, 2, 1))
        self.assertEqual(table.omega, (1, Fraction(4, 3)))
        self.assertEqual(table.v, (Fraction(7, 3), 112))
        table = weights(HahnParams.make(3, 2, 3))
        self.assertEqual(
            table.omega, (1, Fraction(4, 3), Fraction(28, 33), Fraction(56, 55))
        )

    def test_printed_is_derived(self):
        for aa, bb, NN in param_sets[:4]:
            p = HahnParams.make(aa, bb, NN)
            self.assertTrue(printed_weights(p).same_values(derived_weights(p)), p.key())
            self.assertTrue(weights(p).is_positive())

    def test_to_dict(self):
        ret = weights(HahnParams.make(3, 2, 1)).to_dict()
        self.assertEqual(ret["omega"], ["1", "4/3"])
        self.assertEqual(ret["v"], ["7/3", "112"])


class TestOrthogonality(unittest.TestCase):
    def test_orthogonality(self):
        for aa, bb, NN in param_sets:
            p = HahnParams.make(aa, bb, NN)
            report = verify_orthogonality(p)
            self.assertTrue(report.passed())
            table = weights(p)
            self.assertTrue(gram_matrix(p).is_diagonal())
            self.assertEqual(gram_matrix(p).diagonal(), table.v)

    def test_wrong_weights(self):
        p = HahnParams.make(4, 4, 2)
        bad = WeightTable((1, Fraction(1, 2), Fraction(1, 2)), (3, 48, 768))
        report = verify_orthogonality(p, bad, strict=False)
        self.assertFalse(report.passed())
        self.assertEqual(report.first_failure().name, "gram[0,0]")
        with self.assertRaises(OrthogonalityViolation) as ctx:
            verify_orthogonality(p, bad)
        self.assertFalse(ctx.exception.report.passed())
