import unittest
from fractions import (
    Fraction,
)

import numpy as np
from context import (
    mhahn,
)

from mhahn.core import (
    RMatrix,
    anticommutator,
    commutator,
    has_spectrum,
    poly_from_roots,
)
from mhahn.errors import (
    SingularMatrixError,
)


class TestRMatrix(unittest.TestCase):
    def setUp(self):
        self.mm = RMatrix([[2, 1], [1, 2]])

    def test_entries(self):
        self.assertEqual(self.mm.shape, (2, 2))
        self.assertIsInstance(self.mm[0, 1], Fraction)
        self.assertEqual(self.mm.row(1), (1, 2))
        self.assertEqual(RMatrix([["1/2", 3]])[0, 0], Fraction(1, 2))
        # read-only storage
        with self.assertRaises(ValueError):
            self.mm._data[0, 0] = 5
        copy = self.mm.array()
        copy[0, 0] = 5
        self.assertEqual(self.mm[0, 0], 2)

    def test_scalar_shift(self):
        self.assertEqual(self.mm + 1, RMatrix([[3, 1], [1, 3]]))
        self.assertEqual(1 - self.mm, RMatrix([[-1, -1], [-1, -1]]))
        self.assertEqual(self.mm / 2, RMatrix([["1", "1/2"], ["1/2", "1"]]))
        with self.assertRaises(TypeError):
            self.mm * self.mm

    def test_inverse(self):
        inv = self.mm.inverse()
        self.assertEqual(inv, RMatrix([["2/3", "-1/3"], ["-1/3", "2/3"]]))
        self.assertEqual(inv @ self.mm, RMatrix.identity(2))
        with self.assertRaises(SingularMatrixError):
            RMatrix([[1, 2], [2, 4]]).inverse()

    def test_nullspace(self):
        self.assertEqual(RMatrix([[1, 2], [2, 4]]).nullspace(), [(-2, 1)])
        self.assertEqual(self.mm.nullspace(), [])
        self.assertEqual(RMatrix([[1, 2], [2, 4]]).rank(), 1)

    def test_solve(self):
        self.assertEqual(self.mm.solve([3, 3]), ((1, 1), []))
        singular = RMatrix([[1, 2], [2, 4]])
        self.assertEqual(singular.solve([3, 6]), ((3, 0), [(-2, 1)]))
        self.assertIsNone(singular.solve([3, 7]))
        self.assertEqual(
            RMatrix([], shape=(0, 2)).solve([]), ((0, 0), [(1, 0), (0, 1)])
        )
        with self.assertRaises(ValueError):
            self.mm.solve([1])

    def test_charpoly(self):
        self.assertEqual(self.mm.charpoly(), (1, -4, 3))
        self.assertEqual(poly_from_roots([1, 3]), (1, -4, 3))
        self.assertTrue(has_spectrum(self.mm, [3, 1]))
        self.assertFalse(has_spectrum(self.mm, [2, 2]))
        self.assertFalse(has_spectrum(self.mm, [1, 3, 0]))

    def test_structure(self):
        mm = RMatrix.from_function(5, 5, lambda ii, jj: 1 if abs(ii - jj) <= 2 else 0)
        self.assertEqual(mm.bandwidth(), 2)
        self.assertTrue(RMatrix.diag([1, 2]).is_diagonal())
        self.assertEqual((RMatrix.identity(3) * 4).scalar_value(), 4)
        self.assertIsNone(self.mm.scalar_value())
        self.assertEqual(self.mm.block([1], [0, 1]), RMatrix([[1, 2]]))

    def test_brackets(self):
        aa = RMatrix([[0, 1], [0, 0]])
        bb = RMatrix([[0, 0], [1, 0]])
        self.assertEqual(commutator(aa, bb), RMatrix.diag([1, -1]))
        self.assertEqual(anticommutator(aa, bb), RMatrix.identity(2))

    def test_similarity(self):
        basis = RMatrix([[1, 1], [1, -1]])
        self.assertEqual(self.mm.similarity(basis), RMatrix.diag([3, 1]))
        self.assertTrue(np.all(self.mm.array() == np.array([[2, 1], [1, 2]])))
