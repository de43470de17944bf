import unittest
from fractions import (
    Fraction,
)

from context import (
    mhahn,
)

from mhahn.algebra import (
    GeneratorSet,
    StructureConstants,
    build_realization,
    casimir_H,
    structure_constants,
    verify_casimir,
    verify_relations,
)
from mhahn.core import (
    RMatrix,
    has_spectrum,
)
from mhahn.errors import (
    RelationViolation,
)
from mhahn.poly import (
    HahnParams,
    grid_values,
)

param_sets = [
    (4, 4, 2),
    (5, 4, 2),
    (7, 9, 0),
    (3, 2, 1),
    (3, 2, 3),
    ("1/2", "7/3", 3),
    ("-1/3", "5/4", 5),
    ("13/3", "27/5", 4),
    ("17/2", "27/4", 6),
    ("1/2", "7/3", 7),
]


class TestStructureConstants(unittest.TestCase):
    def test_even(self):
        cc = structure_constants(HahnParams.make(4, 4, 2))
        self.assertEqual((cc.nu, cc.sigma, cc.rho), (1, -4, -4))
        self.assertEqual(cc.casimir_value, Fraction(43, 4))
        self.assertEqual(cc.chi, 0)
        cc = structure_constants(HahnParams.make(5, 4, 2))
        self.assertEqual(cc.casimir_value, 13)

    def test_odd(self):
        cc = structure_constants(HahnParams.make(3, 2, 3))
        self.assertEqual((cc.nu, cc.sigma, cc.rho), (Fraction(1, 2), -35, -5))
        self.assertEqual(
            cc.to_dict(),
            {"nu": "1/2", "sigma": "-35", "rho": "-5", "casimir": "41"},
        )


class TestRealization(unittest.TestCase):
    def test_shape(self):
        g = build_realization(HahnParams.make(4, 4, 2))
        self.assertEqual(g.K1, RMatrix.diag([0, 1, 2]))
        self.assertEqual(g.P, RMatrix.diag([1, -1, 1]))
        self.assertEqual(
            g.K2,
            RMatrix([["-3/2", "1/2", 0], [8, "1/2", "1/2"], [0, 8, "-3/2"]]),
        )
        self.assertEqual(g.dim, 3)
        self.assertEqual(sorted(g.matrices().keys()), ["K1", "K2", "K3", "P"])

    def test_relations(self):
        for aa, bb, NN in param_sets:
            p = HahnParams.make(aa, bb, NN)
            g = build_realization(p)
            report = verify_relations(g)
            self.assertEqual(len(report), 7)
            self.assertTrue(report.passed(), p.key())
            self.assertTrue(verify_casimir(g).passed(), p.key())
            self.assertTrue(has_spectrum(2 * g.K2, grid_values(p)), p.key())

    def test_casimir_value(self):
        g = build_realization(HahnParams.make(4, 4, 2))
        self.assertEqual(casimir_H(g).scalar_value(), Fraction(43, 4))

    def test_wrong_constants(self):
        g = build_realization(HahnParams.make(4, 4, 2))
        cc = g.constants
        bad = GeneratorSet(
            g.K1, g.K2, g.P, StructureConstants(cc.nu + 1, cc.sigma, cc.rho)
        )
        report = verify_relations(bad, strict=False)
        self.assertFalse(report.passed())
        self.assertEqual(report.first_failure().name, "{K2,P}=-P-2nu")
        with self.assertRaises(RelationViolation) as ctx:
            verify_relations(bad)
        self.assertIn("{K2,P}=-P-2nu", str(ctx.exception))
