import dataclasses
import unittest

from context import (
    mhahn,
)

from mhahn.core import (
    RMatrix,
)
from mhahn.dual import (
    FreeParams,
    derive_dual_rep,
    verify_dual_rep,
)
from mhahn.errors import (
    BandwidthViolation,
    RelationViolation,
)
from mhahn.poly import (
    HahnParams,
)


class TestVerifyDualRep(unittest.TestCase):
    def setUp(self):
        self.d = derive_dual_rep(HahnParams.make(3, 2, 3), FreeParams.unit(3))

    def test_pass(self):
        report = verify_dual_rep(self.d)
        names = [cc.name for cc in report.checks]
        self.assertIn("Q=q*I", names)
        self.assertIn("spec(K1)={0..N}", names)
        self.assertIn("Gamma_1^2=1", names)
        self.assertNotIn("P[N,N]=1", names)

    def test_even_tail(self):
        d = derive_dual_rep(HahnParams.make(5, 4, 2), FreeParams.unit(2))
        names = [cc.name for cc in verify_dual_rep(d).checks]
        self.assertEqual(names[-1], "P[N,N]=1")

    def test_bandwidth(self):
        K1 = self.d.K1.array()
        K1[0, 3] = 1
        bad = dataclasses.replace(self.d, K1=RMatrix(K1))
        with self.assertRaises(BandwidthViolation) as ctx:
            verify_dual_rep(bad)
        self.assertEqual(ctx.exception.report.first_failure().name, "bandwidth(K1)<=2")

    def test_perturbed_entry(self):
        # E_NN commutes with P and K2, so only the quadratic relation sees it
        d = derive_dual_rep(HahnParams.make(5, 4, 2), FreeParams.unit(2))
        K1 = d.K1.array()
        K1[2, 2] += 1
        bad = dataclasses.replace(d, K1=RMatrix(K1))
        report = verify_dual_rep(bad, strict=False)
        self.assertFalse(report.passed())
        self.assertEqual(report.first_failure().name, "[K1,K3]=K2+nuP+1/2")
        with self.assertRaises(RelationViolation):
            verify_dual_rep(bad)

    def test_perturbed_off_diagonal(self):
        K1 = self.d.K1.array()
        K1[0, 1] += 1
        bad = dataclasses.replace(self.d, K1=RMatrix(K1))
        report = verify_dual_rep(bad, strict=False)
        self.assertFalse(report.passed())
        self.assertEqual(report.checks[0].name, "bandwidth(K1)<=2")
        self.assertTrue(report.checks[0].passed)
        names = [cc.name for cc in report.failures()]
        self.assertIn("[K1,K3]=K2+nuP+1/2", names)

    def test_relation(self):
        bad = dataclasses.replace(self.d, P=-self.d.P)
        report = verify_dual_rep(bad, strict=False)
        self.assertFalse(report.passed())
        self.assertEqual(report.first_failure().name, "{K2,P}=-P-2nu")
        with self.assertRaises(RelationViolation):
            verify_dual_rep(bad)
