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
    RegimeError,
)
from mhahn.slminus import (
    CouplingProblem,
    casimir_spectrum,
    coproduct_operators,
    coupled_operators,
    highest_coupled_vector,
    kappa2_eigenvalues,
    verify_casimir_spectrum,
    verify_coproduct_casimir,
    verify_highest_vector,
    verify_kappa_relations,
)

mu_values = ["0", "1/2", "1", "3/2"]


class TestCouplingProblem(unittest.TestCase):
    def test_lambdas(self):
        cp = CouplingProblem.make("1/2", 1, 2)
        self.assertEqual(cp.lambdas, (-1, -2, 1, Fraction(9, 2)))
        cp = CouplingProblem.make("1/2", 1, 3, 1, -1)
        self.assertEqual(cp.lambdas, (-1, 2, 1, Fraction(11, 2)))
        self.assertEqual(cp.key(), "mu_a=1/2,mu_b=1,eps_a=1,eps_b=-1,N=3")

    def test_regime(self):
        with self.assertRaises(RegimeError):
            CouplingProblem.make(0, 0, -1)
        with self.assertRaises(RegimeError):
            CouplingProblem.make(0, "-1", 1)


class TestKappa(unittest.TestCase):
    def test_n1(self):
        ks = coupled_operators(CouplingProblem.make(0, 0, 1))
        self.assertEqual(ks.kappa1, RMatrix.diag(["-1/2", "1/2"]))
        self.assertEqual(ks.kappa2, RMatrix([["-1/2", 1], [1, "-1/2"]]))
        self.assertEqual(ks.q_cg, Fraction(11, 4))

    def test_n2(self):
        ks = coupled_operators(CouplingProblem.make("1/2", 1, 2))
        self.assertEqual(ks.kappa2, RMatrix([[-2, -2, 0], [-2, 1, 3], [0, 2, -2]]))
        self.assertEqual(ks.q_cg, Fraction(77, 4))
        self.assertEqual(ks.q_cg_printed, Fraction(85, 4))
        cp = CouplingProblem.make("1/2", 1, 2)
        self.assertEqual(kappa2_eigenvalues(cp), [-2, 3, -4])

    def test_relations(self):
        for NN in range(5):
            for mu_a in mu_values:
                for mu_b in mu_values:
                    for eps_a, eps_b in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
                        cp = CouplingProblem.make(mu_a, mu_b, NN, eps_a, eps_b)
                        ks = coupled_operators(cp, check=False)
                        self.assertTrue(verify_kappa_relations(ks).passed(), cp.key())
                        self.assertTrue(verify_casimir_spectrum(cp).passed(), cp.key())

    def test_spectrum(self):
        spectrum = casimir_spectrum(CouplingProblem.make("1/2", 1, 2))
        self.assertEqual([ee.q for ee in spectrum], [-2, 3, -4])
        self.assertEqual(spectrum[-1].epsilon, 1)
        self.assertEqual(spectrum[-1].mu, 4)


class TestCoproduct(unittest.TestCase):
    def test_n1(self):
        cp = CouplingProblem.make(0, 0, 1)
        co = coproduct_operators(cp)
        self.assertEqual(co.Cminus, RMatrix([[1, 1]]))
        self.assertEqual(co.Rc, -1)
        self.assertEqual(co.C0, 2)
        self.assertEqual(highest_coupled_vector(cp), (1, -1))
        report = verify_highest_vector(cp)
        self.assertIn("q_max=3/2", report.checks[0].detail)

    def test_casimir(self):
        for NN in range(1, 5):
            for mu_a in mu_values:
                for eps_b in (1, -1):
                    cp = CouplingProblem.make(mu_a, "1/2", NN, -1, eps_b)
                    self.assertTrue(verify_coproduct_casimir(cp).passed(), cp.key())
                    self.assertTrue(verify_highest_vector(cp).passed(), cp.key())
