import unittest

import numpy

from braceproducts.abelian_groups import FGAbGroup
from braceproducts.j_homomorphism import (
    Compose,
    ConstMap,
    Eps,
    J,
    JNormalForm,
    Push,
    Rho,
    j_rules_apply,
)


class TestRewriting(unittest.TestCase):

    def setUp(self):
        self.rho = Rho('rho')
        self.sigma = Rho('sigma')

    def test_additivity(self):
        nf = j_rules_apply(J(self.rho + self.sigma))
        self.assertEqual(nf.terms, {((), 'rho'): 1, ((), 'sigma'): 1})
        nf = j_rules_apply(J(2*self.rho - self.sigma))
        self.assertEqual(repr(nf), '2*J[rho] - J[sigma]')

    def test_naturality(self):
        expr = J(Compose('phi', self.rho)) - Push('phi', J(self.rho))
        self.assertEqual(j_rules_apply(expr), 0)
        nf = j_rules_apply(J(Compose('phi', Compose('psi', self.rho))))
        self.assertEqual(nf.terms, {(('phi', 'psi'), 'rho'): 1})
        self.assertEqual(repr(nf), 'phi_*psi_*J[rho]')

    def test_constant_map_over_suspension(self):
        self.assertTrue(j_rules_apply(J(ConstMap('phi')),
                                      suspension=True).is_zero())
        self.assertTrue(j_rules_apply(J(Eps()), suspension=True).is_zero())

    def test_constant_map_over_general_base(self):
        nf = j_rules_apply(J(ConstMap('phi')))
        self.assertEqual(nf.terms, {(('phi',), 'eps'): 1})
        self.assertEqual(nf.atoms(), ['eps'])

    def test_push_distributes(self):
        expr = Push('phi', J(self.rho) + 3*J(self.sigma))
        self.assertEqual(j_rules_apply(expr).terms,
                         {(('phi',), 'rho'): 1, (('phi',), 'sigma'): 3})

    def test_confluence(self):
        expr = (J(Compose('phi', self.rho + ConstMap('psi')))
                - 2*Push('phi', J(self.sigma + self.rho))
                + J(self.sigma - Compose('phi', self.sigma)))
        expected = j_rules_apply(expr, suspension=True)
        rng = numpy.random.RandomState(11)
        for _ in range(10):
            self.assertEqual(j_rules_apply(expr, True, rng), expected)
        self.assertEqual(expected.terms, {(('phi',), 'rho'): -1,
                                          (('phi',), 'sigma'): -3,
                                          ((), 'sigma'): 1})

    def test_errors(self):
        self.assertRaises(ValueError, Rho, 'eps')
        self.assertRaises(TypeError, J, 'rho')
        self.assertRaises(TypeError, j_rules_apply, self.rho)


class TestEvaluate(unittest.TestCase):

    def test_evaluate(self):
        Z12 = FGAbGroup(0, [12])
        nf = j_rules_apply(J(Compose('phi', Rho('rho'))) + J(Rho('rho')))
        value = nf.evaluate({'rho': Z12(1)}, {'phi': lambda x: 2*x})
        self.assertEqual(value, Z12(3))
        self.assertEqual(JNormalForm({}).evaluate({}), None)
        self.assertRaises(ValueError, nf.evaluate, {})
        self.assertRaises(ValueError, nf.evaluate, {'rho': Z12(1)})

    def test_to_json(self):
        nf = j_rules_apply(Push('phi', J(Rho('rho'))))
        self.assertEqual(nf.to_json(), [[['phi'], 'rho', 1]])
