import unittest

import numpy

from braceproducts.graded_lie import FreeGradedLieAlgebra
from braceproducts.properties import (
    DEFAULT_DEGREE_CAPS,
    SUITES,
    SuiteResult,
    UnknownSuite,
    random_element,
    random_fibration,
    run_suite,
)


class TestRandomInputs(unittest.TestCase):

    def test_random_element(self):
        rng = numpy.random.RandomState(1)
        L = FreeGradedLieAlgebra([('p', 1), ('q', 2)])
        for degree in range(2, 7):
            x = random_element(rng, L, degree)
            if not x.is_zero():
                self.assertEqual(x.degree, degree)
                self.assertTrue(len(x.terms) <= 2)

    def test_empty_graded_piece(self):
        rng = numpy.random.RandomState(1)
        L = FreeGradedLieAlgebra([('p', 2)])
        self.assertTrue(random_element(rng, L, 2).is_zero())

    def test_random_fibration(self):
        rng = numpy.random.RandomState(2)
        fib = random_fibration(rng, 6)
        self.assertEqual(fib.degree_cap, 6)
        self.assertTrue(fib.extend)


class TestSuiteResult(unittest.TestCase):

    def test_record(self):
        result = SuiteResult('jacobi', 3, 12, 0)
        result.record(True)
        result.record(False, {'first': 1})
        result.record(False, {'second': 2})
        self.assertFalse(result.ok)
        self.assertEqual(result.witness, {'first': 1})
        self.assertEqual(repr(result), 'jacobi: 1 passed, 2 failed')
        result.count('mutations', 2)
        self.assertEqual(result.to_json()['details'], {'mutations': 2})


class TestSuites(unittest.TestCase):

    def test_unknown_suite(self):
        self.assertRaises(UnknownSuite, run_suite, 'commutativity')

    def test_default_caps(self):
        result = run_suite('jacobi', 0)
        self.assertEqual(result.degree_cap, DEFAULT_DEGREE_CAPS['jacobi'])
        self.assertEqual(run_suite('j-rules', 0).degree_cap, None)

    def test_jacobi(self):
        result = run_suite('jacobi', 20, degree_cap=8, seed=1)
        self.assertTrue(result.ok, result.witness)
        self.assertTrue(result.passed > 0)

    def test_derivation(self):
        result = run_suite('derivation', 11, degree_cap=7, seed=2)
        self.assertTrue(result.ok, result.witness)
        self.assertEqual(result.details.get('mutations', 0),
                         result.details.get('mutations_detected', 0))

    def test_lie_map(self):
        result = run_suite('lie-map', 11, degree_cap=7, seed=3)
        self.assertTrue(result.ok, result.witness)
        self.assertEqual(result.details.get('mutations', 0),
                         result.details.get('mutations_detected', 0))

    def test_exactness(self):
        result = run_suite('exactness')
        self.assertTrue(result.ok, result.witness)
        self.assertEqual(result.passed, 3)
        self.assertTrue(result.details['mutations'] > 0)
        self.assertEqual(result.details['mutations'],
                         result.details['mutations_detected'])

    def test_j_rules(self):
        result = run_suite('j-rules', 30, seed=4)
        self.assertTrue(result.ok, result.witness)
        self.assertEqual(result.passed, 30)

    def test_seeded(self):
        first = run_suite('j-rules', 10, seed=5).to_json()
        self.assertEqual(run_suite('j-rules', 10, seed=5).to_json(), first)

    def test_suites(self):
        self.assertEqual(len(SUITES), 5)
