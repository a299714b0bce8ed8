from braceproducts.fibration import (
    BaseMismatch,
    DegreeOutOfRange,
    FreeLoopFibration,
    HomotopyClass,
    InvalidPairing,
    SplitFibration,
    TotalElement,
    TrivialFibration,
    assemble_total_lie,
    brace_product_fibration,
    brace_pullback,
    derivation_identity_check,
    free_loop_brace,
    james_brace,
    lie_map_identity_check,
    whitehead_product,
)
from braceproducts.graded_lie import (
    FreeGradedLieAlgebra,
    GradingView,
    LieAlgebraMorphism,
    MixedDegree,
    bracket,
)
from braceproducts.homotopy_tables import MissingEntry
from braceproducts.tests.test_braceproducts import BraceProductsTestCase

W = GradingView.WHITEHEAD


class SplitFibrationTestCase(BraceProductsTestCase):

    def setUp(self):
        BraceProductsTestCase.setUp(self)
        self.sw = self.B.gen('s', W)
        self.uw, self.vw = self.F.gens(W)
        # {s, u} = v, all other generator pairs vanish
        self.fib = SplitFibration(self.B, self.F, {('s', 'u'): 'v'})
        self.explicit = SplitFibration(self.B, self.F, {('s', 'u'): 'v'},
                                       extend=False)


class TestSplitFibration(SplitFibrationTestCase):

    def test_generator_pairs(self):
        self.assertEqual(self.fib.brace(self.sw, self.uw), self.vw)
        self.assertTrue(self.fib.brace(self.sw, self.vw).is_zero())
        self.assertEqual(self.fib.brace(2*self.sw, self.uw), 2*self.vw)

    def test_samelson_arguments(self):
        s = self.B.gen('s')
        u = self.F.gen('u')
        self.assertEqual(self.fib.brace(s, u), self.vw)

    def test_extension(self):
        uu = bracket(self.uw, self.uw)
        expected = -2*bracket(self.uw, self.vw)
        self.assertEqual(self.fib.brace(self.sw, uu), expected)
        self.assertTrue(self.explicit.brace(self.sw, uu).is_zero())

    def test_wrong_degree(self):
        self.assertRaises(InvalidPairing, SplitFibration, self.B, self.F,
                          {('s', 'u'): self.uw})
        self.assertRaises(ValueError, SplitFibration, self.B, self.F,
                          {('s', 'w'): 'v'})

    def test_arguments_in_wrong_algebras(self):
        self.assertRaises(ValueError, self.fib.brace, self.uw, self.sw)

    def test_pairing_table(self):
        self.assertEqual(self.fib.nonzero_braces(3),
                         [((0,), (0,), self.vw)])
        table = self.fib.pairing_table(4)
        self.assertEqual(len(table), len(self.fib.pairs(4)))

    def test_with_entry(self):
        fib = self.fib.with_entry('s', 'u', 0)
        self.assertTrue(fib.brace(self.sw, self.uw).is_zero())
        self.assertEqual(self.fib.brace(self.sw, self.uw), self.vw)

    def test_james_brace(self):
        self.assertEqual(james_brace(self.fib, self.sw, self.uw), self.vw)
        small = SplitFibration(self.B, self.F, {('s', 'u'): 'v'},
                               degree_cap=4)
        uv = bracket(self.uw, self.vw)
        self.assertRaises(DegreeOutOfRange, james_brace, small, self.sw, uv)
        self.assertTrue(james_brace(small, self.B.zero(W), uv).is_zero())


class TestIdentities(SplitFibrationTestCase):

    def test_derivation(self):
        v = derivation_identity_check(self.fib, self.sw, self.uw, self.uw)
        self.assertTrue(v.holds)
        v = derivation_identity_check(self.fib, self.sw, self.uw, self.vw)
        self.assertTrue(v.holds)

    def test_derivation_fails_without_extension(self):
        v = derivation_identity_check(self.explicit, self.sw, self.uw,
                                      self.uw)
        self.assertTrue(v.fails)
        self.assertEqual(v.witness, 2*bracket(self.uw, self.vw))

    def test_lie_map(self):
        v = lie_map_identity_check(self.fib, self.sw, self.sw, self.uw)
        self.assertTrue(v.holds)
        self.assertEqual(v.subject, 'lie-map-identity')

    def test_zero_arguments(self):
        zero = self.F.zero(W)
        self.assertTrue(derivation_identity_check(self.fib, self.sw, zero,
                                                  self.uw).holds)


class TestTotalLieAlgebra(SplitFibrationTestCase):

    def test_assemble(self):
        total = assemble_total_lie(self.fib, 6)
        x = total.bracket(total.s(self.sw), total.i(self.uw))
        self.assertEqual(x, total.i(self.vw))
        self.assertEqual(repr(x), 'i(v)')
        self.assertEqual(total.jacobi_check(6), None)

    def test_invalid_pairing(self):
        with self.assertRaises(InvalidPairing) as cm:
            assemble_total_lie(self.explicit, 6)
        self.assertFalse(cm.exception.defect.is_zero())

    def test_total_element(self):
        self.assertRaises(MixedDegree, TotalElement, self.sw, self.vw)
        x = TotalElement(self.sw, self.uw)
        self.assertEqual(x.degree, 2)
        self.assertEqual(repr(x), 's(s) + i(u)')
        self.assertEqual(x - x, 0)


class TestConstructions(SplitFibrationTestCase):

    def test_pullback(self):
        double = LieAlgebraMorphism(self.B, self.B, {'s': 2*self.sw})
        self.assertEqual(brace_pullback(double, self.sw, self.uw, self.fib),
                         2*self.vw)

    def test_product(self):
        other = SplitFibration(self.B, self.F, {('s', 'u'): '-v'})
        self.assertEqual(brace_product_fibration(self.fib, other, self.sw,
                                                 (self.uw, self.uw)),
                         (self.vw, -self.vw))
        self.assertEqual(brace_product_fibration(self.fib, other, self.sw,
                                                 (self.uw, 0)),
                         (self.vw, 0))

    def test_base_mismatch(self):
        T = FreeGradedLieAlgebra([('t', 1)])
        other = SplitFibration(T, self.F)
        self.assertRaises(BaseMismatch, brace_product_fibration, self.fib,
                          other, self.sw, (self.uw, self.uw))


class TestHomotopyClass(BraceProductsTestCase):

    def setUp(self):
        BraceProductsTestCase.setUp(self)
        self.iota2 = HomotopyClass.from_table('S2', 2, [1])

    def test_repr(self):
        gamma = HomotopyClass.from_table('S2', 3, [1])
        self.assertEqual(repr(gamma), 'gamma')
        self.assertEqual(repr(-2*gamma), '-2*gamma')
        self.assertEqual(repr(gamma.adjoint(2)), 'ad^2(gamma)')
        self.assertEqual(gamma.adjoint(2).degree, 1)

    def test_arithmetic(self):
        self.assertEqual(self.iota2 + 0, self.iota2)
        self.assertEqual(self.iota2 - self.iota2, 0)
        gamma = HomotopyClass.from_table('S2', 3, [1])
        self.assertRaises(ValueError, lambda: self.iota2 + gamma)

    def test_json(self):
        d = (2*self.iota2).to_json()
        self.assertEqual(d['coords'], [2])
        self.assertEqual(d['text'], '2*iota_2')


class TestWhiteheadProduct(BraceProductsTestCase):

    def test_table_product(self):
        iota = HomotopyClass.from_table('S2', 2, [1])
        product = whitehead_product('S2', iota, iota)
        self.assertEqual(repr(product), '2*gamma')
        self.assertEqual(product.degree, 3)

    def test_rules(self):
        iota3 = HomotopyClass.from_table('S3', 3, [1])
        self.assertTrue(whitehead_product('S3', iota3, iota3).is_zero())
        iota2 = HomotopyClass.from_table('S2', 2, [1])
        gamma = HomotopyClass.from_table('S2', 3, [1])
        self.assertTrue(whitehead_product('S2', iota2, gamma).is_zero())
        iota6 = HomotopyClass.from_table('S6', 6, [1])
        self.assertEqual(list(whitehead_product('S6', iota6,
                                                iota6).element.coords), [1])

    def test_missing_product(self):
        iota4 = HomotopyClass.from_table('S4', 4, [1])
        self.assertRaises(MissingEntry, whitehead_product, 'S4', iota4,
                          iota4)


class TestFreeLoop(BraceProductsTestCase):

    def setUp(self):
        BraceProductsTestCase.setUp(self)
        self.iota2 = HomotopyClass.from_table('S2', 2, [1])

    def test_single_loop(self):
        brace = free_loop_brace(1, self.iota2, self.iota2.adjoint(1))
        self.assertEqual(repr(brace), '2*ad(gamma)')
        self.assertEqual(brace.loops, 1)

    def test_double_loop(self):
        g = HomotopyClass.from_table('S2', 1, [1], loops=2)
        self.assertTrue(free_loop_brace(2, self.iota2, g).is_zero())
        self.assertRaises(DegreeOutOfRange, free_loop_brace, 2, self.iota2,
                          self.iota2.adjoint(2))

    def test_wrong_loops(self):
        fib = FreeLoopFibration('S2', 1)
        self.assertRaises(ValueError, fib.brace, self.iota2, self.iota2)
        self.assertRaises(ValueError, FreeLoopFibration, 'S2', 0)


class TestTrivialFibration(BraceProductsTestCase):

    def test_standard_section(self):
        iota = HomotopyClass.from_table('S2', 2, [1])
        fib = TrivialFibration('S2', 'S2')
        self.assertTrue(fib.brace(iota, iota).is_zero())

    def test_diagonal_section(self):
        iota = HomotopyClass.from_table('S2', 2, [1])
        fib = TrivialFibration('S2', 'S2', diagonal=True)
        self.assertEqual(repr(fib.brace(iota, iota)), '2*gamma')
        self.assertRaises(ValueError, TrivialFibration, 'S2', 'S3', True)
