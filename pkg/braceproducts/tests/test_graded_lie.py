import unittest

import numpy

from braceproducts.graded_lie import (
    CapTooSmall,
    FreeGradedLieAlgebra,
    GradingView,
    LieAlgebraMorphism,
    MixedDegree,
    NotALieElement,
    UnknownGenerator,
    Unsupported,
    adjoint_shift,
    bracket,
    graded_basis,
    jacobi_defect,
    tensor_expansion,
)
from braceproducts.properties import random_element
from braceproducts.tests.test_braceproducts import BraceProductsTestCase

S = GradingView.SAMELSON
W = GradingView.WHITEHEAD


class TestGenerators(BraceProductsTestCase):

    def test_degrees(self):
        g = self.L.generators[1]
        self.assertEqual(g.name, 'b')
        self.assertEqual(g.samelson_degree, 2)
        self.assertEqual(g.whitehead_degree, 3)
        self.assertEqual(self.aw.degree, 2)
        self.assertEqual(self.a.degree, 1)

    def test_degree_zero_unsupported(self):
        self.assertRaises(Unsupported, FreeGradedLieAlgebra, [('z', 0)])

    def test_bad_names(self):
        self.assertRaises(ValueError, FreeGradedLieAlgebra, [('1z', 1)])
        self.assertRaises(ValueError, FreeGradedLieAlgebra,
                          [('z', 1), ('z', 2)])

    def test_unknown_generator(self):
        self.assertRaises(UnknownGenerator, self.L.gen, 'z')
        self.assertRaises(UnknownGenerator, bracket, self.a, self.x)


class TestSamelsonBracket(BraceProductsTestCase):

    def test_square_of_odd_generator(self):
        self.assertEqual(bracket(self.a, self.a).terms, {(0, 0): 1})
        self.assertEqual(repr(bracket(self.a, self.a)), '<a,a>')

    def test_square_of_even_generator(self):
        self.assertTrue(bracket(self.b, self.b).is_zero())

    def test_antisymmetry(self):
        ab = bracket(self.a, self.b)
        self.assertEqual(ab.terms, {(0, 1): 1})
        self.assertEqual(bracket(self.b, self.a), -ab)
        self.assertEqual(bracket(self.x, self.y), bracket(self.y, self.x))

    def test_odd_cube_vanishes(self):
        aa = bracket(self.a, self.a)
        self.assertTrue(bracket(self.a, aa).is_zero())

    def test_degree(self):
        self.assertEqual(bracket(self.a, self.b).samelson_degree, 3)
        self.assertEqual(self.L.zero().samelson_degree, None)

    def test_tensor_expansion(self):
        self.assertEqual(tensor_expansion(bracket(self.a, self.b)),
                         {(0, 1): 1, (1, 0): -1})
        self.assertEqual(tensor_expansion(bracket(self.a, self.a)),
                         {(0, 0): 2})

    def test_normal_form(self):
        self.assertEqual(self.L.normal_form({(0, 1): 1, (1, 0): -1}),
                         bracket(self.a, self.b))
        self.assertRaises(NotALieElement, self.L.normal_form, {(0, 1): 1})

    def test_mixed_degree(self):
        self.assertRaises(MixedDegree, lambda: self.a + self.b)

    def test_float_coefficient(self):
        self.assertRaises(TypeError, lambda: 0.5*self.a)

    def test_repr(self):
        self.assertEqual(repr(-self.a), '-a')
        self.assertEqual(repr(2*self.a), '2*a')
        self.assertEqual(repr(self.L.zero()), '0')


class TestWhiteheadView(BraceProductsTestCase):

    def test_bracket(self):
        ab = bracket(self.aw, self.bw)
        self.assertEqual(ab.degree, 4)
        self.assertEqual(repr(ab), '[a,b]')
        self.assertEqual(ab, self.L.parse('[a,b]', W))

    def test_graded_symmetry(self):
        # [f,g] = (-1)^{|f||g|} [g,f] in Whitehead degrees
        self.assertEqual(bracket(self.aw, self.bw), bracket(self.bw, self.aw))
        xw, yw = self.L2.gens(W)
        self.assertEqual(bracket(xw, yw), bracket(yw, xw))
        c = FreeGradedLieAlgebra([('c', 2)]).gen('c', W)
        self.assertTrue(bracket(c, c).is_zero())

    def test_adjoint_rule(self):
        # [ad x, ad y] = (-1)^{|x|} ad <x,y>
        ab = bracket(self.a, self.b)
        for x, y in [(self.a, self.b), (ab, self.a), (self.b, ab)]:
            lhs = bracket(adjoint_shift(x, S, W), adjoint_shift(y, S, W))
            rhs = adjoint_shift(bracket(x, y), S, W)
            if x.samelson_degree % 2:
                rhs = -rhs
            self.assertEqual(lhs, rhs)

    def test_adjoint_shift(self):
        ab = bracket(self.a, self.b)
        self.assertEqual(adjoint_shift(ab, S, W), -self.L.parse('[a,b]', W))
        self.assertEqual(adjoint_shift(adjoint_shift(ab, S, W), W, S), ab)
        self.assertEqual(adjoint_shift(self.a, 'samelson', 'whitehead'),
                         self.aw)
        self.assertRaises(ValueError, adjoint_shift, ab, W, S)

    def test_views_do_not_mix(self):
        self.assertRaises(ValueError, lambda: self.a + self.aw)

    def test_parse(self):
        e = self.L2.parse('2*[x,[x,y]] - 1/2*[y,[y,x]]', W)
        self.assertEqual(e.degree, 4)
        self.assertEqual(self.L2.parse(repr(e), W), e)
        self.assertEqual(self.L2.parse('0', W), self.L2.zero(W))
        self.assertRaises(ValueError, self.L2.parse, '<x,y>', W)
        self.assertRaises(ValueError, self.L2.parse, '[x,y', W)
        self.assertRaises(MixedDegree, self.L.parse, '[a,a] + [a,b]', W)


class TestJacobi(BraceProductsTestCase):

    def test_generators(self):
        xw, yw = self.L2.gens(W)
        for triple in [(xw, xw, xw), (xw, xw, yw), (xw, yw, yw),
                       (self.aw, self.bw, self.aw),
                       (self.aw, self.aw, self.bw)]:
            self.assertTrue(jacobi_defect(*triple).is_zero())

    def test_random(self):
        rng = numpy.random.RandomState(3)
        L3 = FreeGradedLieAlgebra([('p', 1), ('q', 2), ('r', 3)])
        for _ in range(20):
            x, y, z = [random_element(rng, L3, int(rng.randint(2, 5)))
                       for _ in range(3)]
            self.assertTrue(jacobi_defect(x, y, z).is_zero())

    def test_samelson_input(self):
        self.assertTrue(jacobi_defect(self.a, self.b, self.a).is_zero())


class TestGradedBasis(BraceProductsTestCase):

    def test_two_odd_generators(self):
        basis = graded_basis(self.L2, 4)
        self.assertEqual(basis.dimensions, {1: 2, 2: 3, 3: 2, 4: 3})
        squares = [repr(m) for m in basis.in_degree(2)]
        self.assertEqual(squares, ['<x,x>', '<x,y>', '<y,y>'])

    def test_odd_and_even(self):
        basis = graded_basis([('a', 1), ('b', 2)], 4)
        self.assertEqual(basis.dimensions, {1: 1, 2: 2, 3: 1, 4: 1})

    def test_cap_too_small(self):
        self.assertRaises(CapTooSmall, graded_basis, [('a', 3)], 2)


class TestLieAlgebraMorphism(BraceProductsTestCase):

    def test_brackets(self):
        phi = LieAlgebraMorphism(self.L2, self.L, {'x': self.aw,
                                                   'y': self.aw})
        self.assertEqual(phi(self.L2.parse('[x,y]', W)),
                         self.L.parse('[a,a]', W))
        self.assertEqual(phi(bracket(self.x, self.y)),
                         bracket(self.a, self.a))

    def test_compose(self):
        phi = LieAlgebraMorphism(self.L2, self.L, {'x': self.aw})
        identity = LieAlgebraMorphism.identity(self.L)
        e = self.L2.parse('[x,[x,y]]', W)
        self.assertEqual(identity.compose(phi)(e), phi(e))
        self.assertTrue(phi(e).is_zero())

    def test_degree_mismatch(self):
        self.assertRaises(ValueError, LieAlgebraMorphism, self.L2, self.L,
                          {'y': self.bw})
