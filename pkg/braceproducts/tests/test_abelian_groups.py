import unittest

from braceproducts.abelian_groups import (
    FGAbGroup,
    GroupHomomorphism,
    invariant_factors,
    solve_integer_system,
)


class TestInvariantFactors(unittest.TestCase):

    def test_divisor_chain(self):
        self.assertEqual(invariant_factors([2, 4]), (2, 4))
        self.assertEqual(invariant_factors([4, 2]), (2, 4))
        self.assertEqual(invariant_factors([2, 3]), (6,))
        self.assertEqual(invariant_factors([4, 6]), (2, 12))
        self.assertEqual(invariant_factors([1, 1]), ())

    def test_nonpositive(self):
        self.assertRaises(ValueError, invariant_factors, [0])


class TestFGAbGroup(unittest.TestCase):

    def setUp(self):
        self.Z = FGAbGroup(1)
        self.Z12 = FGAbGroup(0, [12])
        self.G = FGAbGroup(1, [2, 2, 2])

    def test_canonical(self):
        G = FGAbGroup(0, [3, 4])
        self.assertEqual(G, self.Z12)
        self.assertFalse(G.was_canonical)
        self.assertTrue(self.Z12.was_canonical)
        self.assertEqual(str(self.G), 'Z + Z_2 + Z_2 + Z_2')
        self.assertEqual(str(FGAbGroup()), '0')

    def test_order(self):
        self.assertEqual(self.Z12.order(), 12)
        self.assertEqual(self.G.order(), None)
        self.assertTrue(FGAbGroup().is_trivial())
        self.assertTrue(self.Z12.is_finite())

    def test_from_relations(self):
        self.assertEqual(FGAbGroup.from_relations(2, [[2, 0], [0, 3]]),
                         FGAbGroup(0, [6]))
        self.assertEqual(FGAbGroup.from_relations(2, [[2, 4]]),
                         FGAbGroup(1, [2]))
        self.assertEqual(FGAbGroup.from_relations(3, []), FGAbGroup(3))
        self.assertRaises(ValueError, FGAbGroup.from_relations, 2, [[1]])

    def test_elements(self):
        x = self.Z12(5)
        self.assertEqual(x + x, self.Z12(10))
        self.assertEqual(-x, self.Z12(7))
        self.assertEqual(12*x, 0)
        self.assertEqual(x.order(), 12)
        self.assertEqual(self.Z12(4).order(), 3)
        self.assertEqual(self.Z(3).order(), None)
        self.assertEqual(repr(self.G([1, 0, 1, 3])), '(1, 0, 1, 1)')

    def test_wrong_coordinates(self):
        self.assertRaises(ValueError, self.G, [1, 0])
        self.assertRaises(ValueError, lambda: self.Z(1) + self.Z12(1))

    def test_quotient(self):
        self.assertEqual(self.Z.quotient([self.Z(2)]), FGAbGroup(0, [2]))
        self.assertEqual(self.Z12.quotient([self.Z12(4)]), FGAbGroup(0, [4]))
        self.assertTrue(self.Z12.contains([self.Z12(4)], self.Z12(8)))
        self.assertFalse(self.Z12.contains([self.Z12(4)], self.Z12(2)))


class TestGroupHomomorphism(unittest.TestCase):

    def setUp(self):
        self.Z = FGAbGroup(1)
        self.Z2 = FGAbGroup(0, [2])
        self.Z12 = FGAbGroup(0, [12])

    def test_reduction(self):
        f = GroupHomomorphism(self.Z, self.Z2, [[1]])
        self.assertTrue(f.is_surjective())
        self.assertEqual(f(self.Z(3)), self.Z2(1))
        self.assertEqual(f.cokernel(), FGAbGroup())
        self.assertEqual(f.preimage(self.Z2(1)), self.Z(1))

    def test_not_surjective(self):
        # the image of Z_2 in Z_12 is {0, 6}
        f = GroupHomomorphism(self.Z2, self.Z12, [[6]])
        self.assertFalse(f.is_surjective())
        self.assertEqual(f.cokernel(), FGAbGroup(0, [6]))
        self.assertEqual(f.preimage(self.Z12(1)), None)
        self.assertEqual(f.preimage(self.Z12(6)), self.Z2(1))

    def test_well_defined(self):
        self.assertRaises(ValueError, GroupHomomorphism, self.Z2, self.Z12,
                          [[1]])
        f = GroupHomomorphism(self.Z2, self.Z12, [[1]], check=False)
        self.assertFalse(f.is_well_defined())

    def test_compose(self):
        f = GroupHomomorphism(self.Z, self.Z12, [[2]])
        g = GroupHomomorphism(self.Z12, self.Z2, [[1]])
        h = g.compose(f)
        self.assertTrue(h.is_zero())
        self.assertEqual((-f)(self.Z(1)), self.Z12(10))
        self.assertEqual(GroupHomomorphism.zero_map(self.Z, self.Z2),
                         h)
        self.assertRaises(ValueError, f.compose, g)

    def test_matrix_shape(self):
        self.assertRaises(ValueError, GroupHomomorphism, self.Z, self.Z2,
                          [[1, 0]])


class TestSolveIntegerSystem(unittest.TestCase):

    def test_solvable(self):
        A = [[2, 4], [0, 3]]
        x = solve_integer_system(A, [2, 3])
        self.assertEqual([sum(a*c for a, c in zip(row, x)) for row in A],
                         [2, 3])

    def test_unsolvable(self):
        self.assertEqual(solve_integer_system([[2]], [1]), None)
        self.assertEqual(solve_integer_system([[2, 4]], [3]), None)

    def test_empty(self):
        self.assertEqual(solve_integer_system([[]], [0]), ())
