import unittest

from braceproducts import FreeGradedLieAlgebra, GradingView, default_table
from braceproducts.clutching import default_catalog


class BraceProductsTestCase(unittest.TestCase):
    def setUp(self):
        # one odd and one even generator
        self.L = FreeGradedLieAlgebra([('a', 1), ('b', 2)])
        self.a, self.b = self.L.gens()
        self.aw, self.bw = self.L.gens(GradingView.WHITEHEAD)

        # two odd generators: squares appear in the basis
        self.L2 = FreeGradedLieAlgebra([('x', 1), ('y', 1)])
        self.x, self.y = self.L2.gens()

        # models of wedges of spheres used by the fibration tests
        self.B = FreeGradedLieAlgebra([('s', 1)])
        self.F = FreeGradedLieAlgebra([('u', 1), ('v', 2)])

    @classmethod
    def setUpClass(cls):
        cls.table = default_table()
        cls.catalog = default_catalog()
