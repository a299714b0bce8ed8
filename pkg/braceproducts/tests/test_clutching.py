from braceproducts.abelian_groups import FGAbGroup
from braceproducts.clutching import (
    AuditFailure,
    ClutchingClass,
    NoLift,
    SplitElement,
    TorsionExpr,
    brace_from_clutching,
    enumerate_classes,
    exactness_audit,
    fibre_equiv_decision,
    husemoller_rectified,
    ingest_clutching,
    p_map,
    rational_split_certificate,
    suspension_image_check,
    thom_attaching,
)
from braceproducts.graded_lie import Unsupported
from braceproducts.homotopy_tables import MissingEntry, SchemaError
from braceproducts.tests.test_braceproducts import BraceProductsTestCase


def clutching_document(maps=(), sequences=()):
    return {'schema': 'clutching/1', 'maps': list(maps),
            'sequences': list(sequences)}


def catalog_map(kind, source, target, matrix):
    return {'kind': kind,
            'source': {'space': {'kind': source[0], 'param': source[1]},
                       'degree': source[2]},
            'target': {'space': {'kind': target[0], 'param': target[1]},
                       'degree': target[2]},
            'matrix': matrix, 'citation': 'test map',
            'provenance': 'literature'}


class TestMapCatalog(BraceProductsTestCase):

    def test_bundled(self):
        self.assertEqual(self.catalog.sequence_dimensions(), [2, 10, 12])
        j = self.catalog.j_map(3, 3)
        self.assertTrue(j.hom.is_surjective())
        self.assertEqual(repr(j), 'j: pi_3(SO(3)) -> pi_6(S^3)')
        self.assertRaises(MissingEntry, self.catalog.j_map, 3, 40)
        self.assertEqual(len(self.catalog.maps('boundary')), 3)

    def test_schema_errors(self):
        bad_kind = catalog_map('twist', ('so', 3, 3), ('sphere', 3, 6),
                               [[1]])
        self.assertRaises(SchemaError, ingest_clutching,
                          clutching_document([bad_kind]), self.table)
        missing = catalog_map('j', ('so', 3, 40), ('sphere', 3, 43), [[1]])
        self.assertRaises(SchemaError, ingest_clutching,
                          clutching_document([missing]), self.table)
        # Z_2 -> Z_12 sending the generator to a generator
        not_hom = catalog_map('suspension', ('sphere', 3, 4),
                              ('sphere', 3, 6), [[1]])
        with self.assertRaises(SchemaError) as cm:
            ingest_clutching(clutching_document([not_hom]), self.table)
        self.assertIn('maps[0].matrix', str(cm.exception))
        odd = {'n': 3, 'p_image': [1], 'euler': [[1]], 'citation': 'x'}
        self.assertRaises(SchemaError, ingest_clutching,
                          clutching_document([], [odd]), self.table)
        self.assertRaises(SchemaError, ingest_clutching, '{', self.table)


class TestExactness(BraceProductsTestCase):

    def test_shipped_sequences(self):
        for seq in self.catalog.exact_sequences():
            v = exactness_audit(seq)
            self.assertTrue(v.holds)
            self.assertIn('iota_* o d = 0', v.certificate['checks'])

    def test_mutations_are_detected(self):
        seq = self.catalog.exact_sequence(2)
        for name, row, column in seq.entries():
            self.assertRaises(AuditFailure, exactness_audit,
                              seq.mutated(name, row, column))

    def test_mutated_unknown_field(self):
        seq = self.catalog.exact_sequence(2)
        self.assertRaises(ValueError, seq.mutated, 'bogus', 0)


class TestClutchingClass(BraceProductsTestCase):

    def test_from_coordinates(self):
        c = ClutchingClass.from_coordinates(4, 2, 1)
        self.assertEqual(c.j_image, FGAbGroup(0, [12])(1))
        self.assertEqual(c.structure_group, 'SO(3)')
        self.assertTrue(c.citations)

    def test_from_lift(self):
        c = ClutchingClass.from_lift(2, 2, [1])
        d = c.to_json()
        self.assertEqual(d['rho'], [1])
        self.assertEqual(d['lift'], [1])
        self.assertEqual(d['j_image'], [1])
        self.assertEqual(d['lift_j_image'], [-1])

    def test_inconsistent_lift(self):
        self.assertRaises(ValueError, ClutchingClass.from_coordinates,
                          2, 2, [0], [1])

    def test_errors(self):
        self.assertRaises(Unsupported, ClutchingClass, 1, 2, None)
        Z = FGAbGroup(1)
        self.assertRaises(ValueError, ClutchingClass, 4, 2, Z(1),
                          j_image=Z(1))
        self.assertRaises(MissingEntry, ClutchingClass.from_coordinates,
                          3, 2, [0])

    def test_enumerate(self):
        classes = enumerate_classes(2, 2)
        self.assertEqual([list(c.rho.coords) for c in classes], [[0], [1]])
        self.assertRaises(Unsupported, enumerate_classes, 4, 2)


class TestBrace(BraceProductsTestCase):

    def test_husemoller_bundle(self):
        c = ClutchingClass.from_coordinates(4, 2, 1)
        brace = brace_from_clutching(c)
        self.assertEqual(brace.value, FGAbGroup(0, [12])(11))
        self.assertEqual(repr(brace.formal), '-J[rho]')
        self.assertFalse(brace.is_zero())
        self.assertTrue(brace.to_json()['suspended'])

    def test_general_base(self):
        c = ClutchingClass.from_coordinates(4, 2, 1)
        brace = brace_from_clutching(c, base_is_suspension=False)
        self.assertEqual(brace.value, None)
        self.assertEqual(repr(brace.formal), 'J[eps] - J[rho]')
        with_phi = brace_from_clutching(c, phi='phi', resolve=False)
        self.assertEqual(repr(with_phi.formal), '-J[rho]')

    def test_trivial_clutching(self):
        c = ClutchingClass.from_coordinates(4, 2, 0)
        self.assertTrue(brace_from_clutching(c).is_zero())


class TestSuspension(BraceProductsTestCase):

    def test_j_image_escapes_suspension(self):
        c = ClutchingClass.from_coordinates(4, 2, 1)
        v = suspension_image_check(c)
        self.assertTrue(v.fails)
        self.assertEqual(v.witness, FGAbGroup(0, [12])(1))
        self.assertTrue(v.certificate['j_onto'])
        self.assertFalse(v.certificate['suspension_onto'])

    def test_even_multiples_are_suspensions(self):
        c = ClutchingClass.from_coordinates(4, 2, 6)
        self.assertTrue(suspension_image_check(c).holds)

    def test_rectified_needs_lift(self):
        c = ClutchingClass.from_coordinates(4, 2, 1)
        with self.assertRaises(NoLift) as cm:
            husemoller_rectified(c)
        self.assertTrue(cm.exception.escapes)

    def test_rectified_with_lift(self):
        c = ClutchingClass.from_lift(2, 2, [1])
        value, certificate = husemoller_rectified(c)
        self.assertEqual(value, c.j_image)
        self.assertEqual(certificate['neg_j_xi'], FGAbGroup(1)(1))


class TestThomAndEquivalence(BraceProductsTestCase):

    def test_thom_attaching(self):
        c = ClutchingClass.from_lift(2, 2, [1])
        thom = thom_attaching(c)
        self.assertEqual(thom.attaching, FGAbGroup(1)(-1))
        self.assertTrue(thom.thom_space.startswith('D^4 u_Phi S^2'))
        self.assertRaises(NoLift, thom_attaching,
                          ClutchingClass.from_coordinates(4, 2, 1))

    def test_fibre_equivalence(self):
        c0, c1 = enumerate_classes(2, 2)
        self.assertTrue(fibre_equiv_decision(c1, c1).holds)
        v = fibre_equiv_decision(c0, c1)
        self.assertTrue(v.fails)
        self.assertEqual(v.witness, FGAbGroup(0, [2])(1))

    def test_fibre_self_map(self):
        c1 = ClutchingClass.from_coordinates(4, 2, 1)
        c5 = ClutchingClass.from_coordinates(4, 2, 5)
        v = fibre_equiv_decision(c1, c5)
        self.assertEqual(v.witness, FGAbGroup(0, [12])(4))
        self.assertTrue(fibre_equiv_decision(c1, c5, lambda x: 5*x).holds)
        self.assertRaises(ValueError, fibre_equiv_decision, c1,
                          enumerate_classes(2, 2)[0])


class TestPMap(BraceProductsTestCase):

    def test_values(self):
        self.assertEqual(p_map(2), SplitElement(2))
        self.assertEqual(p_map(6), SplitElement(1))
        self.assertEqual(p_map(4), SplitElement(2, TorsionExpr.symbol('g_4',
                                                                      12)))
        self.assertEqual(repr(p_map(4)), '(2, g_4)')
        self.assertEqual(repr(p_map(8)), '(2, g_8)')
        self.assertRaises(ValueError, p_map, 3)

    def test_torsion_expr(self):
        g = TorsionExpr.symbol('g_4', 12)
        self.assertTrue((12*g).is_zero())
        self.assertEqual(repr(g + g), '2*g_4')
        self.assertEqual(repr(-g), '11*g_4')
        self.assertEqual(g - g, 0)


class TestRationalSplitting(BraceProductsTestCase):

    def test_odd_fibre(self):
        v = rational_split_certificate(4, 3)
        self.assertTrue(v.holds)
        self.assertEqual(v.certificate['branch'], 'odd fibre')

    def test_degree_count(self):
        v = rational_split_certificate(6, 4)
        self.assertEqual(v.certificate['branch'], 'degree count')

    def test_shipped_sequence(self):
        c = ClutchingClass.from_coordinates(12, 12, 1)
        v = rational_split_certificate(12, 12, c)
        self.assertTrue(v.holds)
        self.assertTrue(v.certificate['neg_j_xi_prime'].is_torsion())
        c = ClutchingClass.from_lift(2, 2, [1])
        v = rational_split_certificate(2, 2, c)
        self.assertEqual(v.certificate['m'], 1)
        self.assertTrue(v.certificate['neg_j_xi_prime'].is_zero())

    def test_shipped_sequence_without_class(self):
        for n, ms in [(2, [1]), (10, [1, 0]), (12, [1, 0])]:
            v = rational_split_certificate(n, n)
            self.assertTrue(v.holds)
            self.assertEqual(v.certificate['branch'],
                             'n = q even (all classes)')
            generators = v.certificate['generators']
            self.assertEqual([entry['m'] for entry in generators], ms)
            for entry in generators:
                self.assertTrue(entry['neg_j_xi_prime'].is_torsion())
        v = rational_split_certificate(12, 12)
        self.assertTrue(v.certificate['generators'][0]['xi_prime'].is_zero())

    def test_symbolic(self):
        g = TorsionExpr.symbol('g_4', 12)
        v = rational_split_certificate(4, 4,
                                       neg_j_lift=SplitElement(3, g))
        result = v.certificate['neg_j_xi_prime']
        self.assertTrue(result.is_torsion())
        self.assertEqual(result, SplitElement(0, -g))
        v = rational_split_certificate(4, 4)
        self.assertTrue(v.holds)
        self.assertEqual(v.certificate['branch'], 'n = q even (unconditional)')

    def test_simply_connected(self):
        self.assertRaises(Unsupported, rational_split_certificate, 4, 1)
