import os
import unittest
import warnings

from braceproducts.abelian_groups import FGAbGroup
from braceproducts.homotopy_tables import (
    BUNDLED_TABLE,
    MissingEntry,
    NonCanonicalTorsion,
    SchemaError,
    SpaceName,
    TABLE_PATH_VARIABLE,
    group_lookup,
    ingest_table,
    lie_group_rational_degrees,
    rational_pi_sphere,
    rationalize,
    resolve_table_path,
)
from braceproducts.tests.test_braceproducts import BraceProductsTestCase


def document(entries, products=(), lie_groups=()):
    return {'schema': 'htpy-table/1', 'entries': list(entries),
            'products': list(products), 'lie_groups': list(lie_groups)}


def entry(param, degree, rank=0, torsion=(), **extra):
    d = {'space': {'kind': 'sphere', 'param': param}, 'degree': degree,
         'rank': rank, 'torsion': list(torsion), 'citation': 'test row',
         'provenance': 'literature'}
    d.update(extra)
    return d


class TestSpaceName(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(SpaceName.parse('S3'), SpaceName.sphere(3))
        self.assertEqual(SpaceName.parse('S^3'), SpaceName.sphere(3))
        self.assertEqual(SpaceName.parse('Sphere 3'), SpaceName.sphere(3))
        self.assertEqual(SpaceName.parse('SO(13)'), SpaceName.so(13))
        self.assertEqual(SpaceName.parse('su(3)'),
                         SpaceName('lie_group', 'SU(3)'))
        self.assertEqual(SpaceName.parse('G2'), SpaceName('lie_group', 'G2'))
        self.assertEqual(SpaceName.parse('custom:X').kind, 'custom')
        self.assertRaises(ValueError, SpaceName.parse, 'torus')

    def test_repr(self):
        self.assertEqual(repr(SpaceName.sphere(3)), 'S^3')
        self.assertEqual(repr(SpaceName.so(3)), 'SO(3)')

    def test_invalid(self):
        self.assertRaises(ValueError, SpaceName, 'sphere', 0)
        self.assertRaises(ValueError, SpaceName, 'manifold', 3)


class TestBundledTable(BraceProductsTestCase):

    def test_worked_example_groups(self):
        self.assertEqual(group_lookup('S3', 6), FGAbGroup(0, [12]))
        self.assertEqual(group_lookup('S13', 24), FGAbGroup(0, [504]))
        self.assertEqual(group_lookup('S12', 23), FGAbGroup(1, [504]))
        self.assertEqual(group_lookup('SO(3)', 3), FGAbGroup(1))
        self.assertEqual(group_lookup('SU(3)', 4), FGAbGroup())

    def test_rule_groups(self):
        self.assertEqual(self.table.group('S5', 3), FGAbGroup())
        self.assertEqual(self.table.group('S5', 5), FGAbGroup(1))
        self.assertEqual(self.table.lookup('S5', 5).generator_names,
                         ('iota_5',))

    def test_missing_entry(self):
        with self.assertRaises(MissingEntry) as cm:
            self.table.lookup('S3', 40)
        self.assertEqual(cm.exception.degree, 40)
        self.assertFalse(('S3', 40) in self.table)
        self.assertTrue(('S3', 6) in self.table)

    def test_citations(self):
        for e in self.table:
            self.assertTrue(e.citation)
            self.assertIn(e.provenance, ('paper', 'literature'))

    def test_products(self):
        p = self.table.product('S2', (2, 0), (2, 0))
        self.assertEqual(list(p.value.coords), [2])
        self.assertEqual(self.table.product('S2', (3, 0), (3, 0)), None)

    def test_named_elements(self):
        e = self.table.named_element('g_4')
        self.assertEqual(e.space, SpaceName.sphere(4))
        self.assertEqual(e.named_elements['g_4'].order_divides, 12)
        self.assertRaises(MissingEntry, self.table.named_element, 'g_5')

    def test_consulted(self):
        self.table.clear_consulted()
        self.table.lookup('S3', 6)
        self.table.lookup('S5', 5)
        self.assertEqual(self.table.consulted(),
                         [self.table.lookup('S3', 6).citation])
        self.table.clear_consulted()
        self.assertEqual(self.table.consulted(), [])


class TestRational(unittest.TestCase):

    def test_rationalize(self):
        self.assertEqual(rationalize(FGAbGroup(0, [12])), 0)
        self.assertEqual(rationalize(FGAbGroup(1, [2])), 1)
        self.assertEqual(rationalize(group_lookup('S4', 7)), 1)

    def test_rational_pi_sphere(self):
        self.assertEqual(rational_pi_sphere(3, 3), 1)
        self.assertEqual(rational_pi_sphere(3, 5), 0)
        self.assertEqual(rational_pi_sphere(4, 7), 1)
        self.assertEqual(rational_pi_sphere(4, 6), 0)
        self.assertRaises(ValueError, rational_pi_sphere, 1, 1)

    def test_lie_groups(self):
        self.assertEqual(lie_group_rational_degrees('SU(3)'), [3, 5])
        self.assertEqual(lie_group_rational_degrees('Sp(2)'), [3, 7])
        self.assertEqual(lie_group_rational_degrees('G2'), [3, 11])
        self.assertRaises(MissingEntry, lie_group_rational_degrees, 'E8')


class TestIngest(unittest.TestCase):

    def test_report(self):
        with open(BUNDLED_TABLE, encoding='utf-8') as f:
            table, report = ingest_table(f.read(), source='bundled')
        self.assertEqual(report.entries, len(table))
        self.assertEqual(report.warnings, [])
        self.assertTrue(any('Z_12' in e or '12' in e
                            for e in report.paper_entries))
        self.assertTrue(repr(report).startswith('OK, %d entries' %
                                                len(table)))

    def test_non_canonical_torsion(self):
        doc = document([entry(3, 6, 0, [4, 3])])
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            table, report = ingest_table(doc)
        self.assertTrue(any(issubclass(w.category, NonCanonicalTorsion)
                            for w in caught))
        self.assertEqual(len(report.warnings), 1)
        self.assertIn('entries[0]', report.warnings[0])
        self.assertEqual(table.group('S3', 6), FGAbGroup(0, [12]))

    def test_relations(self):
        doc = document([entry(3, 6, relations={'generators': 2,
                                               'rows': [[4, 0], [0, 3]]})])
        del doc['entries'][0]['rank']
        del doc['entries'][0]['torsion']
        table, _ = ingest_table(doc)
        self.assertEqual(table.group('S3', 6), FGAbGroup(0, [12]))

    def test_schema_errors(self):
        self.assertRaises(SchemaError, ingest_table, '{"schema": ')
        self.assertRaises(SchemaError, ingest_table, [])
        self.assertRaises(SchemaError, ingest_table,
                          {'schema': 'htpy-table/2', 'entries': []})
        bad = entry(3, 6, 0, [12])
        del bad['citation']
        with self.assertRaises(SchemaError) as cm:
            ingest_table(document([bad]))
        self.assertIn('entries[0]', str(cm.exception))
        self.assertRaises(SchemaError, ingest_table,
                          document([entry(3, 6, 0, [12], provenance='blog')]))
        self.assertRaises(SchemaError, ingest_table,
                          document([entry(3, 6, -1, [])]))
        self.assertRaises(SchemaError, ingest_table,
                          document([entry(3, 6, 0, [12]),
                                    entry(3, 6, 0, [12])]))

    def test_product_needs_target(self):
        product = {'space': {'kind': 'sphere', 'param': 3},
                   'left': {'degree': 3, 'generator': 0},
                   'right': {'degree': 3, 'generator': 0},
                   'value': [0], 'citation': 'test',
                   'provenance': 'literature'}
        self.assertRaises(SchemaError, ingest_table,
                          document([], [product]))

    def test_json_line(self):
        with self.assertRaises(SchemaError) as cm:
            ingest_table('{\n"schema": "htpy-table/1",\n"entries": [,]}')
        self.assertIn('line 3', str(cm.exception))


class TestConfiguration(unittest.TestCase):

    def setUp(self):
        self.saved = os.environ.pop(TABLE_PATH_VARIABLE, None)

    def tearDown(self):
        os.environ.pop(TABLE_PATH_VARIABLE, None)
        if self.saved is not None:
            os.environ[TABLE_PATH_VARIABLE] = self.saved

    def test_precedence(self):
        self.assertEqual(resolve_table_path(), BUNDLED_TABLE)
        os.environ[TABLE_PATH_VARIABLE] = '/env/table.json'
        self.assertEqual(resolve_table_path(), '/env/table.json')
        self.assertEqual(resolve_table_path('/flag.json'), '/flag.json')
