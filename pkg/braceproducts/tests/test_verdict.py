import unittest

from braceproducts.abelian_groups import FGAbGroup
from braceproducts.verdict import (
    CAVEATS,
    CONVERSE_FAILS,
    SECTION_DEPENDENT,
    Status,
    Verdict,
    jsonify,
)


class TestVerdict(unittest.TestCase):

    def setUp(self):
        self.Z12 = FGAbGroup(0, [12])

    def test_fails_needs_witness(self):
        self.assertRaises(ValueError, Verdict, Status.FAILS, 'h-split')
        self.assertRaises(ValueError, Verdict, Status.FAILS, 'h-split',
                          self.Z12(0))
        v = Verdict(Status.FAILS, 'h-split', self.Z12(1))
        self.assertTrue(v.fails)
        self.assertFalse(v.holds)

    def test_degree_bound(self):
        self.assertRaises(ValueError, Verdict, 'holds_up_to_degree', 'x')
        v = Verdict('holds_up_to_degree', 'x', degree=12)
        self.assertEqual(v.status, Status.HOLDS_UP_TO_DEGREE)
        self.assertEqual(repr(v), 'x: holds_up_to_degree(12)')

    def test_caveats(self):
        self.assertRaises(ValueError, Verdict, Status.HOLDS, 'x',
                          caveats=['NOT_A_TAG'])
        v = Verdict(Status.HOLDS, 'x',
                    caveats=[SECTION_DEPENDENT, CONVERSE_FAILS,
                             SECTION_DEPENDENT])
        self.assertEqual(v.caveats, (CONVERSE_FAILS, SECTION_DEPENDENT))
        self.assertEqual(len(CAVEATS), 6)

    def test_to_json(self):
        v = Verdict(Status.FAILS, 'h-split', self.Z12(2),
                    certificate={'group': self.Z12, 'order': 6},
                    caveats=[SECTION_DEPENDENT], citations=['a row'])
        d = v.to_json()
        self.assertEqual(d['status'], 'fails')
        self.assertEqual(d['citations'], ['a row'])
        self.assertEqual(d['caveats'][0]['tag'], SECTION_DEPENDENT)
        self.assertEqual(d['witness_text'], str(self.Z12(2)))
        self.assertEqual(d['certificate']['order'], 6)
        self.assertFalse('degree' in d)

    def test_jsonify(self):
        self.assertEqual(jsonify({1: (2, None, True)}), {'1': [2, None, True]})
        self.assertEqual(jsonify(self.Z12), self.Z12.to_json())
        self.assertEqual(jsonify(self.Z12(5)), self.Z12(5).to_json())
        self.assertEqual(jsonify(1.5), '1.5')
