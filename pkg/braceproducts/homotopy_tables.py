r"""
Homotopy Tables :mod:`homotopy_tables`
======================================

Curated, citation-carrying tables of homotopy groups. Every group the
decision procedures consume is looked up here; a query outside the curated
data raises :class:`MissingEntry` and is never silently answered with zero.

Two families of groups are supplied by rule rather than by table rows:
:math:`\pi_k(S^n) = 0` for `0 < k < n` and :math:`\pi_n(S^n) = \mathbb{Z}`.

Table documents are UTF-8 JSON with the top level

.. code-block:: json

    {"schema": "htpy-table/1",
     "entries": [{"space": {"kind": "sphere", "param": 3}, "degree": 6,
                  "rank": 0, "torsion": [12],
                  "citation": "...", "provenance": "paper"}],
     "products": [...],
     "lie_groups": [...]}

An entry may give a relation matrix ``{"generators": n, "rows": [...]}``
under ``"relations"`` instead of ``"rank"``/``"torsion"``; it is reduced to
invariant-factor form by the Smith normal form. Optional ``"generators"``
name the coordinate generators and ``"named_elements"`` declare opaque
torsion elements with order metadata.

The default table is resolved with the precedence: explicit path, then the
environment variable ``BRACE_TABLE_PATH``, then the bundled document.

Classes
-------

.. autosummary::

    SpaceName
    TableEntry
    NamedTorsion
    HomotopyTable
    ValidationReport

Functions
---------

.. autosummary::

    ingest_table
    load_table
    default_table
    group_lookup
    rationalize
    rational_pi_sphere
    lie_group_rational_degrees

References
----------

.. [Toda] H. Toda, "Composition Methods in Homotopy Groups of Spheres",
   Annals of Mathematics Studies 49, 1962.

.. [Kervaire] M. Kervaire, "Some nonstable homotopy groups of Lie groups",
   Illinois J. Math. 4 (1960).

Contents
--------

"""
import functools
import json
import os
import re
import warnings

from .abelian_groups import FGAbGroup

SCHEMA = 'htpy-table/1'
TABLE_PATH_VARIABLE = 'BRACE_TABLE_PATH'
BUNDLED_TABLE = os.path.join(os.path.dirname(__file__), 'data',
                             'htpy_table.json')

SPACE_KINDS = ('sphere', 'so', 'lie_group', 'custom')
PROVENANCES = ('paper', 'literature')


class MissingEntry(ValueError):
    r"""Raised when a query falls outside the curated data."""
    def __init__(self, space, degree, what='group'):
        self.space = space
        self.degree = degree
        if degree is None:
            msg = 'no %s for %s in the loaded tables' % (what, space)
        else:
            msg = 'no %s for pi_%s(%s) in the loaded tables' % (what, degree,
                                                               space)
        ValueError.__init__(self, msg)


class SchemaError(ValueError):
    pass


class NonCanonicalTorsion(UserWarning):
    pass


class SpaceName(object):
    r"""A structured space name.

    Parameters
    ----------
    kind : str
        One of ``sphere``, ``so``, ``lie_group`` or ``custom``.
    param : int or str
        The sphere or SO dimension, or the group or custom name.
    """
    def __init__(self, kind, param):
        if kind not in SPACE_KINDS:
            raise ValueError('unknown space kind %r' % (kind,))
        if kind in ('sphere', 'so'):
            if isinstance(param, bool) or int(param) != param or param < 1:
                raise ValueError('%s needs a positive integer parameter' %
                                 kind)
            param = int(param)
        elif not isinstance(param, str) or not param:
            raise ValueError('%s needs a non-empty name' % kind)
        self.kind = kind
        self.param = param

    @classmethod
    def sphere(cls, n):
        return cls('sphere', n)

    @classmethod
    def so(cls, n):
        return cls('so', n)

    @classmethod
    def parse(cls, text):
        r"""Parses names such as ``S3``, ``S^3``, ``Sphere 3``, ``SO(13)``,
        ``SU(3)``, ``G2`` or ``custom:X``."""
        if isinstance(text, SpaceName):
            return text
        s = str(text).strip()
        m = re.match(r'^(?:S\^?|Sphere\s*)(\d+)$', s, re.I)
        if m:
            return cls('sphere', int(m.group(1)))
        m = re.match(r'^SO\s*\(?\s*(\d+)\s*\)?$', s, re.I)
        if m:
            return cls('so', int(m.group(1)))
        m = re.match(r'^(SU|Sp|Spin)\s*\(?\s*(\d+)\s*\)?$', s, re.I)
        if m:
            prefix = {'su': 'SU', 'sp': 'Sp', 'spin': 'Spin'}[m.group(1).lower()]
            return cls('lie_group', '%s(%s)' % (prefix, m.group(2)))
        if s.upper() == 'G2':
            return cls('lie_group', 'G2')
        if s.lower().startswith('custom:') and len(s) > 7:
            return cls('custom', s[7:])
        raise ValueError('cannot parse space name %r' % (text,))

    @classmethod
    def from_json(cls, obj):
        return cls(obj['kind'], obj['param'])

    def to_json(self):
        return {'kind': self.kind, 'param': self.param}

    def __repr__(self):
        if self.kind == 'sphere':
            return 'S^%d' % self.param
        if self.kind == 'so':
            return 'SO(%d)' % self.param
        return str(self.param)

    def __eq__(self, other):
        if isinstance(other, SpaceName):
            return (self.kind, self.param) == (other.kind, other.param)
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.kind, self.param))

    def sort_key(self):
        return (SPACE_KINDS.index(self.kind), str(self.param).zfill(8))


class NamedTorsion(object):
    r"""An opaque torsion element whose value is deferred to a cited source.

    Only the order bound is known: the element's order divides
    `order_divides`.
    """
    def __init__(self, name, order_divides, citation):
        self.name = name
        self.order_divides = int(order_divides)
        self.citation = citation

    def __repr__(self):
        return 'NamedTorsion(%r, order_divides=%d)' % (self.name,
                                                       self.order_divides)


class TableEntry(object):
    r"""A cited homotopy group :math:`\pi_{degree}(space)`.

    Attributes
    ----------
    space : SpaceName
    degree : int
    group : FGAbGroup
    citation : str
    provenance : str
        ``paper`` or ``literature``.
    generator_names : tuple of str
        Names of the coordinate generators; may be empty.
    named_elements : dict
        Names mapped to :class:`NamedTorsion`.
    """
    def __init__(self, space, degree, group, citation, provenance,
                 generator_names=(), named_elements=None):
        if not citation:
            raise ValueError('table entries need a citation')
        if provenance not in PROVENANCES:
            raise ValueError('unknown provenance %r' % (provenance,))
        generator_names = tuple(generator_names)
        if generator_names and len(generator_names) != group.ngens:
            raise ValueError('%d generator names for a group with %d '
                             'generators' % (len(generator_names),
                                             group.ngens))
        self.space = space
        self.degree = degree
        self.group = group
        self.citation = citation
        self.provenance = provenance
        self.generator_names = generator_names
        self.named_elements = dict(named_elements or {})

    def __repr__(self):
        return 'pi_%d(%s) = %s' % (self.degree, self.space, self.group)

    @property
    def key(self):
        return (self.space, self.degree)

    def generator_name(self, i):
        if self.generator_names:
            return self.generator_names[i]
        return 'g%d' % i

    def to_json(self):
        d = {'space': self.space.to_json(), 'degree': self.degree,
             'rank': self.group.free_rank,
             'torsion': list(self.group.torsion),
             'citation': self.citation, 'provenance': self.provenance}
        if self.generator_names:
            d['generators'] = list(self.generator_names)
        if self.named_elements:
            d['named_elements'] = dict(
                (n, {'order_divides': e.order_divides,
                     'citation': e.citation})
                for n, e in sorted(self.named_elements.items()))
        return d


class WhiteheadProductEntry(object):
    r"""A cited Whitehead product of two generators of sphere groups.

    The product of generator `left_index` of :math:`\pi_p(Z)` with
    generator `right_index` of :math:`\pi_q(Z)` is `value`, an element of
    :math:`\pi_{p+q-1}(Z)`.
    """
    def __init__(self, space, left, right, value, citation, provenance):
        self.space = space
        self.left = left
        self.right = right
        self.value = value
        self.citation = citation
        self.provenance = provenance

    def __repr__(self):
        return '[%s, %s] on %s = %s' % (self.left, self.right, self.space,
                                        self.value)


class LieGroupEntry(object):
    def __init__(self, name, degrees, citation, provenance):
        self.name = name
        self.degrees = tuple(degrees)
        self.citation = citation
        self.provenance = provenance

    def __repr__(self):
        return '%s ~_Q %s' % (self.name,
                              ' x '.join('S^%d' % d for d in self.degrees))


class HomotopyTable(object):
    r"""An immutable collection of :class:`TableEntry` rows.

    Lookups are keyed by `(space, degree)`. Sphere groups below and at the
    dimension of the sphere are supplied by rule. Every row returned by a
    lookup is remembered until :meth:`clear_consulted` so that reports can
    cite the rows they rest on.
    """
    def __init__(self, entries, products=(), lie_groups=(), source=None):
        self._entries = {}
        for e in entries:
            if e.key in self._entries:
                raise ValueError('duplicate entry for pi_%d(%s)' %
                                 (e.degree, e.space))
            self._entries[e.key] = e
        self._products = {}
        for p in products:
            self._products[(p.space, p.left, p.right)] = p
        self._lie_groups = dict((g.name, g) for g in lie_groups)
        self.source = source
        self._consulted = {}

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        keys = sorted(self._entries,
                      key=lambda k: (k[0].sort_key(), k[1]))
        return iter([self._entries[k] for k in keys])

    def __contains__(self, key):
        try:
            self.lookup(*key)
            return True
        except MissingEntry:
            return False

    def lookup(self, space, degree):
        r"""Returns the :class:`TableEntry` for :math:`\pi_{degree}(space)`."""
        space = SpaceName.parse(space)
        degree = int(degree)
        try:
            entry = self._entries[(space, degree)]
            self._consulted[entry.key] = entry.citation
            return entry
        except KeyError:
            pass
        if space.kind == 'sphere' and 0 < degree <= space.param:
            n = space.param
            if degree < n:
                return TableEntry(space, degree, FGAbGroup(),
                                  'cellular approximation: pi_k(S^n) = 0 '
                                  'for k < n', 'literature')
            return TableEntry(space, degree, FGAbGroup(1),
                              'Hopf degree theorem: pi_n(S^n) = Z',
                              'literature', ('iota_%d' % n,))
        raise MissingEntry(space, degree)

    def group(self, space, degree):
        return self.lookup(space, degree).group

    def entries_for(self, space):
        space = SpaceName.parse(space)
        return [e for e in self if e.space == space]

    def product(self, space, left, right):
        r"""Returns the :class:`WhiteheadProductEntry` for generator pairs
        `left = (degree, index)` and `right = (degree, index)`, or `None`."""
        entry = self._products.get((SpaceName.parse(space), tuple(left),
                                    tuple(right)))
        if entry is not None:
            self._consulted[(entry.space, entry.left, entry.right)] = \
                entry.citation
        return entry

    def products(self):
        return list(self._products.values())

    def consulted(self):
        r"""Returns the sorted citations of the rows looked up so far."""
        return sorted(set(self._consulted.values()))

    def clear_consulted(self):
        self._consulted = {}

    def lie_group(self, name):
        try:
            entry = self._lie_groups[name]
            self._consulted[name] = entry.citation
            return entry
        except KeyError:
            raise MissingEntry(name, None, 'rational type')

    def lie_group_names(self):
        return sorted(self._lie_groups)

    def named_element(self, name):
        r"""Returns the table entry declaring the named element `name`."""
        for e in self._entries.values():
            if name in e.named_elements:
                return e
        raise MissingEntry(name, None, 'named element')


class ValidationReport(object):
    r"""The outcome of :func:`ingest_table`.

    Attributes
    ----------
    source : str or None
    entries : int
        Number of entries accepted.
    warnings : list of str
        Normalizations applied, one message per entry.
    paper_entries, literature_entries : list of str
        Entry descriptions grouped by provenance.
    """
    def __init__(self, source=None):
        self.source = source
        self.entries = 0
        self.warnings = []
        self.paper_entries = []
        self.literature_entries = []

    def __repr__(self):
        lines = ['OK, %d entries' % self.entries]
        if self.source:
            lines[0] += ' (%s)' % self.source
        for w in self.warnings:
            lines.append('warning: %s' % w)
        return '\n'.join(lines)

    def to_json(self):
        return {'source': self.source, 'entries': self.entries,
                'warnings': list(self.warnings),
                'paper_entries': list(self.paper_entries),
                'literature_entries': list(self.literature_entries)}


def _require(obj, key, field, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError('%s: missing field %r' % (field, key))
    value = obj[key]
    if kind is int and (isinstance(value, bool) or
                        not isinstance(value, int)):
        raise SchemaError('%s.%s: expected an integer' % (field, key))
    if kind is str and (not isinstance(value, str) or not value.strip()):
        raise SchemaError('%s.%s: expected a non-empty string' % (field, key))
    if kind is list and not isinstance(value, list):
        raise SchemaError('%s.%s: expected a list' % (field, key))
    return value


def _int_list(value, field):
    if not isinstance(value, list) or any(
            isinstance(a, bool) or not isinstance(a, int) for a in value):
        raise SchemaError('%s: expected a list of integers' % field)
    return value


def _parse_space(obj, field):
    kind = _require(obj, 'kind', field)
    param = _require(obj, 'param', field)
    try:
        return SpaceName(kind, param)
    except (TypeError, ValueError) as e:
        raise SchemaError('%s: %s' % (field, e))


def _parse_group(obj, field, report):
    if 'relations' in obj:
        rel = obj['relations']
        ngens = _require(rel, 'generators', field + '.relations', int)
        rows = _require(rel, 'rows', field + '.relations', list)
        for i, row in enumerate(rows):
            _int_list(row, '%s.relations.rows[%d]' % (field, i))
            if len(row) != ngens:
                raise SchemaError('%s.relations.rows[%d]: expected %d '
                                  'entries' % (field, i, ngens))
        if ngens < 0:
            raise SchemaError('%s.relations.generators: negative' % field)
        return FGAbGroup.from_relations(ngens, rows)
    rank = _require(obj, 'rank', field, int)
    if rank < 0:
        raise SchemaError('%s.rank: must be non-negative' % field)
    torsion = _int_list(_require(obj, 'torsion', field, list),
                        field + '.torsion')
    if any(d < 1 for d in torsion):
        raise SchemaError('%s.torsion: cyclic orders must be positive' %
                          field)
    group = FGAbGroup(rank, torsion)
    if not group.was_canonical:
        msg = ('%s: torsion %s normalized to the divisor chain %s' %
               (field, torsion, list(group.torsion)))
        warnings.warn(msg, NonCanonicalTorsion)
        report.warnings.append(msg)
    return group


def _parse_entry(obj, field, report):
    space = _parse_space(_require(obj, 'space', field), field + '.space')
    degree = _require(obj, 'degree', field, int)
    if degree < 0:
        raise SchemaError('%s.degree: must be non-negative' % field)
    group = _parse_group(obj, field, report)
    citation = _require(obj, 'citation', field, str)
    provenance = _require(obj, 'provenance', field)
    if provenance not in PROVENANCES:
        raise SchemaError('%s.provenance: expected one of %s' %
                          (field, PROVENANCES))
    names = obj.get('generators', [])
    if not isinstance(names, list) or \
       any(not isinstance(n, str) for n in names) or \
       (names and len(names) != group.ngens):
        raise SchemaError('%s.generators: expected %d names' %
                          (field, group.ngens))
    named = {}
    for name, meta in sorted(obj.get('named_elements', {}).items()):
        sub = '%s.named_elements.%s' % (field, name)
        order = _require(meta, 'order_divides', sub, int)
        if order < 1:
            raise SchemaError('%s.order_divides: must be positive' % sub)
        named[name] = NamedTorsion(name, order,
                                   _require(meta, 'citation', sub, str))
    return TableEntry(space, degree, group, citation, provenance, names,
                      named)


def _parse_product(obj, field, entries):
    space = _parse_space(_require(obj, 'space', field), field + '.space')
    sides = []
    for side in ('left', 'right'):
        sub = _require(obj, side, field)
        degree = _require(sub, 'degree', '%s.%s' % (field, side), int)
        index = _require(sub, 'generator', '%s.%s' % (field, side), int)
        sides.append((degree, index))
    target = sides[0][0] + sides[1][0] - 1
    if (space, target) not in entries:
        raise SchemaError('%s: no entry for pi_%d(%s) to hold the product' %
                          (field, target, space))
    group = entries[(space, target)].group
    value = _int_list(_require(obj, 'value', field, list), field + '.value')
    if len(value) != group.ngens:
        raise SchemaError('%s.value: expected %d coordinates' %
                          (field, group.ngens))
    provenance = _require(obj, 'provenance', field)
    if provenance not in PROVENANCES:
        raise SchemaError('%s.provenance: expected one of %s' %
                          (field, PROVENANCES))
    return WhiteheadProductEntry(space, sides[0], sides[1], group(value),
                                 _require(obj, 'citation', field, str),
                                 provenance)


def _parse_lie_group(obj, field):
    name = _require(obj, 'name', field, str)
    degrees = _int_list(_require(obj, 'degrees', field, list),
                        field + '.degrees')
    if not degrees or any(d < 3 or d % 2 == 0 for d in degrees):
        raise SchemaError('%s.degrees: expected odd degrees greater than 1' %
                          field)
    provenance = _require(obj, 'provenance', field)
    if provenance not in PROVENANCES:
        raise SchemaError('%s.provenance: expected one of %s' %
                          (field, PROVENANCES))
    return LieGroupEntry(name, sorted(degrees),
                         _require(obj, 'citation', field, str), provenance)


def ingest_table(document, source=None):
    r"""Validates and loads a table document.

    Parameters
    ----------
    document : dict or str
        The parsed JSON document or its text.
    source : str, optional
        A label (usually the path) recorded in the report.

    Returns
    -------
    table : HomotopyTable
    report : ValidationReport

    Raises
    ------
    SchemaError
        With the offending line (for malformed JSON) or field path.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except ValueError as e:
            line = getattr(e, 'lineno', '?')
            raise SchemaError('line %s: invalid JSON: %s' % (line, e))
    if not isinstance(document, dict):
        raise SchemaError('document: expected a JSON object')
    if document.get('schema') != SCHEMA:
        raise SchemaError('schema: expected %r, got %r' %
                          (SCHEMA, document.get('schema')))
    report = ValidationReport(source)
    entries = {}
    for i, obj in enumerate(_require(document, 'entries', 'document', list)):
        field = 'entries[%d]' % i
        entry = _parse_entry(obj, field, report)
        if entry.key in entries:
            raise SchemaError('%s: duplicate entry for pi_%d(%s)' %
                              (field, entry.degree, entry.space))
        entries[entry.key] = entry
        description = '%r [%s]' % (entry, entry.citation)
        if entry.provenance == 'paper':
            report.paper_entries.append(description)
        else:
            report.literature_entries.append(description)
    products = [_parse_product(obj, 'products[%d]' % i, entries)
                for i, obj in enumerate(document.get('products', []))]
    lie_groups = [_parse_lie_group(obj, 'lie_groups[%d]' % i)
                  for i, obj in enumerate(document.get('lie_groups', []))]
    report.entries = len(entries)
    table = HomotopyTable(entries.values(), products, lie_groups, source)
    return table, report


def load_table(path):
    r"""Reads and ingests the table document at `path`."""
    with open(path, encoding='utf-8') as f:
        text = f.read()
    return ingest_table(text, source=path)


def resolve_table_path(path=None):
    r"""Returns the table path by precedence: `path`, then the
    ``BRACE_TABLE_PATH`` environment variable, then the bundled table."""
    if path:
        return path
    return os.environ.get(TABLE_PATH_VARIABLE) or BUNDLED_TABLE


@functools.lru_cache(maxsize=None)
def _cached_table(path):
    return load_table(path)


def default_table(path=None):
    r"""Returns the :class:`HomotopyTable` resolved by
    :func:`resolve_table_path`."""
    return _cached_table(resolve_table_path(path))[0]


def group_lookup(space, degree, table=None):
    r"""Returns the group :math:`\pi_{degree}(space)`.

    Examples
    --------
    >>> group_lookup('S3', 6)
    FGAbGroup(rank=0, torsion=(12,))
    """
    table = table or default_table()
    return table.group(space, degree)


def rationalize(group):
    r"""Returns the rank of :math:`G \otimes \mathbb{Q}`."""
    return group.free_rank


def rational_pi_sphere(n, k):
    r"""Returns the rank of :math:`\pi_k(S^n) \otimes \mathbb{Q}`.

    Rational homotopy of an odd sphere is concentrated in degree `n`; of an
    even sphere, in degrees `n` and `2n-1`.
    """
    n, k = int(n), int(k)
    if n < 2:
        raise ValueError('rational sphere groups need n >= 2')
    if n % 2:
        return int(k == n)
    return int(k in (n, 2*n - 1))


def lie_group_rational_degrees(name, table=None):
    r"""Returns the odd sphere dimensions of the rational type of a compact
    simply connected Lie group.

    Examples
    --------
    >>> lie_group_rational_degrees('SU(3)')
    [3, 5]
    """
    table = table or default_table()
    if not isinstance(name, str):
        name = str(name)
    try:
        name = SpaceName.parse(name).param
    except ValueError:
        pass
    return list(table.lie_group(name).degrees)
