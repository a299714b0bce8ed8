r"""
Verdicts :mod:`verdict`
=======================

The output contract of every decision procedure: a qualified boolean with a
certificate, tagged caveats and the citations it rests on.

Classes
-------

.. autosummary::

    Status
    Verdict

Contents
--------

"""
import enum


class Status(enum.Enum):
    HOLDS = 'holds'
    FAILS = 'fails'
    HOLDS_UP_TO_DEGREE = 'holds_up_to_degree'
    UNKNOWN = 'unknown'


GENERALIZED_BRACE_NOT_IMPLIED = 'GENERALIZED_BRACE_NOT_IMPLIED'
CONVERSE_FAILS = 'CONVERSE_FAILS'
SECTION_DEPENDENT = 'SECTION_DEPENDENT'
SUSPENDED_ZERO = 'SUSPENDED_ZERO'
TORSION_COEFFICIENTS = 'TORSION_COEFFICIENTS'
ONE_DIRECTIONAL = 'ONE_DIRECTIONAL'

CAVEATS = {
    GENERALIZED_BRACE_NOT_IMPLIED:
        'vanishing of the James brace product does not imply vanishing of '
        'the generalized brace product (Porter: a fibration over '
        'K(Z,6n) with a section)',
    CONVERSE_FAILS:
        'a rational product decomposition does not force a section or a '
        'vanishing brace product',
    SECTION_DEPENDENT:
        'the brace product was computed for one section; another section '
        'may have vanishing brace product',
    SUSPENDED_ZERO:
        'only the suspension of the brace product is known and it is zero; '
        'the brace product itself is undetermined',
    TORSION_COEFFICIENTS:
        'James-level vanishing is not known to suffice for wedges of '
        'general double suspensions',
    ONE_DIRECTIONAL:
        'a vanishing rational brace product gives a rational product; a '
        'nonzero one does not rule it out',
}


def jsonify(value):
    r"""Converts certificate payloads to JSON-native values."""
    if hasattr(value, 'to_json'):
        return jsonify(value.to_json())
    if isinstance(value, dict):
        return dict((str(k), jsonify(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [jsonify(v) for v in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


class Verdict(object):
    r"""A qualified answer of a decision procedure.

    Parameters
    ----------
    status : Status
    subject : str
        What the verdict is about, e.g. ``h-split``.
    witness : object, optional
        A nonzero element (LieElement, GroupElement, ...) justifying a
        failure. Required when `status` is FAILS.
    certificate : dict, optional
        Further structured evidence.
    caveats : list of str
        Caveat tags from :data:`CAVEATS`.
    citations : list of str
        Anchors of the theorems and table rows used.
    degree : int, optional
        The degree bound of a HOLDS_UP_TO_DEGREE verdict.
    """
    def __init__(self, status, subject, witness=None, certificate=None,
                 caveats=(), citations=(), degree=None):
        status = Status(status)
        if status is Status.FAILS:
            if witness is None or witness.is_zero():
                raise ValueError('a failing verdict needs a nonzero witness')
        if status is Status.HOLDS_UP_TO_DEGREE and degree is None:
            raise ValueError('a degree-bounded verdict needs its degree')
        for tag in caveats:
            if tag not in CAVEATS:
                raise ValueError('unknown caveat %r' % (tag,))
        self.status = status
        self.subject = subject
        self.witness = witness
        self.certificate = dict(certificate or {})
        self.caveats = tuple(sorted(set(caveats)))
        self.citations = tuple(citations)
        self.degree = degree

    def __repr__(self):
        s = '%s: %s' % (self.subject, self.status.value)
        if self.degree is not None:
            s += '(%d)' % self.degree
        if self.witness is not None:
            s += ' [witness %s]' % (self.witness,)
        if self.caveats:
            s += ' {%s}' % ', '.join(self.caveats)
        return s

    @property
    def holds(self):
        return self.status is Status.HOLDS

    @property
    def fails(self):
        return self.status is Status.FAILS

    def to_json(self):
        d = {'subject': self.subject, 'status': self.status.value,
             'caveats': [{'tag': t, 'note': CAVEATS[t]}
                         for t in self.caveats],
             'citations': list(self.citations),
             'certificate': jsonify(self.certificate)}
        if self.degree is not None:
            d['degree'] = self.degree
        if self.witness is not None:
            d['witness'] = jsonify(self.witness)
            d['witness_text'] = str(self.witness)
        return d
