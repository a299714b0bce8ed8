r"""
Reports :mod:`report`
=====================

The output of every command line invocation. A report echoes the command
and its inputs, lists the verdicts reached and the citations of the table
rows consulted, and renders either as text or as JSON. The JSON form has no
timestamps and sorted keys, so equal inputs give byte-identical output and
a parsed report re-emits to the same bytes.

Classes
-------

.. autosummary::

    Report

Contents
--------

"""
import json

from .verdict import Status, jsonify
from .version import __version__

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILS = 2


def _verdict_json(v):
    return v if isinstance(v, dict) else v.to_json()


class Report(object):
    r"""A command's outcome.

    Parameters
    ----------
    command : str
    inputs : dict
        The parsed arguments the command ran on.
    verdicts : list
        :class:`Verdict` objects, or their JSON forms for a parsed report.
    tables_used : list of str
        Citations of the table rows consulted.
    results : dict, optional
        Command-specific payload, e.g. suite counts or table entries.
    failed : bool
        Marks a failure not expressed by a verdict, e.g. a property suite
        with failing trials.
    """
    def __init__(self, command, inputs=None, verdicts=(), tables_used=(),
                 results=None, failed=False, version=__version__):
        self.command = command
        self.inputs = dict(inputs or {})
        self.verdicts = list(verdicts)
        self.tables_used = sorted(set(tables_used))
        self.results = dict(results or {})
        self.failed = failed
        self.version = version

    def __repr__(self):
        return 'Report(%s, %d verdicts)' % (self.command, len(self.verdicts))

    @property
    def exit_code(self):
        r"""2 when a verdict fails or :attr:`failed` is set, 0 otherwise."""
        statuses = [_verdict_json(v)['status'] for v in self.verdicts]
        if self.failed or Status.FAILS.value in statuses:
            return EXIT_FAILS
        return EXIT_OK

    def to_json(self):
        d = {'command': self.command,
             'inputs': jsonify(self.inputs),
             'verdicts': [_verdict_json(v) for v in self.verdicts],
             'tables_used': list(self.tables_used),
             'version': self.version}
        if self.results:
            d['results'] = jsonify(self.results)
        if self.failed:
            d['failed'] = True
        return d

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + '\n'

    @classmethod
    def loads(cls, text):
        r"""Parses the output of :meth:`dumps`."""
        d = json.loads(text)
        return cls(d['command'], d.get('inputs'), d.get('verdicts', ()),
                   d.get('tables_used', ()), d.get('results'),
                   d.get('failed', False), d.get('version', __version__))

    def render(self):
        r"""Returns the human-readable form."""
        lines = ['braceproducts %s: %s' % (self.version, self.command)]
        for key, value in sorted(self.inputs.items()):
            if value is not None:
                lines.append('  %s = %s' % (key, value))
        for v in self.verdicts:
            d = _verdict_json(v)
            status = d['status'].upper()
            if 'degree' in d:
                status += '(%d)' % d['degree']
            lines.append('')
            lines.append('%s: %s' % (d['subject'], status))
            if 'witness_text' in d:
                lines.append('  witness: %s' % d['witness_text'])
            for key, value in sorted(d['certificate'].items()):
                lines.append('  %s: %s' % (key, json.dumps(value,
                                                            sort_keys=True)))
            for c in d['caveats']:
                lines.append('  caveat %s: %s' % (c['tag'], c['note']))
            for c in d['citations']:
                lines.append('  see: %s' % c)
        for key, value in sorted(self.results.items()):
            lines.append('')
            if isinstance(value, list):
                lines.append('%s:' % key)
                lines.extend('  %s' % (item,) for item in value)
            elif isinstance(value, dict):
                lines.append('%s:' % key)
                lines.extend('  %s: %s' % (k, json.dumps(jsonify(v),
                                                         sort_keys=True))
                             for k, v in sorted(value.items()))
            else:
                lines.append('%s: %s' % (key, value))
        if self.tables_used:
            lines.append('')
            lines.append('tables used:')
            lines.extend('  %s' % c for c in self.tables_used)
        return '\n'.join(lines) + '\n'
