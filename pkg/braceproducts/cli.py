r"""
Command Line :mod:`cli`
=======================

The ``braceproducts`` command. Three subcommands:

``analyze``
    runs every applicable verdict on a fibration, described by a
    ``fibration/1`` document or by inline flags::

        $ braceproducts analyze --kind free-loop --m 2 --space S2
        $ braceproducts analyze --kind sphere-over-sphere --n 12 --q 12 --rho 1
        $ braceproducts analyze --kind surface-bundle --g 1 --n 2 --w2 1

``verify``
    runs a randomized property suite::

        $ braceproducts verify derivation --trials 200 --degree-cap 9

``tables``
    validates or shows a table or clutching document::

        $ braceproducts tables validate
        $ braceproducts tables show --space S3

Every subcommand takes ``--json`` for machine output and ``--table`` and
``--clutching`` to override the documents otherwise found through
``BRACE_TABLE_PATH``, ``BRACE_CLUTCHING_PATH`` or the bundled defaults.

The exit code is 0 when no verdict fails, 2 when one does and 1 on errors.

Functions
---------

.. autosummary::

    main
    build_parser
    descriptor_from_args
    cmd_analyze
    cmd_verify
    cmd_tables

Contents
--------

"""
import argparse
import contextlib
import json
import os
import sys
import warnings

from .clutching import (CLUTCHING_PATH_VARIABLE, CLUTCHING_SCHEMA,
                        ClutchingClass, ingest_clutching)
from .decisions import (DEFAULT_DEGREE_CAP, FibrationDescriptor,
                        analyze_descriptor, surface_bundle_report)
from .homotopy_tables import (TABLE_PATH_VARIABLE, SpaceName, default_table,
                              ingest_table, resolve_table_path)
from .properties import DEFAULT_SEED, DEFAULT_TRIALS, run_suite
from .report import EXIT_ERROR, Report
from .version import __version__

# flag spelling -> descriptor kind
ANALYZE_KINDS = {
    'sphere-over-sphere': 'sphere_over_sphere',
    'wedge-over-wedge': 'wedge_over_wedge',
    'free-loop': 'free_loop',
    'clutched': 'clutched',
    'surface-bundle': 'surface_bundle',
    'product-pullback': 'product_pullback',
    'lie-group-base': 'lie_group_base',
    'lie-group-fibration': 'lie_group_fibration',
}


def _integers(text):
    r"""Parses ``1`` or ``1,0,0`` as a list of integers."""
    try:
        return [int(c) for c in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated '
                                         'integers, got %r' % text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help='emit the report as JSON')
    common.add_argument('--table', default=None,
                        help='homotopy table document (htpy-table/1)')
    common.add_argument('--clutching', default=None,
                        help='clutching data document (clutching/1)')

    parser = argparse.ArgumentParser(
        prog='braceproducts',
        description='Brace products, splittings of fibrations with section '
                    'and the J-homomorphism.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    analyze = commands.add_parser('analyze', parents=[common],
                                  help='decide splittings of a fibration')
    analyze.add_argument('descriptor', nargs='?', default=None,
                         help='fibration/1 JSON document')
    analyze.add_argument('--kind', choices=sorted(ANALYZE_KINDS))
    analyze.add_argument('--n', type=int, help='base sphere dimension')
    analyze.add_argument('--m', type=int,
                         help='fibre sphere dimension, or loop count')
    analyze.add_argument('--q', type=int,
                         help='fibre sphere dimension of a clutched bundle')
    analyze.add_argument('--rho', type=_integers,
                         help='clutching class coordinates in '
                              'pi_{n-1}(SO(q+1))')
    analyze.add_argument('--lift', type=_integers,
                         help='lift coordinates in pi_{n-1}(SO(q))')
    analyze.add_argument('--brace', type=_integers,
                         help='brace coordinates in pi_{n+m-1}(S^m)')
    analyze.add_argument('--space', help='sphere of a free loop fibration')
    analyze.add_argument('--g', type=int, help='surface genus')
    analyze.add_argument('--w2', type=int, choices=(0, 1),
                         help='second Stiefel-Whitney class is nonzero')
    analyze.add_argument('--base', type=_integers,
                         help='sphere dimensions of a wedge base')
    analyze.add_argument('--fibre', type=_integers,
                         help='sphere dimensions of a wedge fibre, or the '
                              'fibre dimension of a product pullback')
    analyze.add_argument('--factors', type=_integers,
                         help='sphere dimensions of a product base')
    analyze.add_argument('--group', help='Lie group base, e.g. SU(3)')
    analyze.add_argument('--total', help='Lie group total space')
    analyze.add_argument('--fibre-dim', type=int)
    analyze.add_argument('--base-dim', type=int)
    analyze.add_argument('--degree-cap', type=int,
                         default=DEFAULT_DEGREE_CAP)
    analyze.set_defaults(handler=cmd_analyze)

    verify = commands.add_parser('verify', parents=[common],
                                 help='run a randomized property suite')
    verify.add_argument('suite', help='jacobi, derivation, lie-map, '
                                      'exactness or j-rules')
    verify.add_argument('--trials', type=int, default=DEFAULT_TRIALS)
    verify.add_argument('--degree-cap', type=int, default=None)
    verify.add_argument('--seed', type=int, default=DEFAULT_SEED)
    verify.set_defaults(handler=cmd_verify)

    tables = commands.add_parser('tables', parents=[common],
                                 help='validate or show a data document')
    tables.add_argument('action', choices=('show', 'validate'))
    tables.add_argument('path', nargs='?', default=None)
    tables.add_argument('--space', default=None,
                        help='only show entries of this space')
    tables.set_defaults(handler=cmd_tables)
    return parser


def descriptor_from_args(args):
    r"""Returns the :class:`FibrationDescriptor` named by the analyze
    arguments.

    A ``sphere-over-sphere`` kind given a clutching class ``--rho`` is
    analyzed as a ``clutched`` bundle.
    """
    if args.descriptor:
        with open(args.descriptor, encoding='utf-8') as f:
            return FibrationDescriptor.from_json(json.load(f))
    if args.kind is None:
        raise ValueError('analyze needs a descriptor file or --kind')
    kind = ANALYZE_KINDS[args.kind]
    if kind == 'sphere_over_sphere' and args.rho is not None:
        kind = 'clutched'
    if kind == 'clutched':
        params = {'n': args.n, 'q': args.q if args.q is not None else args.n,
                  'rho': args.rho, 'lift': args.lift}
    elif kind == 'sphere_over_sphere':
        params = {'n': args.n, 'm': args.m if args.m is not None else args.q,
                  'brace': args.brace}
    elif kind == 'free_loop':
        params = {'m': args.m, 'space': args.space}
    elif kind == 'surface_bundle':
        params = {'g': args.g, 'n': args.n,
                  'w2': None if args.w2 is None else bool(args.w2)}
    elif kind == 'wedge_over_wedge':
        params = {'base': args.base, 'fibre': args.fibre}
    elif kind == 'product_pullback':
        fibre = args.fibre[0] if args.fibre else None
        params = {'factors': args.factors, 'fibre': fibre}
    elif kind == 'lie_group_base':
        params = {'group': args.group, 'n': args.n}
    else:
        params = {'total': args.total, 'fibre_dim': args.fibre_dim,
                  'base_dim': args.base_dim}
    params = dict((k, v) for k, v in params.items() if v is not None)
    return FibrationDescriptor(kind, **params)


def cmd_analyze(args):
    desc = descriptor_from_args(args)
    verdicts = analyze_descriptor(desc, args.degree_cap)
    results = {}
    if desc.kind == 'surface_bundle':
        results['w_class'] = surface_bundle_report(
            desc['g'], desc['n'], desc['w2']).w_class
    if desc.kind == 'clutched':
        results['clutching'] = ClutchingClass.from_coordinates(
            int(desc['n']), int(desc['q']), desc['rho'],
            desc.get('lift')).to_json()
    return Report('analyze', desc.to_json(), verdicts, results=results)


def cmd_verify(args):
    result = run_suite(args.suite, args.trials, args.degree_cap, args.seed)
    inputs = {'suite': args.suite, 'trials': args.trials,
              'degree_cap': result.degree_cap, 'seed': args.seed}
    return Report('verify', inputs, results={'suite': result.to_json()},
                  failed=not result.ok)


def _show_line(text, citation, provenance):
    return '%s  [%s] %s' % (text, provenance, citation)


def cmd_tables(args):
    path = resolve_table_path(args.path or args.table)
    inputs = {'action': args.action, 'path': path, 'space': args.space}
    with open(path, encoding='utf-8') as f:
        text = f.read()
    try:
        schema = json.loads(text).get('schema')
    except (ValueError, AttributeError):
        schema = None
    results = {}
    if schema == CLUTCHING_SCHEMA:
        catalog = ingest_clutching(text, default_table(), source=path)
        results['validation'] = {'source': path, 'maps': len(catalog),
                                 'sequences': catalog.sequence_dimensions()}
        if args.action == 'show':
            results['maps'] = [_show_line(repr(m), m.citation, m.provenance)
                               for m in catalog.maps()]
        return Report('tables', inputs, results=results)
    with warnings.catch_warnings():
        # normalizations are listed in the validation report
        warnings.simplefilter('ignore')
        table, validation = ingest_table(text, source=path)
    results['validation'] = validation
    if args.action == 'show':
        entries = table.entries_for(SpaceName.parse(args.space)) \
            if args.space else list(table)
        results['entries'] = [_show_line(repr(e), e.citation, e.provenance)
                              for e in entries]
    return Report('tables', inputs, results=results)


@contextlib.contextmanager
def _configured(args):
    r"""Points the table and clutching lookups at the documents given on
    the command line, restoring the environment afterwards."""
    saved = {}
    for variable, value in ((TABLE_PATH_VARIABLE, args.table),
                            (CLUTCHING_PATH_VARIABLE, args.clutching)):
        if value:
            saved[variable] = os.environ.get(variable)
            os.environ[variable] = value
    try:
        yield
    finally:
        for variable, value in saved.items():
            if value is None:
                os.environ.pop(variable, None)
            else:
                os.environ[variable] = value


def main(argv=None):
    r"""Runs the command line and returns its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if not e.code else EXIT_ERROR
    with _configured(args):
        try:
            table = default_table()
            table.clear_consulted()
            report = args.handler(args)
            report.tables_used = sorted(set(report.tables_used) |
                                        set(table.consulted()))
        except (ValueError, OSError) as e:
            print('error: %s' % e, file=sys.stderr)
            return EXIT_ERROR
    sys.stdout.write(report.dumps() if args.json else report.render())
    return report.exit_code
