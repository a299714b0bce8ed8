import getopt
import sys
import unittest
import warnings

# defines __version__
exec(open('braceproducts/version.py').read())

PACKAGE = 'braceproducts'

USAGE = """\
braceproducts %s tests

usage: python runtests.py [-h] [-v] [-p N] [pattern ...]

  pattern   run only the test files whose name contains pattern
  -h        show this message and exit
  -v        verbose test output
  -p N      spread the suite over N pytest-xdist workers
"""


def usage():
    print(USAGE % __version__)


def file_pattern(name):
    r"""Turns a bare name such as ``clutching`` into ``test*clutching*.py``."""
    if 'test' not in name:
        name = 'test*%s*' % name
    if not name.endswith('.py'):
        name += '.py'
    return name


def run_unittest(names, verbosity):
    failed = False
    for pattern in [file_pattern(n) for n in names] or ['test*.py']:
        suite = unittest.TestLoader().discover(PACKAGE, pattern=pattern,
                                               top_level_dir='.')
        result = unittest.TextTestRunner(verbosity=verbosity).run(suite)
        failed = failed or not result.wasSuccessful()
    return int(failed)


def run_xdist(names, verbosity, workers):
    try:
        import pytest
    except ImportError:
        raise ImportError('-p needs pytest and pytest-xdist:\n\n'
                          '\t$ pip install braceproducts[parallel]\n')
    argv = [PACKAGE, '-n', str(workers), '--durations=5']
    if names:
        argv += ['-k', ' or '.join(names)]
    if verbosity > 1:
        argv.append('-v')
    return pytest.main(argv)


def main(argv):
    try:
        opts, names = getopt.getopt(argv, 'hvp:')
    except getopt.GetoptError:
        usage()
        return 2

    options = dict(opts)
    if '-h' in options:
        usage()
        return 0
    verbosity = 2 if '-v' in options else 1
    workers = int(options.get('-p', 1))
    if workers > 1:
        return run_xdist(names, verbosity, workers)
    return run_unittest(names, verbosity)


if __name__ == '__main__':
    # silence the non-canonical torsion warnings
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        sys.exit(main(sys.argv[1:]))
