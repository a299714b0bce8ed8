r"""
Property Suites :mod:`properties`
=================================

Randomized checks of the algebraic identities everything else rests on.
Each suite draws its inputs from a seeded ``numpy.random.RandomState`` and
compares against an independent oracle:

``jacobi``
    graded antisymmetry and Jacobi of the Whitehead bracket, and agreement
    of the Samelson bracket with the commutator in the tensor algebra
``derivation``
    the derivation identity on random valid pairings, bilinearity of the
    brace, and detection of sign-flipped pairings
``lie-map``
    the Lie-map identity on random valid pairings and detection of
    sign-flipped pairings
``exactness``
    the audit of every shipped exact sequence and detection of every single
    entry mutation
``j-rules``
    confluence of the J-term rewriting under random rewrite orders

Classes
-------

.. autosummary::

    SuiteResult

Functions
---------

.. autosummary::

    run_suite
    random_element

Contents
--------

"""
import numpy

from .clutching import AuditFailure, default_catalog, exactness_audit
from .fibration import (SplitFibration, derivation_identity_check,
                        lie_map_identity_check)
from .graded_lie import (FreeGradedLieAlgebra, GradingView, LieElement,
                         adjoint_shift, bracket, jacobi_defect,
                         tensor_expansion)
from .j_homomorphism import (Rho, Eps, ConstMap, Compose, RhoSum, J, Push,
                             JSum, j_rules_apply)

SUITES = ('jacobi', 'derivation', 'lie-map', 'exactness', 'j-rules')
DEFAULT_TRIALS = 200
DEFAULT_SEED = 0
DEFAULT_DEGREE_CAPS = {'jacobi': 12, 'derivation': 9, 'lie-map': 9}

W = GradingView.WHITEHEAD
S = GradingView.SAMELSON


class UnknownSuite(ValueError):
    pass


class SuiteResult(object):
    r"""Counts of one suite run.

    Attributes
    ----------
    passed, failed : int
    witness : dict or None
        The first failure found.
    details : dict
        Suite-specific counters, e.g. detected mutations.
    """
    def __init__(self, name, trials, degree_cap, seed):
        self.name = name
        self.trials = trials
        self.degree_cap = degree_cap
        self.seed = seed
        self.passed = 0
        self.failed = 0
        self.witness = None
        self.details = {}

    def __repr__(self):
        return '%s: %d passed, %d failed' % (self.name, self.passed,
                                             self.failed)

    @property
    def ok(self):
        return self.failed == 0

    def record(self, ok, witness=None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.witness is None:
                self.witness = witness

    def count(self, key, n=1):
        self.details[key] = self.details.get(key, 0) + n

    def to_json(self):
        return {'suite': self.name, 'trials': self.trials,
                'degree_cap': self.degree_cap, 'seed': self.seed,
                'passed': self.passed, 'failed': self.failed,
                'witness': self.witness,
                'details': dict(sorted(self.details.items()))}


def _sign(e):
    return -1 if e % 2 else 1


def random_algebra(rng, prefix='x', max_gens=3, max_degree=3):
    r"""Returns a free graded Lie algebra with 1 to `max_gens` generators
    of random Samelson degrees in `[1, max_degree]`."""
    ngens = rng.randint(1, max_gens + 1)
    return FreeGradedLieAlgebra([('%s%d' % (prefix, i),
                                  int(rng.randint(1, max_degree + 1)))
                                 for i in range(ngens)])


def random_element(rng, algebra, degree, coefficient_bound=3, max_terms=2):
    r"""Returns a random Whitehead-view element of Whitehead degree
    `degree` supported on at most `max_terms` basis monomials, zero when
    the graded piece is trivial."""
    words = [w for w in algebra.basis_words(degree - 1)
             if algebra.word_degree(w) == degree - 1]
    if not words:
        return algebra.zero(W)
    nterms = min(len(words), rng.randint(1, max_terms + 1))
    chosen = rng.choice(len(words), nterms, replace=False)
    terms = {}
    for i in chosen:
        c = int(rng.randint(1, coefficient_bound + 1))
        terms[words[i]] = c if rng.randint(2) else -c
    return LieElement(algebra, terms, W)


def _random_degree(rng, algebra, low, high):
    r"""Returns a Whitehead degree in `[low, high]` with a nontrivial
    graded piece, or `None`."""
    if high < low:
        return None
    words = algebra.basis_words(high - 1)
    degrees = sorted(set(algebra.word_degree(w) + 1 for w in words
                         if algebra.word_degree(w) + 1 >= low))
    if not degrees:
        return None
    return degrees[rng.randint(len(degrees))]


def _nonzero_element(rng, algebra, low, high):
    for _ in range(10):
        d = _random_degree(rng, algebra, low, high)
        if d is None:
            return None
        x = random_element(rng, algebra, d)
        if not x.is_zero():
            return x
    return None


def _tensor_commutator(p, a, q, b):
    r"""The graded commutator in the tensor algebra, computed directly."""
    result = {}
    for u, c in p.items():
        for v, d in q.items():
            result[u + v] = result.get(u + v, 0) + c*d
            result[v + u] = result.get(v + u, 0) - _sign(a*b)*c*d
    return dict((w, c) for w, c in result.items() if c != 0)


def _clean(poly):
    return dict((w, c) for w, c in poly.items() if c != 0)


def _jacobi_suite(result, rng, trials, cap):
    for _ in range(trials):
        algebra = random_algebra(rng)
        x = _nonzero_element(rng, algebra, 2, cap - 2)
        if x is None:
            continue
        y = _nonzero_element(rng, algebra, 2, cap - x.degree)
        if y is None:
            continue
        z = _nonzero_element(rng, algebra, 2, cap + 2 - x.degree - y.degree)
        xy = bracket(x, y)
        p, q = x.degree, y.degree
        ok = xy == _sign(p*q)*bracket(y, x)
        if not ok:
            result.record(False, {'identity': 'antisymmetry',
                                  'x': repr(x), 'y': repr(y)})
            continue
        xs, ys = adjoint_shift(x, W, S), adjoint_shift(y, W, S)
        oracle = _tensor_commutator(tensor_expansion(xs), xs.samelson_degree,
                                    tensor_expansion(ys), ys.samelson_degree)
        if _clean(tensor_expansion(bracket(xs, ys))) != oracle:
            result.record(False, {'identity': 'tensor oracle',
                                  'x': repr(x), 'y': repr(y)})
            continue
        if z is not None:
            defect = jacobi_defect(x, y, z)
            if not defect.is_zero():
                result.record(False, {'identity': 'jacobi', 'x': repr(x),
                                      'y': repr(y), 'z': repr(z),
                                      'defect': repr(defect)})
                continue
        result.record(True)


def random_fibration(rng, degree_cap):
    r"""Returns a :class:`SplitFibration` with random generator pairings,
    extended to a valid brace structure."""
    base = random_algebra(rng, 'a', max_gens=2, max_degree=2)
    fibre = random_algebra(rng, 'x', max_gens=2, max_degree=2)
    pairing = {}
    for g in base.generators:
        for h in fibre.generators:
            d = g.whitehead_degree + h.whitehead_degree - 1
            pairing[(g.name, h.name)] = random_element(rng, fibre, d)
    return SplitFibration(base, fibre, pairing, degree_cap=degree_cap)


def _explicit(fib):
    return SplitFibration(fib.base, fib.fibre, fib.pairing_table(),
                          degree_cap=fib.degree_cap, extend=False)


def _basis(algebra, word):
    return LieElement(algebra, {tuple(word): 1}, W)


def _factors(algebra, word):
    left, right = algebra.basis_tree(word)

    def leaves(tree):
        if isinstance(tree, int):
            return (tree,)
        return leaves(tree[0]) + leaves(tree[1])
    return _basis(algebra, leaves(left)), _basis(algebra, leaves(right))


def _mutation(fib, identity):
    r"""Flips the sign of one nonzero entry on a bracket word and returns
    the fibration with the triple exposing it, or `None`."""
    explicit = _explicit(fib)
    for (u, v), value in sorted(explicit.pairing.items()):
        if value.is_zero():
            continue
        if identity == 'derivation' and len(v) > 1:
            gamma, delta = _factors(fib.fibre, v)
            triple = (_basis(fib.base, u), gamma, delta)
        elif identity == 'lie-map' and len(u) > 1:
            alpha, beta = _factors(fib.base, u)
            triple = (alpha, beta, _basis(fib.fibre, v))
        else:
            continue
        return explicit.with_entry(u, v, -value), triple
    return None


def _identity_suite(result, rng, trials, cap, identity):
    check = derivation_identity_check if identity == 'derivation' \
        else lie_map_identity_check
    for trial in range(trials):
        fib = random_fibration(rng, cap)
        if identity == 'derivation':
            first = _nonzero_element(rng, fib.base, 2, cap - 4)
            second = fib.fibre
        else:
            first = _nonzero_element(rng, fib.base, 2, cap - 4)
            second = fib.base
        if first is None:
            continue
        x = _nonzero_element(rng, second, 2, cap - 2 - first.degree)
        if x is None:
            continue
        y = _nonzero_element(rng, fib.fibre, 2,
                             cap - first.degree - x.degree)
        if y is None:
            continue
        verdict = check(fib, first, x, y)
        if not verdict.holds:
            result.record(False, {'identity': identity,
                                  'inputs': [repr(first), repr(x), repr(y)],
                                  'defect': repr(verdict.witness)})
            continue
        if identity == 'derivation':
            y2 = random_element(rng, fib.fibre, y.degree)
            lhs = fib.brace(first, y + y2)
            rhs = fib.brace(first, y) + fib.brace(first, y2)
            if lhs != rhs:
                result.record(False, {'identity': 'bilinearity',
                                      'inputs': [repr(first), repr(y),
                                                 repr(y2)]})
                continue
        result.record(True)
        if trial % 10 == 0:
            mutated = _mutation(fib, identity)
            if mutated is not None:
                result.count('mutations')
                if not check(mutated[0], *mutated[1]).fails:
                    result.record(False, {'identity': identity,
                                          'mutation': 'undetected sign flip'})
                else:
                    result.count('mutations_detected')


def _exactness_suite(result):
    for seq in default_catalog().exact_sequences():
        try:
            exactness_audit(seq)
            result.record(True)
        except AuditFailure as e:
            result.record(False, {'n': seq.n, 'relation': e.relation})
            continue
        for name, row, column in seq.entries():
            result.count('mutations')
            try:
                exactness_audit(seq.mutated(name, row, column))
            except AuditFailure:
                result.count('mutations_detected')
                continue
            result.record(False, {'n': seq.n, 'mutation': [name, row,
                                                           column]})


def _random_rho(rng, depth):
    kind = rng.randint(5 if depth > 0 else 3)
    if kind == 0:
        return Rho('r%d' % rng.randint(3))
    if kind == 1:
        return Eps()
    if kind == 2:
        return ConstMap(['phi', 'psi'][rng.randint(2)])
    if kind == 3:
        return Compose(['phi', 'psi'][rng.randint(2)],
                       _random_rho(rng, depth - 1))
    return RhoSum([(int(rng.randint(-2, 3)), _random_rho(rng, depth - 1))
                   for _ in range(rng.randint(1, 3))])


def _random_j(rng, depth):
    kind = rng.randint(3 if depth > 0 else 1)
    if kind == 0:
        return J(_random_rho(rng, depth))
    if kind == 1:
        return Push(['phi', 'psi'][rng.randint(2)], _random_j(rng, depth - 1))
    return JSum([(int(rng.randint(-2, 3)), _random_j(rng, depth - 1))
                 for _ in range(rng.randint(1, 3))])


def _j_rules_suite(result, rng, trials):
    for _ in range(trials):
        expr = _random_j(rng, 3)
        suspension = bool(rng.randint(2))
        expected = j_rules_apply(expr, suspension)
        orders = [j_rules_apply(expr, suspension, rng) for _ in range(4)]
        if any(nf != expected for nf in orders):
            result.record(False, {'expression': repr(expr),
                                  'suspension': suspension,
                                  'normal_forms': sorted(set(
                                      repr(nf) for nf in orders +
                                      [expected]))})
        else:
            result.record(True)


def run_suite(name, trials=DEFAULT_TRIALS, degree_cap=None,
              seed=DEFAULT_SEED):
    r"""Runs the property suite `name`.

    Parameters
    ----------
    name : str
        One of :data:`SUITES`.
    trials : int
    degree_cap : int, optional
        Whitehead degree cap; defaults per suite (12 for ``jacobi``, 9 for
        ``derivation`` and ``lie-map``).
    seed : int

    Returns
    -------
    SuiteResult

    Raises
    ------
    UnknownSuite
    """
    if name not in SUITES:
        raise UnknownSuite('unknown suite %r, expected one of %s' %
                           (name, ', '.join(SUITES)))
    if degree_cap is None:
        degree_cap = DEFAULT_DEGREE_CAPS.get(name)
    rng = numpy.random.RandomState(seed)
    result = SuiteResult(name, trials, degree_cap, seed)
    if name == 'jacobi':
        _jacobi_suite(result, rng, trials, degree_cap)
    elif name in ('derivation', 'lie-map'):
        _identity_suite(result, rng, trials, degree_cap, name)
    elif name == 'exactness':
        _exactness_suite(result)
    else:
        _j_rules_suite(result, rng, trials)
    return result
