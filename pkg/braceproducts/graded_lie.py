r"""
Graded Lie Algebras :mod:`graded_lie`
=====================================

Exact computations in free graded Lie algebras over the rationals.

Elements are stored in the *Samelson grading*, where the bracket has degree
zero and satisfies honest graded antisymmetry and Jacobi. The homotopy
groups :math:`\pi_{k+1}(X) \cong \pi_k(\Omega X)` carry the *Whitehead
grading*, shifted up by one, with the bracket

.. math::

    [\mathrm{ad}\, x, \mathrm{ad}\, y] = (-1)^{|x|} \mathrm{ad}\langle x,y \rangle

where :math:`|x|` is the Samelson degree. An element can be reported in
either view with :func:`adjoint_shift`.

Every element is kept in normal form with respect to a graded Lyndon basis.
A basis monomial is either the standard bracketing of a Lyndon word `w` or,
for a Lyndon word `u` of odd degree, the square :math:`\langle u,u \rangle`
(indexed by the word `uu`). Normal forms are computed by embedding into the
free associative algebra, where the lexicographically smallest word of a
basis monomial's expansion is its index word, and peeling off leading words.

Classes
-------

.. autosummary::

    Generator
    GradingView
    FreeGradedLieAlgebra
    LieElement
    LieAlgebraMorphism
    GradedBasis

Functions
---------

.. autosummary::

    bracket
    jacobi_defect
    adjoint_shift
    graded_basis
    tensor_expansion

References
----------

.. [Reutenauer] C. Reutenauer, "Free Lie Algebras", Oxford University Press,
   1993.

.. [Hilton] P. J. Hilton, "On the homotopy groups of the union of spheres",
   J. London Math. Soc. 30 (1955).

Contents
--------

"""
import enum
import functools
import re
from fractions import Fraction

from sympy import Rational

from .utilities import is_lyndon, standard_factorization, weighted_lyndon_words


class MixedDegree(ValueError):
    pass


class UnknownGenerator(ValueError):
    pass


class CapTooSmall(ValueError):
    pass


class Unsupported(ValueError):
    pass


class NotALieElement(ValueError):
    pass


DEFAULT_DEGREE_CAP = 24

_NAME = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


def _coerce(c):
    r"""Returns `c` as an exact sympy rational."""
    if isinstance(c, Fraction):
        return Rational(c.numerator, c.denominator)
    if isinstance(c, float):
        raise TypeError('floating point coefficients are not allowed')
    return Rational(c)


class GradingView(enum.Enum):
    r"""The grading in which a :class:`LieElement` is reported."""
    SAMELSON = 'samelson'
    WHITEHEAD = 'whitehead'

    @property
    def shift(self):
        return 1 if self is GradingView.WHITEHEAD else 0

    @classmethod
    def coerce(cls, view):
        if isinstance(view, cls):
            return view
        try:
            return cls(str(view).lower())
        except ValueError:
            raise ValueError('unknown grading view %r' % (view,))


class Generator(object):
    r"""A generator of a free graded Lie algebra.

    Attributes
    ----------
    name : str
    samelson_degree : int
        The degree `k` of the class in :math:`\pi_k(\Omega X)`.
    whitehead_degree : int
        The degree `k+1` of the adjoint class in :math:`\pi_{k+1}(X)`.
    """
    @property
    def name(self):
        return self._name

    @property
    def samelson_degree(self):
        return self._degree

    @property
    def whitehead_degree(self):
        return self._degree + 1

    def __init__(self, name, samelson_degree):
        if not isinstance(name, str) or not _NAME.match(name):
            raise ValueError('generator name %r is not an identifier' %
                             (name,))
        degree = int(samelson_degree)
        if degree != samelson_degree:
            raise ValueError('generator degrees must be integers')
        if degree == 0:
            raise Unsupported('generator %s has Samelson degree 0: '
                              'fundamental group classes are not '
                              'supported' % name)
        if degree < 0:
            raise ValueError('generator %s has negative degree' % name)
        self._name = name
        self._degree = degree

    def __repr__(self):
        return 'Generator(%r, %d)' % (self._name, self._degree)

    def __eq__(self, other):
        if isinstance(other, Generator):
            return (self._name, self._degree) == (other._name, other._degree)
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._name, self._degree))


#
# pure helpers on words and bracket trees. a tree is either an int (the
# generator index) or a pair (left, right). all helpers are keyed on the
# tuple of generator degrees so that they may be memoized safely.
#
def _word_degree(degrees, word):
    return sum(degrees[i] for i in word)


def _tree_degree(degrees, tree):
    if isinstance(tree, int):
        return degrees[tree]
    return _tree_degree(degrees, tree[0]) + _tree_degree(degrees, tree[1])


def _square_root(degrees, word):
    r"""Returns `u` if `word = uu` for an odd-degree Lyndon word `u`."""
    n = len(word)
    if n % 2:
        return None
    u = word[:n//2]
    if word[n//2:] == u and is_lyndon(u) and _word_degree(degrees, u) % 2:
        return u
    return None


def _is_basis_word(degrees, word):
    return is_lyndon(word) or _square_root(degrees, word) is not None


@functools.lru_cache(maxsize=None)
def _basis_tree(degrees, word):
    if len(word) == 1:
        return word[0]
    if is_lyndon(word):
        u, v = standard_factorization(word)
        return (_basis_tree(degrees, u), _basis_tree(degrees, v))
    u = _square_root(degrees, word)
    if u is None:
        raise NotALieElement('%s does not index a basis monomial' % (word,))
    t = _basis_tree(degrees, u)
    return (t, t)


@functools.lru_cache(maxsize=None)
def _whitehead_sign(degrees, tree):
    r"""Sign relating a Samelson monomial to its Whitehead counterpart: the
    product over bracket nodes of (-1)^(Samelson degree of the left child)."""
    if isinstance(tree, int):
        return 1
    left, right = tree
    sign = _whitehead_sign(degrees, left) * _whitehead_sign(degrees, right)
    if _tree_degree(degrees, left) % 2:
        sign = -sign
    return sign


def _tensor_product(p, q):
    result = {}
    for u, a in p.items():
        for v, b in q.items():
            w = u + v
            result[w] = result.get(w, 0) + a*b
    return result


def _add_into(target, p, scale=1):
    for w, c in p.items():
        v = target.get(w, 0) + scale*c
        if v == 0:
            target.pop(w, None)
        else:
            target[w] = v
    return target


def _commutator(p, dp, q, dq):
    r"""Graded commutator pq - (-1)^(dp dq) qp in the tensor algebra."""
    result = _tensor_product(p, q)
    sign = 1 if (dp*dq) % 2 else -1
    return _add_into(result, _tensor_product(q, p), sign)


@functools.lru_cache(maxsize=None)
def _tree_expansion(degrees, tree):
    if isinstance(tree, int):
        return (((tree,), Rational(1)),)
    left, right = tree
    p = dict(_tree_expansion(degrees, left))
    q = dict(_tree_expansion(degrees, right))
    r = _commutator(p, _tree_degree(degrees, left),
                    q, _tree_degree(degrees, right))
    return tuple(sorted(r.items()))


def _basis_expansion(degrees, word):
    return _tree_expansion(degrees, _basis_tree(degrees, word))


def _reduce(degrees, poly):
    r"""Rewrites a Lie polynomial of the tensor algebra in the Lyndon basis.

    The smallest word of the remaining polynomial is always the leading word
    of a basis monomial; its coefficient is peeled off until nothing is left.
    """
    poly = dict((w, c) for w, c in poly.items() if c != 0)
    result = {}
    while poly:
        w = min(poly)
        c = poly[w]
        if is_lyndon(w):
            lead = 1
        elif _square_root(degrees, w) is not None:
            lead = 2
        else:
            raise NotALieElement('leading word %s of a tensor polynomial '
                                 'is not a basis word' % (w,))
        coefficient = c / lead
        result[w] = coefficient
        for u, a in _basis_expansion(degrees, w):
            v = poly.get(u, 0) - coefficient*a
            if v == 0:
                poly.pop(u, None)
            else:
                poly[u] = v
    return result


class FreeGradedLieAlgebra(object):
    r"""The free graded Lie algebra on a list of generators.

    Generators are ordered by declaration; this order defines the alphabet
    of the Lyndon basis.

    Parameters
    ----------
    generators : list
        A list of :class:`Generator` objects or `(name, samelson_degree)`
        pairs.

    Examples
    --------
    >>> L = FreeGradedLieAlgebra([('a', 1), ('b', 2)])
    >>> a, b = L.gens()
    >>> bracket(a, b)
    <a,b>
    """
    @property
    def generators(self):
        return self._generators

    @property
    def names(self):
        return tuple(g.name for g in self._generators)

    @property
    def degrees(self):
        return self._degrees

    @property
    def ngens(self):
        return len(self._generators)

    def __init__(self, generators):
        gens = []
        for g in generators:
            if not isinstance(g, Generator):
                g = Generator(*g)
            gens.append(g)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError('generator names must be unique: %s' % names)
        self._generators = tuple(gens)
        self._degrees = tuple(g.samelson_degree for g in gens)
        self._index = dict((g.name, i) for i, g in enumerate(gens))

    def __repr__(self):
        gens = ', '.join('%s:%d' % (g.name, g.samelson_degree)
                         for g in self._generators)
        return 'FreeGradedLieAlgebra(%s)' % gens

    def __eq__(self, other):
        if isinstance(other, FreeGradedLieAlgebra):
            return self._generators == other._generators
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._generators)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGenerator('unknown generator %r' % (name,))

    def gen(self, name, view=GradingView.SAMELSON):
        r"""Returns the generator `name` (or index) as a :class:`LieElement`."""
        i = name if isinstance(name, int) else self.index(name)
        if not 0 <= i < self.ngens:
            raise UnknownGenerator('no generator with index %d' % i)
        return LieElement(self, {(i,): 1}, view)

    def gens(self, view=GradingView.SAMELSON):
        return [self.gen(i, view) for i in range(self.ngens)]

    def zero(self, view=GradingView.SAMELSON):
        return LieElement(self, {}, view)

    def word_degree(self, word):
        return _word_degree(self._degrees, tuple(word))

    def is_basis_word(self, word):
        word = tuple(word)
        if not word or any(not 0 <= i < self.ngens for i in word):
            return False
        return _is_basis_word(self._degrees, word)

    def basis_tree(self, word):
        return _basis_tree(self._degrees, tuple(word))

    def tree_degree(self, tree):
        return _tree_degree(self._degrees, tree)

    def whitehead_sign(self, word):
        return _whitehead_sign(self._degrees, self.basis_tree(word))

    def basis_words(self, degree_cap):
        r"""Returns the basis words of Samelson degree at most `degree_cap`
        sorted by degree and then lexicographically."""
        lyndon = list(weighted_lyndon_words(self._degrees, degree_cap))
        words = list(lyndon)
        for u in lyndon:
            d = _word_degree(self._degrees, u)
            if d % 2 and 2*d <= degree_cap:
                words.append(u + u)
        words.sort(key=lambda w: (_word_degree(self._degrees, w), w))
        return words

    def monomial_string(self, word, view=GradingView.SAMELSON):
        view = GradingView.coerce(view)
        left, right = ('[', ']') if view is GradingView.WHITEHEAD \
            else ('<', '>')

        def render(tree):
            if isinstance(tree, int):
                return self._generators[tree].name
            return '%s%s,%s%s' % (left, render(tree[0]), render(tree[1]),
                                  right)
        return render(self.basis_tree(word))

    def normal_form(self, poly):
        r"""Returns the Samelson-view element of a Lie polynomial given as a
        dict from words to coefficients in the free associative algebra."""
        poly = dict((tuple(w), _coerce(c)) for w, c in poly.items())
        return LieElement(self, _reduce(self._degrees, poly))

    def parse(self, text, view=GradingView.SAMELSON):
        r"""Parses a linear combination of bracket monomials.

        Whitehead brackets are written ``[x,y]`` and Samelson brackets
        ``<x,y>``; the delimiters must agree with `view`.

        Examples
        --------
        >>> L = FreeGradedLieAlgebra([('a', 1), ('b', 1)])
        >>> L.parse('2*[a,[a,b]] - 1/2*[b,b]', 'whitehead')
        2*[a,[a,b]] - 1/2*[b,b]
        """
        return _Parser(self, text, GradingView.coerce(view)).parse()


class LieElement(object):
    r"""A homogeneous element of a free graded Lie algebra in normal form.

    Attributes
    ----------
    algebra : FreeGradedLieAlgebra
    view : GradingView
    terms : dict
        Basis words mapped to nonzero rational coefficients.
    samelson_degree : int or None
        `None` for the zero element, which has every degree.
    degree : int or None
        The degree in the element's own view.
    """
    @property
    def algebra(self):
        return self._algebra

    @property
    def view(self):
        return self._view

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def samelson_degree(self):
        return self._degree

    @property
    def degree(self):
        if self._degree is None:
            return None
        return self._degree + self._view.shift

    def __init__(self, algebra, terms, view=GradingView.SAMELSON):
        self._algebra = algebra
        self._view = GradingView.coerce(view)
        d = {}
        for word, c in terms.items():
            word = tuple(word)
            if not algebra.is_basis_word(word):
                raise ValueError('%s is not a basis word of %s' %
                                 (word, algebra))
            c = _coerce(c)
            if c != 0:
                d[word] = c
        degrees = set(algebra.word_degree(w) for w in d)
        if len(degrees) > 1:
            raise MixedDegree('terms of Samelson degrees %s in one element' %
                              sorted(degrees))
        self._terms = d
        self._degree = degrees.pop() if degrees else None

    def is_zero(self):
        return not self._terms

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def _check_compatible(self, other):
        if not isinstance(other, LieElement):
            raise TypeError('expected a LieElement, got %r' % (other,))
        if self._algebra != other._algebra:
            raise UnknownGenerator('elements belong to different algebras: '
                                   '%s and %s' % (self._algebra,
                                                  other._algebra))
        if self._view is not other._view:
            raise ValueError('elements are reported in different grading '
                             'views')

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check_compatible(other)
        d = dict(self._terms)
        _add_into(d, other._terms)
        return LieElement(self._algebra, d, self._view)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return LieElement(self._algebra,
                          dict((w, -c) for w, c in self._terms.items()),
                          self._view)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = _coerce(c)
        return LieElement(self._algebra,
                          dict((w, c*a) for w, a in self._terms.items()),
                          self._view)

    def __rmul__(self, c):
        return self.__mul__(c)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if isinstance(other, LieElement):
            return (self._algebra == other._algebra and
                    self._view is other._view and
                    self._terms == other._terms)
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._algebra, self._view,
                     tuple(sorted(self._terms.items()))))

    def __repr__(self):
        if self.is_zero():
            return '0'
        s = ''
        for word, c in self:
            monomial = self._algebra.monomial_string(word, self._view)
            sign = ' - ' if c < 0 else ' + '
            c = abs(c)
            s += sign + (monomial if c == 1 else '%s*%s' % (c, monomial))
        s = s[3:] if s.startswith(' + ') else '-' + s[3:]
        return s

    def to_json(self):
        r"""Returns the normal-form term list ``[[monomial, coefficient]]``."""
        return [[self._algebra.monomial_string(w, self._view), str(c)]
                for w, c in self]


class GradedBasis(object):
    r"""The graded Lyndon basis of a free graded Lie algebra up to a cap.

    Attributes
    ----------
    algebra : FreeGradedLieAlgebra
    degree_cap : int
    monomials : list
        Pairs `(samelson_degree, LieElement)` ordered by degree, then word.
    dimensions : dict
        Samelson degree mapped to the dimension of that graded piece, for
        every degree from 1 to `degree_cap`.
    """
    def __init__(self, algebra, degree_cap):
        self.algebra = algebra
        self.degree_cap = degree_cap
        self.monomials = [(algebra.word_degree(w),
                           LieElement(algebra, {w: 1}))
                          for w in algebra.basis_words(degree_cap)]
        self.dimensions = dict((d, 0) for d in range(1, degree_cap+1))
        for d, _ in self.monomials:
            self.dimensions[d] += 1

    def __repr__(self):
        return 'GradedBasis(%s, degree_cap=%d)' % (self.algebra,
                                                   self.degree_cap)

    def in_degree(self, degree):
        return [x for d, x in self.monomials if d == degree]


def tensor_expansion(x):
    r"""Returns the image of `x` in the free associative algebra.

    The element is first moved to the Samelson view. The result is a dict
    mapping words to rational coefficients.
    """
    if x.view is GradingView.WHITEHEAD:
        x = adjoint_shift(x, GradingView.WHITEHEAD, GradingView.SAMELSON)
    degrees = x.algebra.degrees
    result = {}
    for w, c in x:
        _add_into(result, dict(_basis_expansion(degrees, w)), c)
    return result


def _samelson_bracket(x, y):
    if x.is_zero() or y.is_zero():
        return x.algebra.zero()
    p = tensor_expansion(x)
    q = tensor_expansion(y)
    poly = _commutator(p, x.samelson_degree, q, y.samelson_degree)
    return LieElement(x.algebra, _reduce(x.algebra.degrees, poly))


def bracket(x, y):
    r"""Returns the bracket of `x` and `y` in their common grading view.

    In the Samelson view this is the graded Lie bracket; in the Whitehead
    view it is the Whitehead product, of degree :math:`|x| + |y| - 1`.

    Parameters
    ----------
    x, y : LieElement

    Returns
    -------
    LieElement
    """
    x._check_compatible(y)
    if x.view is GradingView.SAMELSON:
        return _samelson_bracket(x, y)
    xs = adjoint_shift(x, GradingView.WHITEHEAD, GradingView.SAMELSON)
    ys = adjoint_shift(y, GradingView.WHITEHEAD, GradingView.SAMELSON)
    z = adjoint_shift(_samelson_bracket(xs, ys), GradingView.SAMELSON,
                      GradingView.WHITEHEAD)
    if xs.samelson_degree is not None and xs.samelson_degree % 2:
        z = -z
    return z


def jacobi_defect(x, y, z):
    r"""Returns the graded Jacobi combination of `x`, `y`, `z`.

    The combination

    .. math::

        (-1)^{|x||z|}[[x,y],z] + (-1)^{|y||x|}[[y,z],x]
        + (-1)^{|z||y|}[[z,x],y]

    is evaluated in the Whitehead view with Whitehead degrees. It vanishes
    identically in a free graded Lie algebra.
    """
    x._check_compatible(y)
    y._check_compatible(z)
    W = GradingView.WHITEHEAD
    x, y, z = [adjoint_shift(e, e.view, W) for e in (x, y, z)]
    if x.is_zero() or y.is_zero() or z.is_zero():
        return x.algebra.zero(W)
    p, q, r = x.degree, y.degree, z.degree

    def sign(e):
        return -1 if e % 2 else 1
    return (sign(p*r)*bracket(bracket(x, y), z) +
            sign(q*p)*bracket(bracket(y, z), x) +
            sign(r*q)*bracket(bracket(z, x), y))


def adjoint_shift(x, from_view, to_view):
    r"""Reports `x` in another grading view.

    Each basis monomial picks up, once per bracket node, the sign
    :math:`(-1)^k` where `k` is the Samelson degree of the node's left
    child. Generators are unchanged. The map is an involution.

    Parameters
    ----------
    x : LieElement
    from_view, to_view : GradingView or str
    """
    from_view = GradingView.coerce(from_view)
    to_view = GradingView.coerce(to_view)
    if x.view is not from_view:
        raise ValueError('element is in the %s view, not %s' %
                         (x.view.value, from_view.value))
    if from_view is to_view:
        return x
    algebra = x.algebra
    terms = dict((w, algebra.whitehead_sign(w)*c) for w, c in x)
    return LieElement(algebra, terms, to_view)


def graded_basis(generators, degree_cap=DEFAULT_DEGREE_CAP):
    r"""Returns the graded Lyndon basis up to Samelson degree `degree_cap`.

    Parameters
    ----------
    generators : FreeGradedLieAlgebra or list
        An algebra or a list of generators accepted by
        :class:`FreeGradedLieAlgebra`.
    degree_cap : int

    Returns
    -------
    GradedBasis
    """
    if isinstance(generators, FreeGradedLieAlgebra):
        algebra = generators
    else:
        algebra = FreeGradedLieAlgebra(generators)
    if algebra.ngens and degree_cap < max(algebra.degrees):
        raise CapTooSmall('degree cap %d is below the generator degree %d' %
                          (degree_cap, max(algebra.degrees)))
    return GradedBasis(algebra, degree_cap)


class LieAlgebraMorphism(object):
    r"""A morphism of free graded Lie algebras given on generators.

    Images are given in the Whitehead view and must preserve degree. The
    morphism extends to brackets by :math:`f[x,y] = [fx, fy]`.

    Parameters
    ----------
    source, target : FreeGradedLieAlgebra
    images : dict
        Generator names of `source` mapped to Whitehead-view elements of
        `target` (or to `0`).
    """
    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        W = GradingView.WHITEHEAD
        self._images = []
        for g in source.generators:
            image = images.get(g.name, 0)
            if isinstance(image, int) and image == 0:
                image = target.zero(W)
            if image.algebra != target:
                raise UnknownGenerator('image of %s is not in the target' %
                                       g.name)
            image = adjoint_shift(image, image.view, W)
            if not image.is_zero() and image.degree != g.whitehead_degree:
                raise ValueError('image of %s has degree %d, expected %d' %
                                 (g.name, image.degree, g.whitehead_degree))
            self._images.append(image)

    def __repr__(self):
        return 'LieAlgebraMorphism(%s -> %s)' % (self.source, self.target)

    def _image_of_tree(self, tree):
        if isinstance(tree, int):
            return self._images[tree]
        return bracket(self._image_of_tree(tree[0]),
                       self._image_of_tree(tree[1]))

    def __call__(self, x):
        if x.algebra != self.source:
            raise UnknownGenerator('element is not in the source algebra')
        view = x.view
        W = GradingView.WHITEHEAD
        result = self.target.zero(W)
        for w, c in adjoint_shift(x, view, W):
            image = self._image_of_tree(self.source.basis_tree(w))
            if not image.is_zero():
                result = result + c*image
        return adjoint_shift(result, W, view)

    def compose(self, other):
        r"""Returns the morphism `self` after `other`."""
        if other.target != self.source:
            raise ValueError('morphisms are not composable')
        W = GradingView.WHITEHEAD
        images = dict((g.name, self(other(other.source.gen(g.name, W))))
                      for g in other.source.generators)
        return LieAlgebraMorphism(other.source, self.target, images)

    @classmethod
    def identity(cls, algebra):
        W = GradingView.WHITEHEAD
        return cls(algebra, algebra,
                   dict((g.name, algebra.gen(g.name, W))
                        for g in algebra.generators))


_TOKEN = re.compile(r'\s*(\d+/\d+|\d+|[A-Za-z_][A-Za-z0-9_]*|[\[\]<>,+\-*])')


class _Parser(object):

    def __init__(self, algebra, text, view):
        self.algebra = algebra
        self.view = view
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError('cannot parse %r at position %d' %
                                 (self.text, pos))
            self.tokens.append(m.group(1))
            pos = m.end()
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError('expected %r in %r' % (expected, self.text))
        self.pos += 1
        return tok

    def parse(self):
        if self.peek() is None:
            raise ValueError('empty expression')
        if self.peek() == '0' and len(self.tokens) == 1:
            return self.algebra.zero(self.view)
        result = None
        sign = 1
        if self.peek() in ('+', '-'):
            sign = -1 if self.take() == '-' else 1
        while True:
            term = sign*self.term()
            result = term if result is None else result + term
            tok = self.peek()
            if tok is None:
                return result
            if tok not in ('+', '-'):
                raise ValueError('unexpected %r in %r' % (tok, self.text))
            sign = -1 if self.take() == '-' else 1

    def term(self):
        tok = self.peek()
        if tok is not None and tok[0].isdigit():
            c = Rational(self.take())
            self.take('*')
            return c*self.monomial()
        return self.monomial()

    def monomial(self):
        tok = self.take()
        opening = '[' if self.view is GradingView.WHITEHEAD else '<'
        closing = ']' if self.view is GradingView.WHITEHEAD else '>'
        if tok == opening:
            x = self.monomial()
            self.take(',')
            y = self.monomial()
            self.take(closing)
            return bracket(x, y)
        if tok in '[<':
            raise ValueError('bracket %r does not match the %s view' %
                             (tok, self.view.value))
        return self.algebra.gen(tok, self.view)
