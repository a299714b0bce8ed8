r"""
Fibrations with Sections :mod:`fibration`
=========================================

A fibration :math:`F \xrightarrow{i} E \xrightarrow{p} B` with a section
`s` splits the homotopy long exact sequence,

.. math::

    \pi_*(E) \cong \pi_*(B) \oplus \pi_*(F),

and the Whitehead products across the two summands are recorded by the
brace product :math:`\{\alpha, \beta\}_s`, the unique fibre class with
:math:`i_*\{\alpha,\beta\}_s = [s_*\alpha, i_*\beta]`.

A :class:`SplitFibration` models this data at the level of free graded Lie
algebras: a pairing table on basis pairs is extended to all pairs with the
derivation and Lie-map identities,

.. math::

    \{\beta,[\gamma,\delta]\}_s &= (-1)^{k-1}[\{\beta,\gamma\}_s,\delta]
      + (-1)^{(l-1)(k-1)}[\gamma,\{\beta,\delta\}_s] \\
    \{[\alpha,\beta],\gamma\}_s &= (-1)^{j-1}\left(
      \{\alpha,\{\beta,\gamma\}_s\}_s
      - (-1)^{(j-1)(k-1)}\{\beta,\{\alpha,\gamma\}_s\}_s\right)

where `j`, `k`, `l` are the Whitehead degrees of :math:`\alpha`,
:math:`\beta`, :math:`\gamma`. :class:`TotalLieAlgebra` assembles the
bracket on :math:`\pi_*(E)` and checks graded Jacobi.

Spaces known only through the homotopy table are handled by
:class:`FreeLoopFibration` and :class:`TrivialFibration`, whose brace
products are Whitehead products of sphere classes.

Classes
-------

.. autosummary::

    SplitFibration
    TotalElement
    TotalLieAlgebra
    HomotopyClass
    FreeLoopFibration
    TrivialFibration

Functions
---------

.. autosummary::

    assemble_total_lie
    james_brace
    derivation_identity_check
    lie_map_identity_check
    brace_pullback
    brace_product_fibration
    whitehead_product
    free_loop_brace

References
----------

.. [James] I. M. James, "On the homotopy groups of certain pairs and
   triads", Quart. J. Math. Oxford 5 (1954).

.. [Whitehead] G. W. Whitehead, "Elements of Homotopy Theory", Springer,
   1978.

Contents
--------

"""
from .graded_lie import (GradingView, LieElement, MixedDegree,
                         UnknownGenerator, adjoint_shift, bracket)
from .clutching import p_map
from .homotopy_tables import MissingEntry, SpaceName, default_table
from .verdict import Verdict, Status

W = GradingView.WHITEHEAD

H_SPACE_SPHERES = (1, 3, 7)


class InvalidPairing(ValueError):
    r"""Raised when a pairing table is not a brace structure.

    Attributes
    ----------
    triple : tuple
        The offending elements.
    defect : LieElement or TotalElement
        The nonzero Jacobi (or degree) defect.
    """
    def __init__(self, triple, defect, message=None):
        self.triple = triple
        self.defect = defect
        ValueError.__init__(self, message or
                            'graded Jacobi fails on %s: defect %s' %
                            (triple, defect))


class DegreeOutOfRange(ValueError):
    pass


class BaseMismatch(ValueError):
    pass


def _sign(e):
    return -1 if e % 2 else 1


def _whitehead(x):
    r"""Returns `x` in the Whitehead view."""
    return adjoint_shift(x, x.view, W)


def _basis_element(algebra, word):
    return LieElement(algebra, {tuple(word): 1}, W)


def _leaves(tree):
    if isinstance(tree, int):
        return (tree,)
    return _leaves(tree[0]) + _leaves(tree[1])


def _whitehead_degree(algebra, word):
    return algebra.word_degree(word) + 1


class SplitFibration(object):
    r"""A fibration with section in free graded Lie algebra form.

    Parameters
    ----------
    base, fibre : FreeGradedLieAlgebra
        Models of :math:`\pi_*(\Omega B)` and :math:`\pi_*(\Omega F)`.
    pairing : dict
        Pairs `(alpha, beta)` mapped to Whitehead-view fibre elements of
        degree :math:`|\alpha| + |\beta| - 1`. Keys may be generator names,
        basis words or basis monomials (:class:`LieElement` with a single
        term).
    section_label : str
    degree_cap : int
        Whitehead degree bound for the Jacobi check and the pairing table.
    extend : bool
        If `True` (default), braces on pairs missing from `pairing` follow
        from the derivation and Lie-map identities, with generator pairs
        defaulting to zero. If `False`, missing pairs are zero.

    Examples
    --------
    >>> B = FreeGradedLieAlgebra([('a', 1)])
    >>> F = FreeGradedLieAlgebra([('x', 1), ('y', 2)])
    >>> fib = SplitFibration(B, F, {('a', 'x'): F.gen('y', 'whitehead')})
    >>> fib.brace(B.gen('a', 'whitehead'), F.gen('x', 'whitehead'))
    y
    """
    def __init__(self, base, fibre, pairing=None, section_label='s',
                 degree_cap=12, extend=True):
        self.base = base
        self.fibre = fibre
        self.section_label = section_label
        self.degree_cap = degree_cap
        self.extend = extend
        self._pairing = {}
        for (alpha, beta), value in (pairing or {}).items():
            u = self._word(base, alpha)
            v = self._word(fibre, beta)
            value = self._value(value)
            target = (_whitehead_degree(base, u) +
                      _whitehead_degree(fibre, v) - 1)
            if not value.is_zero() and value.degree != target:
                raise InvalidPairing((alpha, beta), value,
                                     '{%s, %s} needs degree %d, got %d' %
                                     (alpha, beta, target, value.degree))
            self._pairing[(u, v)] = value
        self._cache = {}

    def __repr__(self):
        return 'SplitFibration(%s -> E -> %s, section %s)' % (
            self.fibre, self.base, self.section_label)

    @staticmethod
    def _word(algebra, key):
        if isinstance(key, str):
            return (algebra.index(key),)
        if isinstance(key, LieElement):
            terms = list(key)
            if key.algebra != algebra or len(terms) != 1 or terms[0][1] != 1:
                raise ValueError('%r is not a basis monomial of %s' %
                                 (key, algebra))
            return terms[0][0]
        word = tuple(key)
        if not algebra.is_basis_word(word):
            raise UnknownGenerator('%s is not a basis word of %s' %
                                   (word, algebra))
        return word

    def _value(self, value):
        if isinstance(value, int) and value == 0:
            return self.fibre.zero(W)
        if isinstance(value, str):
            return self.fibre.parse(value, W)
        if value.algebra != self.fibre:
            raise UnknownGenerator('brace values must lie in the fibre')
        return _whitehead(value)

    @property
    def pairing(self):
        return dict(self._pairing)

    def with_entry(self, alpha, beta, value):
        r"""Returns a copy with the pairing value on `(alpha, beta)`
        replaced."""
        pairing = dict(self._pairing)
        pairing[(self._word(self.base, alpha),
                 self._word(self.fibre, beta))] = value
        return SplitFibration(self.base, self.fibre, pairing,
                              self.section_label, self.degree_cap,
                              self.extend)

    def brace_word(self, u, v):
        r"""Returns the brace of the basis monomials indexed by the base
        word `u` and the fibre word `v`, in the Whitehead view."""
        key = (tuple(u), tuple(v))
        if key not in self._cache:
            self._cache[key] = self._compute(*key)
        return self._cache[key]

    def _compute(self, u, v):
        if (u, v) in self._pairing:
            return self._pairing[(u, v)]
        if not self.extend:
            return self.fibre.zero(W)
        if len(v) > 1:
            left, right = self.fibre.basis_tree(v)
            gamma = _basis_element(self.fibre, _leaves(left))
            delta = _basis_element(self.fibre, _leaves(right))
            beta = _basis_element(self.base, u)
            k = beta.degree
            l = gamma.degree
            return (_sign(k - 1)*bracket(self.brace(beta, gamma), delta) +
                    _sign((l - 1)*(k - 1))*bracket(gamma,
                                                   self.brace(beta, delta)))
        if len(u) > 1:
            left, right = self.base.basis_tree(u)
            alpha = _basis_element(self.base, _leaves(left))
            beta = _basis_element(self.base, _leaves(right))
            gamma = _basis_element(self.fibre, v)
            j = alpha.degree
            k = beta.degree
            return _sign(j - 1)*(
                self.brace(alpha, self.brace(beta, gamma)) -
                _sign((j - 1)*(k - 1))*self.brace(beta,
                                                  self.brace(alpha, gamma)))
        return self.fibre.zero(W)

    def brace(self, alpha, beta):
        r"""Returns :math:`\{\alpha, \beta\}_s` for a base element `alpha`
        and a fibre element `beta`, extended bilinearly."""
        if alpha.algebra != self.base or beta.algebra != self.fibre:
            raise UnknownGenerator('brace arguments must be a base and a '
                                   'fibre element')
        result = self.fibre.zero(W)
        for u, a in _whitehead(alpha):
            for v, b in _whitehead(beta):
                value = self.brace_word(u, v)
                if not value.is_zero():
                    result = result + (a*b)*value
        return result

    def pairs(self, degree_cap=None):
        r"""Returns the basis word pairs whose brace has Whitehead degree at
        most `degree_cap`."""
        cap = self.degree_cap if degree_cap is None else degree_cap
        result = []
        for u in self.base.basis_words(cap - 1):
            j = _whitehead_degree(self.base, u)
            for v in self.fibre.basis_words(cap - j):
                result.append((u, v))
        return result

    def pairing_table(self, degree_cap=None):
        r"""Materializes the brace on every basis pair up to
        `degree_cap`."""
        return dict(((u, v), self.brace_word(u, v))
                    for u, v in self.pairs(degree_cap))

    def nonzero_braces(self, degree_cap=None):
        return [(u, v, value) for (u, v), value in
                sorted(self.pairing_table(degree_cap).items())
                if not value.is_zero()]


class TotalElement(object):
    r"""A homogeneous element :math:`s_*\alpha + i_*\beta` of
    :math:`\pi_*(E)`, both parts in the Whitehead view."""
    def __init__(self, base_part, fibre_part):
        base_part = _whitehead(base_part)
        fibre_part = _whitehead(fibre_part)
        degrees = set(x.degree for x in (base_part, fibre_part)
                      if not x.is_zero())
        if len(degrees) > 1:
            raise MixedDegree('total element of degrees %s' %
                              sorted(degrees))
        self.base_part = base_part
        self.fibre_part = fibre_part
        self.degree = degrees.pop() if degrees else None

    def __repr__(self):
        parts = []
        if not self.base_part.is_zero():
            parts.append('s(%s)' % (self.base_part,))
        if not self.fibre_part.is_zero():
            parts.append('i(%s)' % (self.fibre_part,))
        return ' + '.join(parts) if parts else '0'

    def is_zero(self):
        return self.base_part.is_zero() and self.fibre_part.is_zero()

    def __add__(self, other):
        return TotalElement(self.base_part + other.base_part,
                            self.fibre_part + other.fibre_part)

    def __neg__(self):
        return TotalElement(-self.base_part, -self.fibre_part)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        return TotalElement(c*self.base_part, c*self.fibre_part)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return isinstance(other, TotalElement) and (self - other).is_zero()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.base_part, self.fibre_part))

    def to_json(self):
        return {'base': self.base_part.to_json(),
                'fibre': self.fibre_part.to_json()}


class TotalLieAlgebra(object):
    r"""The Whitehead bracket on :math:`\pi_*(E) = \pi_*(B) \oplus
    \pi_*(F)`.

    .. math::

        [(b_1, f_1), (b_2, f_2)] = ([b_1, b_2], [f_1, f_2] + \{b_1, f_2\}_s
          + (-1)^{|f_1||b_2|}\{b_2, f_1\}_s)
    """
    def __init__(self, fibration):
        self.fibration = fibration

    def __repr__(self):
        return 'TotalLieAlgebra(%s)' % (self.fibration,)

    def s(self, alpha):
        return TotalElement(alpha, self.fibration.fibre.zero(W))

    def i(self, beta):
        return TotalElement(self.fibration.base.zero(W), beta)

    def bracket(self, x, y):
        if x.is_zero() or y.is_zero():
            return TotalElement(self.fibration.base.zero(W),
                                self.fibration.fibre.zero(W))
        fib = self.fibration
        base = bracket(x.base_part, y.base_part)
        fibre = (bracket(x.fibre_part, y.fibre_part) +
                 fib.brace(x.base_part, y.fibre_part) +
                 _sign(x.degree*y.degree)*fib.brace(y.base_part,
                                                    x.fibre_part))
        return TotalElement(base, fibre)

    def jacobi_defect(self, x, y, z):
        if x.is_zero() or y.is_zero() or z.is_zero():
            return TotalElement(self.fibration.base.zero(W),
                                self.fibration.fibre.zero(W))
        p, q, r = x.degree, y.degree, z.degree
        b = self.bracket
        return (_sign(p*r)*b(b(x, y), z) + _sign(q*p)*b(b(y, z), x) +
                _sign(r*q)*b(b(z, x), y))

    def basis(self, degree_cap=None):
        r"""Returns the basis monomials :math:`s_*\alpha` and
        :math:`i_*\beta` of Whitehead degree at most `degree_cap`."""
        fib = self.fibration
        cap = fib.degree_cap if degree_cap is None else degree_cap
        return ([self.s(_basis_element(fib.base, u))
                 for u in fib.base.basis_words(cap - 1)] +
                [self.i(_basis_element(fib.fibre, v))
                 for v in fib.fibre.basis_words(cap - 1)])

    def mixed_triples(self, degree_cap=None):
        r"""Yields the triples with both summands present whose double
        bracket has Whitehead degree at most `degree_cap`; triples inside
        one summand satisfy Jacobi in the free algebras."""
        fib = self.fibration
        cap = fib.degree_cap if degree_cap is None else degree_cap
        base = [(u, _basis_element(fib.base, u))
                for u in fib.base.basis_words(cap - 1)]
        fibre = [(v, _basis_element(fib.fibre, v))
                 for v in fib.fibre.basis_words(cap - 1)]
        for u, b in base:
            for i, (v1, f1) in enumerate(fibre):
                for v2, f2 in fibre[i:]:
                    if b.degree + f1.degree + f2.degree - 2 <= cap:
                        yield self.s(b), self.i(f1), self.i(f2)
        for i, (u1, b1) in enumerate(base):
            for u2, b2 in base[i:]:
                for v, f in fibre:
                    if b1.degree + b2.degree + f.degree - 2 <= cap:
                        yield self.s(b1), self.s(b2), self.i(f)

    def jacobi_check(self, degree_cap=None):
        r"""Returns the first triple with nonzero Jacobi defect as
        `(x, y, z, defect)`, or `None`."""
        for x, y, z in self.mixed_triples(degree_cap):
            defect = self.jacobi_defect(x, y, z)
            if not defect.is_zero():
                return x, y, z, defect
        return None


def assemble_total_lie(fib, degree_cap=None):
    r"""Returns the :class:`TotalLieAlgebra` of `fib` after checking graded
    Jacobi on every mixed triple up to `degree_cap`.

    Raises
    ------
    InvalidPairing
        With the first failing triple.
    """
    total = TotalLieAlgebra(fib)
    failure = total.jacobi_check(degree_cap)
    if failure is not None:
        x, y, z, defect = failure
        raise InvalidPairing((x, y, z), defect)
    return total


def james_brace(fib, alpha, beta):
    r"""Returns the James brace product :math:`\{\alpha, \beta\}_s`.

    `fib` is a :class:`SplitFibration` (with Lie elements) or a table-backed
    fibration (with :class:`HomotopyClass` arguments).

    Raises
    ------
    DegreeOutOfRange
        If an argument has degree below 1, or the brace lies beyond the
        degree cap of a :class:`SplitFibration`.
    """
    if isinstance(fib, SplitFibration):
        if alpha.is_zero() or beta.is_zero():
            return fib.fibre.zero(W)
        target = _whitehead(alpha).degree + _whitehead(beta).degree - 1
        if target > fib.degree_cap:
            raise DegreeOutOfRange('brace degree %d exceeds the cap %d' %
                                   (target, fib.degree_cap))
    return fib.brace(alpha, beta)


def _identity_verdict(subject, lhs, rhs, citation):
    defect = lhs - rhs
    certificate = {'lhs': lhs, 'rhs': rhs}
    if defect.is_zero():
        return Verdict(Status.HOLDS, subject, certificate=certificate,
                       citations=[citation])
    return Verdict(Status.FAILS, subject, witness=defect,
                   certificate=certificate, citations=[citation])


def derivation_identity_check(fib, beta, gamma, delta):
    r"""Checks that :math:`D_\beta = \{\beta, -\}_s` is a derivation on
    `gamma` and `delta`."""
    beta, gamma, delta = [_whitehead(x) for x in (beta, gamma, delta)]
    zero = fib.fibre.zero(W)
    if beta.is_zero() or gamma.is_zero() or delta.is_zero():
        return _identity_verdict('derivation-identity', zero, zero,
                                 'brace products: D_beta is a derivation')
    k, l = beta.degree, gamma.degree
    lhs = fib.brace(beta, bracket(gamma, delta))
    rhs = (_sign(k - 1)*bracket(fib.brace(beta, gamma), delta) +
           _sign((l - 1)*(k - 1))*bracket(gamma, fib.brace(beta, delta)))
    return _identity_verdict('derivation-identity', lhs, rhs,
                             'brace products: D_beta is a derivation')


def lie_map_identity_check(fib, alpha, beta, gamma):
    r"""Checks that :math:`\alpha \mapsto D_\alpha` is a Lie algebra map on
    `alpha`, `beta` and the fibre element `gamma`."""
    alpha, beta, gamma = [_whitehead(x) for x in (alpha, beta, gamma)]
    zero = fib.fibre.zero(W)
    citation = 'brace products: alpha -> D_alpha is a Lie algebra map'
    if alpha.is_zero() or beta.is_zero() or gamma.is_zero():
        return _identity_verdict('lie-map-identity', zero, zero, citation)
    j, k = alpha.degree, beta.degree
    lhs = fib.brace(bracket(alpha, beta), gamma)
    rhs = _sign(j - 1)*(fib.brace(alpha, fib.brace(beta, gamma)) -
                        _sign((j - 1)*(k - 1))*fib.brace(
                            beta, fib.brace(alpha, gamma)))
    return _identity_verdict('lie-map-identity', lhs, rhs, citation)


def brace_pullback(f_effect, alpha, beta, fib):
    r"""Returns the brace of the pullback fibration along `f`,
    :math:`\{\alpha, \beta\}_{f^*s} = \{f_*\alpha, \beta\}_s`.

    Parameters
    ----------
    f_effect : callable
        The effect of `f` on base homotopy, e.g. a
        :class:`LieAlgebraMorphism`.
    """
    return james_brace(fib, f_effect(alpha), beta)


def brace_product_fibration(fib1, fib2, alpha, betas):
    r"""Returns the braces of the fibre product of `fib1` and `fib2` over
    their common base, with the diagonal section:
    :math:`\{\alpha, (\beta_1, \beta_2)\} = (\{\alpha,\beta_1\}_{s_1},
    \{\alpha,\beta_2\}_{s_2})`.

    A component given as the integer 0 yields 0.

    Raises
    ------
    BaseMismatch
    """
    if fib1.base != fib2.base:
        raise BaseMismatch('fibrations over %s and %s' % (fib1.base,
                                                          fib2.base))
    result = []
    for fib, beta in zip((fib1, fib2), betas):
        if isinstance(beta, int) and beta == 0:
            result.append(0)
        else:
            result.append(james_brace(fib, alpha, beta))
    return tuple(result)


class HomotopyClass(object):
    r"""A class in :math:`\pi_{degree}(\Omega^{loops} Z)` for a table-backed
    space `Z`, stored through the adjoint isomorphism as an element of
    :math:`\pi_{degree+loops}(Z)`.

    Parameters
    ----------
    space : SpaceName or str
    degree : int
    element : GroupElement
        An element of :math:`\pi_{degree+loops}(Z)`.
    loops : int
    names : tuple of str, optional
        Generator names used for display.
    """
    def __init__(self, space, degree, element, loops=0, names=()):
        self.space = SpaceName.parse(space)
        self.degree = int(degree)
        self.element = element
        self.loops = int(loops)
        self.names = tuple(names)

    @classmethod
    def from_table(cls, space, degree, coords, loops=0, table=None):
        r"""Builds a class from coordinates in the table group
        :math:`\pi_{degree+loops}(space)`."""
        table = table or default_table()
        entry = table.lookup(space, degree + loops)
        if isinstance(coords, int):
            coords = [coords]
        return cls(space, degree, entry.group(list(coords)), loops,
                   entry.generator_names)

    @property
    def total_degree(self):
        return self.degree + self.loops

    def adjoint(self, loops):
        r"""Returns the same class viewed in :math:`\Omega^{loops} Z`."""
        return HomotopyClass(self.space, self.total_degree - loops,
                             self.element, loops, self.names)

    def _like(self, element):
        return HomotopyClass(self.space, self.degree, element, self.loops,
                             self.names)

    def _check(self, other):
        if (self.space, self.degree, self.loops) != \
           (other.space, other.degree, other.loops):
            raise ValueError('classes live in different groups')

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return self._like(self.element + other.element)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return self._like(-self.element)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n):
        return self._like(int(n)*self.element)

    def __mul__(self, n):
        return self.__rmul__(n)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return (isinstance(other, HomotopyClass) and
                (self.space, self.degree, self.loops) ==
                (other.space, other.degree, other.loops) and
                self.element == other.element)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.space, self.degree, self.loops, self.element))

    def is_zero(self):
        return self.element.is_zero()

    def _name(self, i):
        if i < len(self.names):
            return self.names[i]
        return 'g%d' % i

    def __repr__(self):
        if self.is_zero():
            return '0'
        if self.loops == 0:
            wrap = '%s'
        elif self.loops == 1:
            wrap = 'ad(%s)'
        else:
            wrap = 'ad^%d(%%s)' % self.loops
        s = ''
        for i, c in enumerate(self.element.coords):
            if c == 0:
                continue
            term = wrap % self._name(i)
            s += (' - ' if c < 0 else ' + ') + \
                (term if abs(c) == 1 else '%d*%s' % (abs(c), term))
        return s[3:] if s.startswith(' + ') else '-' + s[3:]

    def to_json(self):
        return {'space': str(self.space), 'degree': self.degree,
                'loops': self.loops, 'coords': list(self.element.coords),
                'text': repr(self)}


def _product_value(space, left, right, table):
    r"""Returns the Whitehead product of two generator classes, or `None`
    if it cannot be derived."""
    p, q = left[0], right[0]
    entry = table.product(space, left, right)
    if entry is not None:
        return entry.value
    entry = table.product(space, right, left)
    if entry is not None:
        return _sign(p*q)*entry.value
    if space.kind != 'sphere':
        return None
    n = space.param
    target = table.group(space, p + q - 1)
    if n in H_SPACE_SPHERES:
        return target.zero()
    if n == 2 and (p >= 3 or q >= 3):
        return target.zero()
    if p == q == n and n % 2 == 0 and n not in (4, 8):
        # (m, 0) in the splitting of pi_{2n-1}(S^n)
        split = p_map(n, table)
        return target.element([split.free], ())
    return None


def whitehead_product(space, f, g, table=None):
    r"""Returns the Whitehead product :math:`[f, g] \in
    \pi_{p+q-1}(Z)`.

    The product is bilinear over generator coordinates. Generator products
    come from the table's ``products`` section (in either order, with the
    sign :math:`(-1)^{pq}`); on the H-spaces :math:`S^1, S^3, S^7` they
    vanish; on :math:`S^2` products involving a class of degree at least 3
    vanish; :math:`[\iota_n, \iota_n]` for even `n` other than 4, 8 is
    :math:`P(\mathrm{Id}) = (m, 0)`.

    Parameters
    ----------
    space : SpaceName or str
    f, g : HomotopyClass
        Read through the adjoint isomorphism as classes of `space`.

    Raises
    ------
    MissingEntry
        If a generator product cannot be derived.
    """
    table = table or default_table()
    space = SpaceName.parse(space)
    p, q = f.total_degree, g.total_degree
    if p < 1 or q < 1:
        raise DegreeOutOfRange('Whitehead products need degrees >= 1')
    entry = table.lookup(space, p + q - 1)
    result = entry.group.zero()
    for i, a in enumerate(f.element.coords):
        if a == 0:
            continue
        for j, b in enumerate(g.element.coords):
            if b == 0:
                continue
            value = _product_value(space, (p, i), (q, j), table)
            if value is None:
                raise MissingEntry(space, p + q - 1,
                                   'Whitehead product [%s, %s]' %
                                   (f._name(i), g._name(j)))
            result = result + (a*b)*value
    return HomotopyClass(space, p + q - 1, result, 0, entry.generator_names)


class FreeLoopFibration(object):
    r"""The `m`-th free loop space fibration
    :math:`\Omega^m Z \to L^m Z \to Z` with the section by constant maps.

    Its brace product is
    :math:`\{f, g\}_s = \mathrm{ad}^m [f, \mathrm{ad}^{-m} g]`.
    """
    def __init__(self, space, m, table=None):
        if m < 1:
            raise ValueError('free loop fibrations need m >= 1')
        self.space = SpaceName.parse(space)
        self.m = int(m)
        self.table = table or default_table()

    def __repr__(self):
        return 'FreeLoopFibration(%s, m=%d)' % (self.space, self.m)

    @property
    def base(self):
        return self.space

    def brace(self, f, g):
        if f.loops != 0 or g.loops != self.m:
            raise ValueError('expected a class of %s and a class of '
                             'Omega^%d %s' % (self.space, self.m, self.space))
        if f.degree < 1 or g.degree < 1:
            raise DegreeOutOfRange('brace arguments need degree >= 1')
        product = whitehead_product(self.space, f, g.adjoint(0), self.table)
        return product.adjoint(self.m)


def free_loop_brace(m, f, g, table=None):
    r"""Returns :math:`\{f, g\}_s` in the `m`-th free loop space fibration
    of the space of `f`.

    Examples
    --------
    >>> iota = HomotopyClass.from_table('S2', 2, [1])
    >>> free_loop_brace(1, iota, iota.adjoint(1))
    2*ad(gamma)
    """
    return FreeLoopFibration(f.space, m, table).brace(f, g)


class TrivialFibration(object):
    r"""The product fibration :math:`F \to B \times F \to B`.

    With the standard section all brace products vanish. With
    ``diagonal=True`` (requires `B = F`) the section is the diagonal and
    :math:`\{\alpha, \beta\}_\Delta = [\alpha, \beta]`.
    """
    def __init__(self, base, fibre, diagonal=False, table=None):
        self.base = SpaceName.parse(base)
        self.fibre = SpaceName.parse(fibre)
        if diagonal and self.base != self.fibre:
            raise ValueError('the diagonal section needs B = F')
        self.diagonal = diagonal
        self.table = table or default_table()

    def __repr__(self):
        return 'TrivialFibration(%s x %s%s)' % (
            self.base, self.fibre, ', diagonal' if self.diagonal else '')

    def brace(self, alpha, beta):
        if alpha.degree < 1 or beta.degree < 1:
            raise DegreeOutOfRange('brace arguments need degree >= 1')
        if self.diagonal:
            return whitehead_product(self.fibre, alpha, beta, self.table)
        entry = self.table.lookup(self.fibre, alpha.degree + beta.degree - 1)
        return HomotopyClass(self.fibre, alpha.degree + beta.degree - 1,
                             entry.group.zero(), 0, entry.generator_names)
