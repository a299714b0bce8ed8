r"""
Generalized J-Homomorphism Terms :mod:`j_homomorphism`
======================================================

A small term algebra for the generalized J-homomorphism. Clutching terms
:math:`\rho` are built from symbols, the identity-valued map
:math:`\varepsilon`, constant maps, post-composition with maps
:math:`\varphi` and sums. J-terms are built from :math:`J[\rho]`,
pushforwards :math:`\varphi_*` and integer linear combinations.

The rewrite rules are

1. :math:`J[\rho_1 + \rho_2] \to J[\rho_1] + J[\rho_2]`
2. :math:`J[\varphi \circ \rho] \to \varphi_* J[\rho]`
3. a constant map :math:`x \mapsto \varphi` is :math:`\varphi \circ
   \varepsilon`
4. :math:`J[\varepsilon] \to 0` when the base is a suspension
5. :math:`\varphi_*` distributes over sums

The system is terminating and confluent; :func:`j_rules_apply` applies the
rules in any (optionally random) order and collects like terms.

Classes
-------

.. autosummary::

    Rho
    Eps
    ConstMap
    Compose
    RhoSum
    J
    Push
    JSum
    JNormalForm

Functions
---------

.. autosummary::

    j_rules_apply

Contents
--------

"""


class _Term(object):
    r"""Base class of immutable terms compared by structure."""
    _fields = ()

    def _key(self):
        return (type(self).__name__,) + tuple(getattr(self, f)
                                              for f in self._fields)

    def __eq__(self, other):
        return isinstance(other, _Term) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def children(self):
        return ()

    def with_children(self, children):
        return self


class _RhoTerm(_Term):

    def __add__(self, other):
        return RhoSum([(1, self), (1, other)])

    def __sub__(self, other):
        return RhoSum([(1, self), (-1, other)])

    def __rmul__(self, n):
        return RhoSum([(int(n), self)])


class Rho(_RhoTerm):
    r"""A clutching symbol."""
    _fields = ('name',)

    def __init__(self, name):
        if name == 'eps':
            raise ValueError("'eps' is reserved for the identity map")
        self.name = name

    def __repr__(self):
        return self.name


class Eps(_RhoTerm):
    r"""The clutching map with constant value the identity."""

    def __repr__(self):
        return 'eps'


class ConstMap(_RhoTerm):
    r"""The clutching map with constant value `phi`."""
    _fields = ('phi',)

    def __init__(self, phi):
        self.phi = phi

    def __repr__(self):
        return 'const(%s)' % self.phi


class Compose(_RhoTerm):
    r"""Post-composition :math:`\varphi \circ \rho`."""
    _fields = ('phi', 'rho')

    def __init__(self, phi, rho):
        self.phi = phi
        self.rho = rho

    def __repr__(self):
        return '%s o %s' % (self.phi, _wrap(self.rho))

    def children(self):
        return (self.rho,)

    def with_children(self, children):
        return Compose(self.phi, children[0])


class RhoSum(_RhoTerm):
    _fields = ('items',)

    def __init__(self, items):
        self.items = tuple((int(c), t) for c, t in items)

    def __repr__(self):
        return _render_sum(self.items)

    def children(self):
        return tuple(t for _, t in self.items)

    def with_children(self, children):
        return RhoSum(zip([c for c, _ in self.items], children))


class _JTerm(_Term):

    def __add__(self, other):
        return JSum([(1, self), (1, other)])

    def __sub__(self, other):
        return JSum([(1, self), (-1, other)])

    def __neg__(self):
        return JSum([(-1, self)])

    def __rmul__(self, n):
        return JSum([(int(n), self)])


class J(_JTerm):
    _fields = ('rho',)

    def __init__(self, rho):
        if not isinstance(rho, _RhoTerm):
            raise TypeError('J applies to clutching terms, got %r' % (rho,))
        self.rho = rho

    def __repr__(self):
        return 'J[%s]' % (self.rho,)

    def children(self):
        return (self.rho,)

    def with_children(self, children):
        return J(children[0])


class Push(_JTerm):
    r"""The pushforward :math:`\varphi_*` of a J-term."""
    _fields = ('phi', 'term')

    def __init__(self, phi, term):
        self.phi = phi
        self.term = term

    def __repr__(self):
        return '%s_*%s' % (self.phi, _wrap(self.term))

    def children(self):
        return (self.term,)

    def with_children(self, children):
        return Push(self.phi, children[0])


class JSum(_JTerm):
    _fields = ('items',)

    def __init__(self, items):
        self.items = tuple((int(c), t) for c, t in items)

    def __repr__(self):
        return _render_sum(self.items)

    def children(self):
        return tuple(t for _, t in self.items)

    def with_children(self, children):
        return JSum(zip([c for c, _ in self.items], children))


def _wrap(term):
    s = repr(term)
    return '(%s)' % s if isinstance(term, (RhoSum, JSum)) else s


def _render_sum(items):
    if not items:
        return '0'
    s = ''
    for c, t in items:
        s += ' - ' if c < 0 else ' + '
        c = abs(c)
        s += _wrap(t) if c == 1 else '%d*%s' % (c, _wrap(t))
    return s[3:] if s.startswith(' + ') else '-' + s[3:]


#
# rewrite rules: each maps a node to its replacement or None
#
def _additivity(node, suspension):
    if isinstance(node, J) and isinstance(node.rho, RhoSum):
        return JSum([(c, J(r)) for c, r in node.rho.items])


def _naturality(node, suspension):
    if isinstance(node, J) and isinstance(node.rho, Compose):
        return Push(node.rho.phi, J(node.rho.rho))


def _constant(node, suspension):
    if isinstance(node, ConstMap):
        return Compose(node.phi, Eps())


def _epsilon(node, suspension):
    if suspension and isinstance(node, J) and isinstance(node.rho, Eps):
        return JSum([])


def _push_linear(node, suspension):
    if isinstance(node, Push) and isinstance(node.term, JSum):
        return JSum([(c, Push(node.phi, t)) for c, t in node.term.items])


def _flatten(node, suspension):
    if isinstance(node, JSum) and any(isinstance(t, JSum)
                                      for _, t in node.items):
        items = []
        for c, t in node.items:
            if isinstance(t, JSum):
                items.extend((c*d, s) for d, s in t.items)
            else:
                items.append((c, t))
        return JSum(items)


RULES = (_additivity, _naturality, _constant, _epsilon, _push_linear,
         _flatten)


def _redexes(node, suspension, path=()):
    found = []
    for rule in RULES:
        replacement = rule(node, suspension)
        if replacement is not None:
            found.append((path, replacement))
    for i, child in enumerate(node.children()):
        found.extend(_redexes(child, suspension, path + (i,)))
    return found


def _replace(node, path, replacement):
    if not path:
        return replacement
    children = list(node.children())
    children[path[0]] = _replace(children[path[0]], path[1:], replacement)
    return node.with_children(children)


class JNormalForm(object):
    r"""An integer combination of J-atoms.

    An atom is a chain of pushforwards applied to :math:`J[\rho]` for a
    clutching symbol, or to :math:`J[\varepsilon]` when the base is not
    known to be a suspension.

    Attributes
    ----------
    terms : dict
        Keys `(pushforwards, atom)`, where `pushforwards` is a tuple of map
        names applied outermost first and `atom` a symbol name or ``eps``,
        mapped to nonzero integers.
    """
    def __init__(self, terms):
        self.terms = dict((k, c) for k, c in terms.items() if c != 0)

    def __eq__(self, other):
        if isinstance(other, JNormalForm):
            return self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def atoms(self):
        return sorted(set(atom for _, atom in self.terms))

    def __repr__(self):
        items = []
        for (pushes, atom), c in sorted(self.terms.items()):
            s = 'J[%s]' % atom
            for phi in reversed(pushes):
                s = '%s_*%s' % (phi, s)
            items.append((c, s))
        if not items:
            return '0'
        out = ''
        for c, s in items:
            out += ' - ' if c < 0 else ' + '
            out += s if abs(c) == 1 else '%d*%s' % (abs(c), s)
        return out[3:] if out.startswith(' + ') else '-' + out[3:]

    def to_json(self):
        return [[list(pushes), atom, c]
                for (pushes, atom), c in sorted(self.terms.items())]

    def evaluate(self, values, pushforwards=None):
        r"""Resolves the normal form to a group element.

        Parameters
        ----------
        values : dict
            Atom names mapped to the group elements :math:`J[\rho]`.
        pushforwards : dict, optional
            Map names mapped to callables acting on group elements.

        Returns
        -------
        GroupElement or None
            `None` when the normal form is zero and no atom fixes the
            target group.
        """
        pushforwards = pushforwards or {}
        result = None
        for (pushes, atom), c in sorted(self.terms.items()):
            if atom not in values:
                raise ValueError('no value for J[%s]' % atom)
            x = values[atom]
            for phi in reversed(pushes):
                if phi not in pushforwards:
                    raise ValueError('no pushforward for %s' % phi)
                x = pushforwards[phi](x)
            result = c*x if result is None else result + c*x
        return result


def _collect(node, coefficient, pushes, terms):
    if isinstance(node, JSum):
        for c, t in node.items:
            _collect(t, coefficient*c, pushes, terms)
    elif isinstance(node, Push):
        _collect(node.term, coefficient, pushes + (node.phi,), terms)
    elif isinstance(node, J):
        if isinstance(node.rho, Rho):
            atom = node.rho.name
        elif isinstance(node.rho, Eps):
            atom = 'eps'
        else:
            raise ValueError('%r is not in normal form' % (node,))
        key = (pushes, atom)
        terms[key] = terms.get(key, 0) + coefficient
    else:
        raise ValueError('%r is not a J-term' % (node,))


def j_rules_apply(expr, suspension=False, rng=None):
    r"""Rewrites a J-term to its normal form.

    Parameters
    ----------
    expr : J-term
        Built from :class:`J`, :class:`Push` and :class:`JSum`.
    suspension : bool
        Whether the base is a suspension, enabling
        :math:`J[\varepsilon] = 0`.
    rng : numpy.random.RandomState, optional
        If given, the redex to rewrite is chosen at random at every step;
        otherwise the outermost-leftmost redex is rewritten.

    Returns
    -------
    JNormalForm

    Examples
    --------
    >>> rho = Rho('rho')
    >>> j_rules_apply(J(Compose('phi', rho)) - Push('phi', J(rho)))
    0
    """
    if not isinstance(expr, _JTerm):
        raise TypeError('expected a J-term, got %r' % (expr,))
    while True:
        redexes = _redexes(expr, suspension)
        if not redexes:
            break
        if rng is None:
            path, replacement = redexes[0]
        else:
            path, replacement = redexes[rng.randint(len(redexes))]
        expr = _replace(expr, path, replacement)
    terms = {}
    _collect(expr, 1, (), terms)
    return JNormalForm(terms)
