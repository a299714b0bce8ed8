r"""
Finitely Generated Abelian Groups :mod:`abelian_groups`
=======================================================

Exact arithmetic in finitely generated abelian groups

.. math::

    G = \mathbb{Z}^r \oplus \mathbb{Z}_{d_1} \oplus \cdots \oplus
    \mathbb{Z}_{d_t}, \qquad d_1 | d_2 | \cdots | d_t,

written in invariant-factor form. Homotopy groups, the coordinates of
elements in them and the homomorphisms between them are all expressed
through this module.

Classes
-------

.. autosummary::

    FGAbGroup
    GroupElement
    GroupHomomorphism

Functions
---------

.. autosummary::

    invariant_factors
    solve_integer_system

Contents
--------

"""
from collections import defaultdict

from sympy import Matrix, factorint
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ


def invariant_factors(values):
    r"""Returns the invariant factors of :math:`\oplus_i \mathbb{Z}_{v_i}`.

    The cyclic orders are split into prime powers and recombined into a
    divisor chain, so the result does not depend on the order of `values`.
    Orders equal to one are dropped.

    Parameters
    ----------
    values : iterable of int
        Positive cyclic orders.

    Returns
    -------
    tuple of int
        The divisor chain in increasing order.
    """
    powers = defaultdict(list)
    for v in values:
        v = int(v)
        if v < 1:
            raise ValueError('cyclic orders must be positive, got %d' % v)
        for p, e in factorint(v).items():
            powers[p].append(p**e)
    if not powers:
        return ()
    length = max(len(l) for l in powers.values())
    factors = [1]*length
    for p, l in powers.items():
        l.sort(reverse=True)
        for i, q in enumerate(l):
            factors[i] *= q
    return tuple(sorted(factors))


class FGAbGroup(object):
    r"""A finitely generated abelian group in invariant-factor form.

    Generators are ordered with the free generators first, then one
    generator per invariant factor.

    Parameters
    ----------
    rank : int
        The free rank.
    torsion : iterable of int
        Cyclic orders of the torsion summands. Any list of orders is
        accepted and canonicalized; :attr:`was_canonical` records whether
        the input already was the divisor chain.

    Examples
    --------
    >>> FGAbGroup(1, [4, 2])
    FGAbGroup(rank=1, torsion=(2, 4))
    >>> FGAbGroup(0, [2, 3]) == FGAbGroup(0, [6])
    True
    """
    @property
    def free_rank(self):
        return self._rank

    @property
    def torsion(self):
        return self._torsion

    @property
    def ngens(self):
        return self._rank + len(self._torsion)

    @property
    def was_canonical(self):
        return self._was_canonical

    def __init__(self, rank=0, torsion=()):
        rank = int(rank)
        if rank < 0:
            raise ValueError('free rank must be non-negative')
        torsion = [int(d) for d in torsion]
        self._rank = rank
        self._torsion = invariant_factors(torsion)
        self._was_canonical = tuple(torsion) == self._torsion

    @classmethod
    def from_relations(cls, ngens, rows):
        r"""Returns the quotient of :math:`\mathbb{Z}^{ngens}` by the span of
        the given relation rows, via the Smith normal form."""
        ngens = int(ngens)
        rows = [[int(a) for a in row] for row in rows]
        for row in rows:
            if len(row) != ngens:
                raise ValueError('relation row %s does not have %d entries' %
                                 (row, ngens))
        rows = [row for row in rows if any(row)]
        if not rows:
            return cls(ngens)
        snf = smith_normal_form(Matrix(rows), domain=ZZ)
        diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
        nonzero = [d for d in diagonal if d != 0]
        return cls(ngens - len(nonzero), [d for d in nonzero if d > 1])

    def __repr__(self):
        return 'FGAbGroup(rank=%d, torsion=%s)' % (self._rank, self._torsion)

    def __str__(self):
        summands = ['Z']*self._rank + ['Z_%d' % d for d in self._torsion]
        return ' + '.join(summands) if summands else '0'

    def __eq__(self, other):
        if isinstance(other, FGAbGroup):
            return (self._rank, self._torsion) == (other._rank,
                                                   other._torsion)
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._rank, self._torsion))

    def is_trivial(self):
        return self.ngens == 0

    def is_finite(self):
        return self._rank == 0

    def order(self):
        r"""Returns the order of the group, or `None` if it is infinite."""
        if self._rank:
            return None
        n = 1
        for d in self._torsion:
            n *= d
        return n

    def to_json(self):
        return {'rank': self._rank, 'torsion': list(self._torsion)}

    def element(self, free_coords=(), torsion_coords=()):
        return GroupElement(self, free_coords, torsion_coords)

    def __call__(self, *coords):
        r"""Returns the element with the given concatenated coordinates."""
        if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
            coords = coords[0]
        if len(coords) != self.ngens:
            raise ValueError('%s needs %d coordinates, got %d' %
                             (self, self.ngens, len(coords)))
        return GroupElement(self, coords[:self._rank], coords[self._rank:])

    def zero(self):
        return self([0]*self.ngens)

    def gens(self):
        result = []
        for i in range(self.ngens):
            coords = [0]*self.ngens
            coords[i] = 1
            result.append(self(coords))
        return result

    def relations(self):
        r"""Returns the relation vectors :math:`d_i e_{r+i}` of the torsion
        generators."""
        rows = []
        for i, d in enumerate(self._torsion):
            row = [0]*self.ngens
            row[self._rank + i] = d
            rows.append(row)
        return rows

    def contains(self, generators, element):
        r"""Returns `True` if `element` lies in the subgroup generated by
        `generators`."""
        columns = [list(g.coords) for g in generators] + self.relations()
        return solve_integer_system(_columns_to_rows(columns, self.ngens),
                                    list(element.coords)) is not None

    def quotient(self, elements):
        r"""Returns the quotient of this group by the subgroup generated by
        `elements`."""
        rows = self.relations() + [list(e.coords) for e in elements]
        return FGAbGroup.from_relations(self.ngens, rows)


class GroupElement(object):
    r"""An element of an :class:`FGAbGroup` in reduced coordinates.

    Attributes
    ----------
    group : FGAbGroup
    free_coords : tuple of int
    torsion_coords : tuple of int
        Residues in :math:`[0, d_i)`.
    """
    @property
    def group(self):
        return self._group

    @property
    def free_coords(self):
        return self._free

    @property
    def torsion_coords(self):
        return self._torsion

    @property
    def coords(self):
        return self._free + self._torsion

    def __init__(self, group, free_coords=(), torsion_coords=()):
        free_coords = tuple(int(a) for a in free_coords)
        torsion_coords = tuple(int(a) for a in torsion_coords)
        if not free_coords and group.free_rank:
            free_coords = (0,)*group.free_rank
        if not torsion_coords and group.torsion:
            torsion_coords = (0,)*len(group.torsion)
        if len(free_coords) != group.free_rank or \
           len(torsion_coords) != len(group.torsion):
            raise ValueError('coordinates %s | %s do not fit %s' %
                             (free_coords, torsion_coords, group))
        self._group = group
        self._free = free_coords
        self._torsion = tuple(a % d for a, d in
                              zip(torsion_coords, group.torsion))

    def _check(self, other):
        if not isinstance(other, GroupElement) or other._group != self._group:
            raise ValueError('cannot combine elements of different groups')

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return GroupElement(self._group,
                            [a + b for a, b in zip(self._free, other._free)],
                            [a + b for a, b in
                             zip(self._torsion, other._torsion)])

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return GroupElement(self._group, [-a for a in self._free],
                            [-a for a in self._torsion])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n):
        n = int(n)
        return GroupElement(self._group, [n*a for a in self._free],
                            [n*a for a in self._torsion])

    def __rmul__(self, n):
        return self.__mul__(n)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if isinstance(other, GroupElement):
            return (self._group == other._group and
                    self.coords == other.coords)
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._group, self.coords))

    def __repr__(self):
        return '(%s)' % ', '.join(str(a) for a in self.coords)

    def is_zero(self):
        return not any(self.coords)

    def order(self):
        r"""Returns the order of the element, or `None` if infinite."""
        if any(self._free):
            return None
        n = 1
        for a, d in zip(self._torsion, self._group.torsion):
            k = d // _gcd(a, d)
            n = n*k // _gcd(n, k)
        return n

    def to_json(self):
        return {'free': list(self._free), 'torsion': list(self._torsion)}


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


class GroupHomomorphism(object):
    r"""A homomorphism between finitely generated abelian groups.

    The matrix has one row per codomain generator and one column per domain
    generator; column `j` holds the coordinates of the image of the `j`-th
    domain generator.

    Parameters
    ----------
    domain, codomain : FGAbGroup
    matrix : list of lists of int
    check : bool
        If `True` (default), raise `ValueError` unless the map is well
        defined on the torsion generators of the domain.
    """
    def __init__(self, domain, codomain, matrix, check=True):
        matrix = [[int(a) for a in row] for row in matrix]
        if len(matrix) != codomain.ngens or \
           any(len(row) != domain.ngens for row in matrix):
            raise ValueError('a map %s -> %s needs a %dx%d matrix' %
                             (domain, codomain, codomain.ngens,
                              domain.ngens))
        self.domain = domain
        self.codomain = codomain
        self.matrix = tuple(tuple(row) for row in matrix)
        if check and not self.is_well_defined():
            raise ValueError('matrix %s does not define a homomorphism '
                             '%s -> %s' % (matrix, domain, codomain))

    def __repr__(self):
        return 'GroupHomomorphism(%s -> %s, %s)' % (self.domain,
                                                    self.codomain,
                                                    [list(r) for r in
                                                     self.matrix])

    def __eq__(self, other):
        if isinstance(other, GroupHomomorphism):
            return (self.domain == other.domain and
                    self.codomain == other.codomain and
                    all(self(g) == other(g) for g in self.domain.gens()))
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.domain, self.codomain))

    def column(self, j):
        return self.codomain([row[j] for row in self.matrix])

    def images(self):
        return [self.column(j) for j in range(self.domain.ngens)]

    def is_well_defined(self):
        rank = self.domain.free_rank
        for i, d in enumerate(self.domain.torsion):
            if not (d*self.column(rank + i)).is_zero():
                return False
        return True

    def __call__(self, x):
        if x.group != self.domain:
            raise ValueError('%s is not an element of %s' % (x, self.domain))
        coords = x.coords
        return self.codomain([sum(a*c for a, c in zip(row, coords))
                              for row in self.matrix])

    def compose(self, other):
        r"""Returns `self` after `other`."""
        if other.codomain != self.domain:
            raise ValueError('maps are not composable')
        columns = [list(self(g).coords) for g in other.images()]
        return GroupHomomorphism(
            other.domain, self.codomain,
            _columns_to_rows(columns, self.codomain.ngens), check=False)

    def __neg__(self):
        return GroupHomomorphism(self.domain, self.codomain,
                                 [[-a for a in row] for row in self.matrix],
                                 check=False)

    def is_zero(self):
        return all(g.is_zero() for g in self.images())

    def is_surjective(self):
        images = self.images()
        return all(self.codomain.contains(images, g)
                   for g in self.codomain.gens())

    def cokernel(self):
        return self.codomain.quotient(self.images())

    def preimage(self, y):
        r"""Returns some `x` with `self(x) = y`, or `None` if there is none."""
        if y.group != self.codomain:
            raise ValueError('%s is not an element of %s' % (y,
                                                             self.codomain))
        columns = [list(g.coords) for g in self.images()]
        columns += self.codomain.relations()
        x = solve_integer_system(
            _columns_to_rows(columns, self.codomain.ngens), list(y.coords))
        if x is None:
            return None
        return self.domain(list(x[:self.domain.ngens]))

    @classmethod
    def zero_map(cls, domain, codomain):
        return cls(domain, codomain,
                   [[0]*domain.ngens for _ in range(codomain.ngens)])


def _columns_to_rows(columns, nrows):
    return [[col[i] for col in columns] for i in range(nrows)]


def solve_integer_system(A, b):
    r"""Returns an integer solution `x` of `A x = b`, or `None`.

    `A` is reduced to lower column echelon form by unimodular column
    operations, which are recorded so that a solution of the echelon
    system can be transported back.

    Parameters
    ----------
    A : list of lists of int
        An `m x k` matrix given by rows.
    b : list of int
        A vector of length `m`.

    Returns
    -------
    tuple of int or None
    """
    m = len(b)
    A = [[int(a) for a in row] for row in A]
    if len(A) != m:
        raise ValueError('matrix and right-hand side have different lengths')
    k = len(A[0]) if A else 0
    V = [[int(i == j) for j in range(k)] for i in range(k)]

    def swap(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def subtract(j, i, q):
        # column j -= q * column i
        for M in (A, V):
            for row in M:
                row[j] -= q*row[i]

    pivots = []
    c = 0
    for r in range(m):
        if c >= k:
            break
        for j in range(c+1, k):
            while A[r][j] != 0:
                if A[r][c] == 0:
                    swap(c, j)
                    continue
                subtract(j, c, A[r][j] // A[r][c])
                if A[r][j] != 0:
                    swap(c, j)
        if A[r][c] != 0:
            pivots.append((r, c))
            c += 1

    pivot_column = dict(pivots)
    residual = [int(v) for v in b]
    y = [0]*k
    for r in range(m):
        if r in pivot_column:
            col = pivot_column[r]
            if residual[r] % A[r][col]:
                return None
            t = residual[r] // A[r][col]
            y[col] = t
            for i in range(m):
                residual[i] -= t*A[i][col]
        elif residual[r] != 0:
            return None
    return tuple(sum(V[i][j]*y[j] for j in range(k)) for i in range(k))
