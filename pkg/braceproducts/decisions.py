r"""
Splitting Decisions :mod:`decisions`
====================================

Qualified answers to two questions about a fibration with section:

* is the map :math:`\Omega B \times \Omega F \to \Omega E` given by the loop
  section and the loop inclusion an H-splitting, which happens exactly when
  the generalized brace product vanishes, and
* is the total space rationally a product.

Fibrations are described by a :class:`FibrationDescriptor`, readable from a
``fibration/1`` JSON document. Theorems are applied where they decide the
question outright (wedges of spheres, suspensions over suspensions, free
loop spaces of spheres, odd rational fibres); elsewhere the verdict rests on
the James brace product up to a degree and is qualified with caveats.

Classes
-------

.. autosummary::

    FibrationDescriptor
    SurfaceBundleReport

Functions
---------

.. autosummary::

    h_split_verdict
    sphere_over_sphere_split
    rational_verdicts
    surface_bundle_report
    analyze_descriptor

Contents
--------

"""
from .abelian_groups import FGAbGroup
from .clutching import (ClutchingClass, brace_from_clutching,
                        default_catalog, fibre_equiv_decision,
                        rational_split_certificate, suspension_image_check)
from .fibration import (HomotopyClass, SplitFibration, assemble_total_lie,
                        free_loop_brace, H_SPACE_SPHERES)
from .graded_lie import (DEFAULT_DEGREE_CAP, FreeGradedLieAlgebra,
                         GradingView, Unsupported)
from .homotopy_tables import (MissingEntry, SchemaError, SpaceName,
                              default_table, lie_group_rational_degrees,
                              rational_pi_sphere)
from .verdict import (Verdict, Status, CONVERSE_FAILS,
                      GENERALIZED_BRACE_NOT_IMPLIED, SECTION_DEPENDENT,
                      ONE_DIRECTIONAL, SUSPENDED_ZERO, TORSION_COEFFICIENTS)

DESCRIPTOR_SCHEMA = 'fibration/1'

# kind -> required parameters
KINDS = {
    'sphere_over_sphere': ('n', 'm'),
    'wedge_over_wedge': ('base', 'fibre'),
    'free_loop': ('m', 'space'),
    'clutched': ('n', 'q', 'rho'),
    'surface_bundle': ('g', 'n', 'w2'),
    'product_pullback': ('factors', 'fibre'),
    'lie_group_base': ('group', 'n'),
    'lie_group_fibration': ('total', 'fibre_dim', 'base_dim'),
    'presented': ('base', 'fibre', 'pairing'),
}

W = GradingView.WHITEHEAD


class FibrationDescriptor(object):
    r"""A fibration with section, named by kind and parameters.

    Kinds and their parameters:

    ``sphere_over_sphere``
        `n`, `m` and optionally `brace`, coordinates of
        :math:`\{\mathrm{Id}, \mathrm{Id}\}_s \in \pi_{n+m-1}(S^m)`.
    ``wedge_over_wedge``
        `base` and `fibre`, lists of sphere dimensions; `braces`, a list of
        ``[i, j, value]`` with `value` a Whitehead bracket expression in the
        fibre generators ``y0, y1, ...``; `summands`, ``spheres`` (default)
        or ``double_suspensions``.
    ``free_loop``
        `m` and `space`.
    ``clutched``
        `n`, `q`, `rho` and optionally `lift`, coordinates in
        :math:`\pi_{n-1}(SO(q+1))` and :math:`\pi_{n-1}(SO(q))`.
    ``surface_bundle``
        `g`, `n` and the flag `w2`.
    ``product_pullback``
        `factors`, sphere dimensions of the product base, and `fibre`.
    ``lie_group_base``
        `group` and the fibre sphere dimension `n`.
    ``lie_group_fibration``
        `total`, `fibre_dim` and `base_dim`, e.g. SU(3) over :math:`S^5`.
    ``presented``
        `base` and `fibre`, lists of ``[name, whitehead_degree]``;
        `pairing`, a list of ``[base_name, fibre_name, value]``.
    """
    def __init__(self, kind, **params):
        if kind not in KINDS:
            raise Unsupported('unknown fibration kind %r' % (kind,))
        for key in KINDS[kind]:
            if key not in params:
                raise ValueError('%s descriptors need the parameter %r' %
                                 (kind, key))
        self.kind = kind
        self.params = params

    def __repr__(self):
        args = ', '.join('%s=%r' % (k, v)
                         for k, v in sorted(self.params.items()))
        return 'FibrationDescriptor(%s, %s)' % (self.kind, args)

    def __getitem__(self, key):
        return self.params[key]

    def get(self, key, default=None):
        return self.params.get(key, default)

    @classmethod
    def from_json(cls, obj):
        r"""Reads a ``fibration/1`` document.

        Raises
        ------
        SchemaError
        """
        if not isinstance(obj, dict):
            raise SchemaError('document: expected a JSON object')
        if obj.get('schema') != DESCRIPTOR_SCHEMA:
            raise SchemaError('schema: expected %r, got %r' %
                              (DESCRIPTOR_SCHEMA, obj.get('schema')))
        kind = obj.get('kind')
        if kind not in KINDS:
            raise SchemaError('kind: expected one of %s' % sorted(KINDS))
        params = obj.get('params', {})
        if not isinstance(params, dict):
            raise SchemaError('params: expected an object')
        for key in KINDS[kind]:
            if key not in params:
                raise SchemaError('params: missing field %r' % key)
        return cls(kind, **params)

    def to_json(self):
        return {'schema': DESCRIPTOR_SCHEMA, 'kind': self.kind,
                'params': dict(self.params)}


def _require_simply_connected(*dims):
    for d in dims:
        if int(d) < 2:
            raise Unsupported('dimension %s: the theorems used need simply '
                              'connected spheres' % (d,))


def _sphere(space):
    space = SpaceName.parse(space)
    if space.kind != 'sphere':
        raise Unsupported('%s is not a sphere' % (space,))
    return space


def sphere_over_sphere_split(n, m, brace_value, suspended=False,
                             citations=()):
    r"""Decides whether a fibration :math:`S^m \to E \to S^n` with section
    is homotopy equivalent to :math:`S^n \times S^m`.

    This is the case iff some section has vanishing James brace product
    :math:`\{\mathrm{Id}_{S^n}, \mathrm{Id}_{S^m}\}_s`.

    Parameters
    ----------
    brace_value : GroupElement
        The brace for a given section, in :math:`\pi_{n+m-1}(S^m)`, or its
        fibrewise suspension in :math:`\pi_{n+m}(S^{m+1})` if `suspended`.
    suspended : bool
        A nonzero suspended value is independent of the section and decides
        the question; a zero suspended value decides nothing.
    """
    _require_simply_connected(n, m)
    table = default_table()
    if suspended:
        group = table.group(SpaceName.sphere(m + 1), n + m)
    else:
        group = table.group(SpaceName.sphere(m), n + m - 1)
    if brace_value.group != group:
        raise ValueError('brace value %s is not in %s' % (brace_value, group))
    citations = list(citations) + [
        'sphere over sphere: E ~ S^n x S^m iff some section has vanishing '
        'James brace product']
    subject = 'h-split'
    if brace_value.is_zero():
        if suspended:
            return Verdict(Status.UNKNOWN, subject,
                           caveats=[SUSPENDED_ZERO], citations=citations)
        return Verdict(Status.HOLDS, subject,
                       certificate={'conclusion': 'E ~ S^%d x S^%d' % (n, m)},
                       citations=citations)
    caveats = [] if suspended else [SECTION_DEPENDENT]
    return Verdict(Status.FAILS, subject, witness=brace_value,
                   certificate={'suspended': suspended}, caveats=caveats,
                   citations=citations)


def _wedge_fibration(desc, degree_cap):
    base_dims = [int(d) for d in desc['base']]
    fibre_dims = [int(d) for d in desc['fibre']]
    _require_simply_connected(*(base_dims + fibre_dims))
    base = FreeGradedLieAlgebra([('x%d' % i, d - 1)
                                 for i, d in enumerate(base_dims)])
    fibre = FreeGradedLieAlgebra([('y%d' % i, d - 1)
                                  for i, d in enumerate(fibre_dims)])
    pairing = {}
    for i, j, value in desc.get('braces', []):
        pairing[('x%d' % i, 'y%d' % j)] = fibre.parse(value, W)
    return SplitFibration(base, fibre, pairing, degree_cap=degree_cap)


def _presented_fibration(desc, degree_cap):
    base = FreeGradedLieAlgebra([(name, int(d) - 1)
                                 for name, d in desc['base']])
    fibre = FreeGradedLieAlgebra([(name, int(d) - 1)
                                  for name, d in desc['fibre']])
    pairing = dict(((a, b), fibre.parse(value, W))
                   for a, b, value in desc['pairing'])
    cap = int(desc.get('degree_cap', degree_cap))
    return SplitFibration(base, fibre, pairing, degree_cap=cap)


def _wedge_verdict(desc, degree_cap):
    fib = _wedge_fibration(desc, degree_cap)
    subject = 'h-split'
    citation = ('wedges of spheres: H-splitting iff every brace of '
                'inclusions vanishes')
    table = {}
    for i in range(fib.base.ngens):
        for j in range(fib.fibre.ngens):
            table['{x%d,y%d}' % (i, j)] = fib.brace_word((i,), (j,))
    nonzero = [(k, v) for k, v in sorted(table.items()) if not v.is_zero()]
    if nonzero:
        key, witness = nonzero[0]
        return Verdict(Status.FAILS, subject, witness=witness,
                       certificate={'braces': table, 'first': key},
                       citations=[citation])
    if desc.get('summands', 'spheres') == 'double_suspensions':
        return Verdict(Status.HOLDS_UP_TO_DEGREE, subject,
                       certificate={'braces': table},
                       caveats=[TORSION_COEFFICIENTS],
                       citations=[citation], degree=degree_cap)
    return Verdict(Status.HOLDS, subject, certificate={'braces': table},
                   citations=[citation])


def _free_loop_verdict(desc, degree_cap):
    m = int(desc['m'])
    space = _sphere(desc['space'])
    n = space.param
    _require_simply_connected(n)
    subject = 'h-split'
    if m < 1:
        raise Unsupported('free loop fibrations need m >= 1')
    if n in H_SPACE_SPHERES:
        return Verdict(Status.HOLDS, subject,
                       certificate={'reason': 'Whitehead products vanish on '
                                    'the H-space %s' % space},
                       citations=['%s is an H-space, so the generalized '
                                  'brace product vanishes' % space])
    if n == 2:
        iota = HomotopyClass.from_table(space, 2, [1])
        if m == 1:
            witness = free_loop_brace(1, iota, iota.adjoint(1))
            return Verdict(Status.FAILS, subject, witness=witness,
                           certificate={'brace': '{Id, ad(Id)}_s',
                                        'hopf_class': 'gamma'},
                           caveats=[SECTION_DEPENDENT],
                           citations=['free loop space of S^2: '
                                      '{Id, ad Id}_s = 2 ad gamma != 0'])
        return Verdict(Status.HOLDS, subject,
                       certificate={'reason': 'every class of Omega^%d S^2 '
                                    'factors through the Hopf class' % m},
                       citations=['free loop spaces of S^2 for m >= 2: the '
                                  'generalized brace product vanishes '
                                  'identically'])
    return _free_loop_search(space, m, degree_cap)


def _free_loop_search(space, m, degree_cap):
    table = default_table()
    n = space.param
    checked, undetermined = [], []
    witness = None
    for p in range(n, degree_cap + 1):
        try:
            f_entry = table.lookup(space, p)
        except MissingEntry:
            undetermined.append('pi_%d(%s)' % (p, space))
            continue
        for k in range(m + 1, degree_cap + 2 - p):
            try:
                g_entry = table.lookup(space, k)
            except MissingEntry:
                undetermined.append('pi_%d(%s)' % (k, space))
                continue
            for i in range(f_entry.group.ngens):
                for j in range(g_entry.group.ngens):
                    f = HomotopyClass(space, p, f_entry.group.gens()[i], 0,
                                      f_entry.generator_names)
                    g = HomotopyClass(space, k - m, g_entry.group.gens()[j],
                                      m, g_entry.generator_names)
                    label = '{%r, %r}' % (f, g)
                    try:
                        value = free_loop_brace(m, f, g, table)
                    except MissingEntry:
                        undetermined.append(label)
                        continue
                    checked.append(label)
                    if witness is None and not value.is_zero():
                        witness = value
    certificate = {'checked': checked,
                   'undetermined': sorted(set(undetermined))}
    citations = ['free loop fibration: {f, g}_s = ad^m[f, ad^-m g]']
    if witness is not None:
        return Verdict(Status.FAILS, 'h-split', witness=witness,
                       certificate=certificate, caveats=[SECTION_DEPENDENT],
                       citations=citations)
    if undetermined:
        return Verdict(Status.UNKNOWN, 'h-split', certificate=certificate,
                       citations=citations)
    return Verdict(Status.HOLDS_UP_TO_DEGREE, 'h-split',
                   certificate=certificate,
                   caveats=[GENERALIZED_BRACE_NOT_IMPLIED],
                   citations=citations, degree=degree_cap)


def _clutching(desc):
    return ClutchingClass.from_coordinates(int(desc['n']), int(desc['q']),
                                           desc['rho'], desc.get('lift'))


def _clutched_verdict(desc):
    c = _clutching(desc)
    _require_simply_connected(c.n, c.q)
    if c.rho.is_zero():
        return Verdict(Status.HOLDS, 'h-split',
                       certificate={'conclusion': 'trivial bundle, E = S^%d '
                                    'x S^%d' % (c.n, c.q)},
                       citations=['rho = 0 clutches the product bundle'])
    brace = brace_from_clutching(c)
    return sphere_over_sphere_split(
        c.n, c.q, brace.value, suspended=True,
        citations=['over a suspension {Id, Id}_s = -J[rho] after one '
                   'fibrewise suspension'] + list(c.citations))


def _presented_verdict(desc, degree_cap):
    fib = _presented_fibration(desc, degree_cap)
    assemble_total_lie(fib)
    nonzero = fib.nonzero_braces()
    certificate = {'pairs_checked': len(fib.pairs())}
    citations = ['James brace product of a presented fibration']
    if nonzero:
        u, v, value = nonzero[0]
        certificate['first'] = '{%s, %s}' % (
            fib.base.monomial_string(u, W), fib.fibre.monomial_string(v, W))
        return Verdict(Status.FAILS, 'h-split', witness=value,
                       certificate=certificate, caveats=[SECTION_DEPENDENT],
                       citations=citations)
    return Verdict(Status.HOLDS_UP_TO_DEGREE, 'h-split',
                   certificate=certificate,
                   caveats=[GENERALIZED_BRACE_NOT_IMPLIED],
                   citations=citations, degree=fib.degree_cap)


def h_split_verdict(desc, degree_cap=DEFAULT_DEGREE_CAP):
    r"""Decides whether the loop section and loop inclusion give an
    H-splitting :math:`\Omega B \times \Omega F \simeq \Omega E`.

    Raises
    ------
    Unsupported
        For kinds without an applicable theorem.
    MissingEntry
        When a needed table value is absent.
    """
    kind = desc.kind
    if kind == 'sphere_over_sphere':
        n, m = int(desc['n']), int(desc['m'])
        if desc.get('brace') is None:
            raise Unsupported('sphere_over_sphere needs a brace value; use a '
                              'clutched descriptor to derive it')
        group = default_table().group(SpaceName.sphere(m), n + m - 1)
        return sphere_over_sphere_split(n, m, group(list(desc['brace'])))
    if kind == 'wedge_over_wedge':
        return _wedge_verdict(desc, degree_cap)
    if kind == 'free_loop':
        return _free_loop_verdict(desc, degree_cap)
    if kind == 'clutched':
        return _clutched_verdict(desc)
    if kind == 'product_pullback':
        factors = [int(d) for d in desc['factors']]
        if len(factors) < 2:
            raise Unsupported('product pullbacks need at least two factors')
        _require_simply_connected(*(factors + [int(desc['fibre'])]))
        return Verdict(Status.HOLDS, 'h-split',
                       certificate={'reason': 'the pinch map of the product '
                                    'is null on every suspension, so '
                                    '{a, b}_{f*s} = {f a, b}_s = 0'},
                       citations=['pullback along the pinching map of a '
                                  'product of spheres'])
    if kind == 'surface_bundle':
        return surface_bundle_report(desc['g'], desc['n'],
                                     desc['w2']).brace_verdict
    if kind == 'presented':
        return _presented_verdict(desc, degree_cap)
    raise Unsupported('no H-splitting criterion for %s' % kind)


def _lie_group_base_verdict(desc):
    group = desc['group']
    n = int(desc['n'])
    _require_simply_connected(n)
    degrees = lie_group_rational_degrees(group)
    checks = []
    for k in degrees:
        d = n + k - 1
        checks.append({'sphere': k, 'degree': d,
                       'rank': rational_pi_sphere(n, d)})
    certificate = {'rational_type': ' x '.join('S^%d' % k for k in degrees),
                   'braces': checks}
    citations = ['%s is rationally a product of odd spheres' % group,
                 'pairwise braces of a product of suspensions suffice']
    if any(c['rank'] for c in checks):
        raise Unsupported('a pairwise rational brace group is nonzero')
    return Verdict(Status.HOLDS, 'rational-product', certificate=certificate,
                   citations=citations)


def _product_group(groups):
    rank = sum(g.free_rank for g in groups)
    torsion = [d for g in groups for d in g.torsion]
    return FGAbGroup(rank, torsion)


def _lie_group_fibration_verdict(desc):
    total = desc['total']
    fibre_dim, base_dim = int(desc['fibre_dim']), int(desc['base_dim'])
    degrees = sorted(lie_group_rational_degrees(total))
    if degrees != sorted([fibre_dim, base_dim]):
        raise Unsupported('%s is not rationally S^%d x S^%d' %
                          (total, fibre_dim, base_dim))
    table = default_table()
    k = fibre_dim + 1
    total_group = table.group(SpaceName('lie_group', total), k)
    product = _product_group([table.group(SpaceName.sphere(fibre_dim), k),
                              table.group(SpaceName.sphere(base_dim), k)])
    certificate = {
        'rational_type': 'S^%d x S^%d' % (fibre_dim, base_dim),
        'section': False,
        'pi_%d' % k: {'total': str(total_group),
                      'product': str(product)},
        'homotopy_product': total_group == product}
    return Verdict(Status.HOLDS, 'rational-product', certificate=certificate,
                   caveats=[CONVERSE_FAILS],
                   citations=['%s -> S^%d is a rational product without a '
                              'section' % (total, base_dim)])


def rational_verdicts(desc, degree_cap=DEFAULT_DEGREE_CAP):
    r"""Decides whether the total space is rationally a product.

    Never fails: a vanishing rational brace product certifies the product,
    while a nonzero one leaves the question open (``unknown`` with the
    ``ONE_DIRECTIONAL`` caveat).

    Raises
    ------
    Unsupported
    MissingEntry
    """
    kind = desc.kind
    if kind == 'clutched':
        c = _clutching(desc)
        return rational_split_certificate(c.n, c.q, c)
    if kind == 'sphere_over_sphere':
        n, m = int(desc['n']), int(desc['m'])
        _require_simply_connected(n, m)
        if desc.get('brace') is None:
            return rational_split_certificate(n, m)
        group = default_table().group(SpaceName.sphere(m), n + m - 1)
        brace = group(list(desc['brace']))
        rational = group.element(brace.free_coords, ())
        citations = ['suspension over suspension: vanishing rational James '
                     'brace gives E_Q ~ S^n_Q x S^m_Q']
        if rational.is_zero():
            return Verdict(Status.HOLDS, 'rational-product',
                           certificate={'rational_brace': rational},
                           citations=citations)
        return Verdict(Status.UNKNOWN, 'rational-product',
                       certificate={'rational_brace': rational},
                       caveats=[ONE_DIRECTIONAL], citations=citations)
    if kind == 'lie_group_base':
        return _lie_group_base_verdict(desc)
    if kind == 'lie_group_fibration':
        return _lie_group_fibration_verdict(desc)
    if kind == 'wedge_over_wedge':
        verdict = _wedge_verdict(desc, degree_cap)
        if verdict.fails:
            certificate = dict(verdict.certificate, witness=verdict.witness)
            return Verdict(Status.UNKNOWN, 'rational-product',
                           certificate=certificate,
                           caveats=[ONE_DIRECTIONAL],
                           citations=verdict.citations)
        verdict.subject = 'rational-product'
        return verdict
    if kind == 'product_pullback':
        return Verdict(Status.HOLDS, 'rational-product',
                       certificate={'reason': 'all pairwise braces of the '
                                    'product factors vanish',
                                    'odd_fibre': int(desc['fibre']) % 2 == 1},
                       citations=['products of suspensions: pairwise braces '
                                  'suffice'])
    raise Unsupported('no rational criterion for %s' % kind)


class SurfaceBundleReport(object):
    r"""Sphere bundles :math:`S^n \to E \to \Sigma_g` with section.

    Attributes
    ----------
    brace_verdict : Verdict
        The James brace product vanishes identically.
    product_verdict : Verdict
        Whether :math:`E \simeq \Sigma_g \times S^n`; fails exactly when
        :math:`w_2 \neq 0`.
    w_class : str
        The total Stiefel-Whitney class of the vertical tangent bundle.
    """
    def __init__(self, g, n, w2_nonzero):
        self.g = g
        self.n = n
        self.w2_nonzero = bool(w2_nonzero)
        self.brace_verdict = Verdict(
            Status.HOLDS, 'james-brace',
            certificate={'james_brace': 'identically zero',
                         'reason': 'the brace pulls back from the '
                         '1-skeleton, a wedge of circles'},
            caveats=[GENERALIZED_BRACE_NOT_IMPLIED],
            citations=['sphere bundles over surfaces: the James brace '
                       'product vanishes'])
        if self.w2_nonzero:
            self.w_class = 'w(T S(zeta)) = 1 + pi^*w_2(zeta)'
            witness = FGAbGroup(0, [2])(1)
            self.product_verdict = Verdict(
                Status.FAILS, 'homotopy-product', witness=witness,
                certificate={'w_class': self.w_class,
                             'obstruction': 'pi^* is injective in H^2, so '
                             'w_2 of the total space is nonzero'},
                citations=['sphere bundles over surfaces are detected by '
                           'the second Stiefel-Whitney class'])
        else:
            self.w_class = 'w(T S(zeta)) = 1'
            self.product_verdict = Verdict(
                Status.HOLDS, 'homotopy-product',
                certificate={'w_class': self.w_class},
                citations=['w_2 = 0: the bundle is trivial'])

    def __repr__(self):
        return 'SurfaceBundleReport(g=%d, n=%d): %s; %s; %s' % (
            self.g, self.n, self.brace_verdict, self.product_verdict,
            self.w_class)

    def verdicts(self):
        return [self.brace_verdict, self.product_verdict]

    def to_json(self):
        return {'g': self.g, 'n': self.n, 'w2_nonzero': self.w2_nonzero,
                'w_class': self.w_class,
                'verdicts': [v.to_json() for v in self.verdicts()]}


def surface_bundle_report(g, n, w2_nonzero):
    r"""Reports on :math:`S^n` bundles with section over the orientable
    surface of genus `g`."""
    g, n = int(g), int(n)
    if g < 1 or n < 2:
        raise Unsupported('surface bundles need g >= 1 and n >= 2')
    return SurfaceBundleReport(g, n, w2_nonzero)


def _clutched_extras(desc):
    c = _clutching(desc)
    catalog = default_catalog()
    verdicts = []
    if c.j_image is not None:
        trivial = ClutchingClass.from_coordinates(
            c.n, c.q, [0]*c.rho.group.ngens, catalog=catalog)
        verdicts.append(fibre_equiv_decision(trivial, c))
    try:
        verdicts.append(suspension_image_check(c, catalog))
    except MissingEntry:
        pass
    return verdicts


def analyze_descriptor(desc, degree_cap=DEFAULT_DEGREE_CAP):
    r"""Returns every applicable verdict for `desc`.

    Raises
    ------
    Unsupported
        If no criterion applies.
    """
    if desc.kind == 'surface_bundle':
        return surface_bundle_report(desc['g'], desc['n'],
                                     desc['w2']).verdicts()
    verdicts = []
    for decide in (h_split_verdict, rational_verdicts):
        try:
            verdicts.append(decide(desc, degree_cap))
        except Unsupported:
            pass
    if desc.kind == 'clutched':
        verdicts.extend(_clutched_extras(desc))
    if not verdicts:
        raise Unsupported('no criterion applies to %s' % desc.kind)
    return verdicts
