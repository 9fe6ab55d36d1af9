# Copyright (C) 2026 The bnck authors
#
# This file is part of bnck.
#
# bnck is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# bnck is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with bnck.  If not, see <http://www.gnu.org/licenses/>.

"""Pseudo-Kahler integrability of Bn-generalized almost pseudo-Hermitian
structures, decided directly (Dorfman closure of the eigenbundles) and
from the components (connections preserving distributions plus algebraic
constraints on H and F), together with rescalings and the reduced tests
of dimensions 2, 3 and 4.
"""

from .courant import BnAlgebroid, dorfman_lie_derivative
from .exactfield import Matrix, eigenspace
from .liealg import KForm, PseudoMetric, killing_fields, levi_civita
from .liealg import lie_derivative_endo, nijenhuis
from .reports import check, collects_checks
from .structures import ComponentsEven, ComponentsOdd, GenMetric, assemble
from .structures import direct_eigenbundles
from .utils import DimensionError, InadmissibleParameters, logger
from itertools import combinations

__all__ = ["VIA_DIRECT", "VIA_COMPONENTS", "VIA_BOTH", "bundle_closed",
           "check_direct", "check_odd", "check_even", "check_reduced",
           "check_components", "check_kahler", "side_conditions",
           "exchange_check", "rescale", "classical_reduction_check",
           "minus_connection", "torsion_endomorphism"]

VIA_DIRECT = "direct"
VIA_COMPONENTS = "components"
VIA_BOTH = "both"

NON_NULL_MESSAGE = (
    "c+^2 = 1 with nonzero X+-: the even integrability test assumes X+ "
    "and X- are non-null, and the classical test needs X+ = X- = 0")


def _first_failing_pair(algebroid, subspace):
    field = algebroid.field
    basis = subspace.basis
    for a, u in enumerate(basis):
        for b, v in enumerate(basis):
            residual = subspace.residual(algebroid.bracket(u, v))
            if not field.is_zero_vector(residual):
                return {"pair": [a + 1, b + 1], "u": u, "v": v,
                        "residual": residual}
    return None


@collects_checks("closure")
def bundle_closed(algebroid, subspace, name="S"):
    """Checks that the Dorfman bracket of any two basis sections of
    ``subspace`` (complexified, extended bilinearly) lies in it.
    """
    if subspace.dim != algebroid.rank:
        raise DimensionError("The subspace must live in the algebroid")
    failure = _first_failing_pair(algebroid, subspace)
    yield check("{} is closed under the Dorfman bracket".format(name),
                failure is None, failure)


@collects_checks("direct")
def check_direct(algebroid, gen_metric, acs):
    """The direct criterion: L1, L1+ and L1- are closed under the Dorfman
    bracket and ``L_u0`` preserves the sections of L1-. When these hold the
    bundle L2 is closed too and ``L_u0`` kills F and the generalized metric.
    """
    A = algebroid
    field = A.field
    bundles = direct_eigenbundles(gen_metric, acs)
    yield check("rank L1 = n", bundles.l1.rank == A.dim,
                {"rank": bundles.l1.rank})
    closures = []
    for name, space in [("L1", bundles.l1), ("L1+", bundles.l1_plus),
                        ("L1-", bundles.l1_minus)]:
        failure = _first_failing_pair(A, space)
        closures.append(failure is None)
        yield check("{} is closed under the Dorfman bracket".format(name),
                    failure is None, failure)

    u0 = acs.u0
    failure = None
    for v in bundles.l1_minus.basis:
        residual = bundles.l1_minus.residual(A.bracket(u0, v))
        if not field.is_zero_vector(residual):
            failure = {"section": v, "residual": residual}
            break
    closures.append(failure is None)
    yield check("L_u0 preserves the sections of L1-", failure is None,
                failure)
    if not all(closures):
        return

    l2 = eigenspace(gen_metric.gend @ acs.matrix, field.i)
    failure = _first_failing_pair(A, l2)
    yield check("L2 is closed under the Dorfman bracket", failure is None,
                failure)
    derivative = dorfman_lie_derivative(A, u0, acs.matrix)
    yield check("L_u0 F = 0", derivative.is_zero(), derivative)
    derivative = dorfman_lie_derivative(A, u0, gen_metric.gend)
    yield check("L_u0 G = 0", derivative.is_zero(), derivative)


class _Geometry:
    """The tensors shared by the component tests."""
    def __init__(self, algebroid, components):
        if components.dim != algebroid.dim:
            raise DimensionError("Components and algebroid dimensions differ")
        self.A = algebroid
        self.comps = components
        self.field = algebroid.field
        self.L = algebroid.lie_algebra
        self.n = algebroid.dim
        self.g = components.metric
        self.H = algebroid.H
        self.F = algebroid.F
        self.f_matrix = algebroid.F.as_matrix()
        self.connection = levi_civita(self.L, self.g)
        self.basis = self.L.basis()
        self.labels = ["e{}".format(i + 1) for i in range(self.n)]

    def h_vector(self, x, y):
        """``H(x, y)``: the vector g-dual to ``H(x, y, .)``."""
        return self.g.sharp(self.H.interior(x).interior(y).covector())

    def h_endo(self, x):
        return torsion_endomorphism(self.g, self.H, x)

    def f_covector(self, x):
        return self.f_matrix.T @ x

    def f_vector(self, x):
        """``F(x)``: the vector g-dual to ``F(x, .)``."""
        return self.g.sharp(self.f_covector(x))

    def t10(self, endo):
        return eigenspace(endo, self.field.i)

    def nabla(self, x, y):
        return self.connection.covariant(x, y)

    def preserves(self, connection, subspace):
        field = self.field
        for i, e in enumerate(self.basis):
            op = connection.endomorphism(e)
            for v in subspace.basis:
                residual = subspace.residual(op @ v)
                if not field.is_zero_vector(residual):
                    return {"direction": self.labels[i], "vector": v,
                            "residual": residual}
        return None

    def commutes(self, connection, endo):
        for i, e in enumerate(self.basis):
            op = connection.endomorphism(e)
            residual = op @ endo - endo @ op
            if not residual.is_zero():
                return {"direction": self.labels[i], "residual": residual}
        return None

    def vector_identity(self, lhs, rhs):
        """Checks ``lhs(e_i) == rhs(e_i)`` for every basis vector."""
        field = self.field
        for i, e in enumerate(self.basis):
            residual = field.sub(lhs(e), rhs(e))
            if not field.is_zero_vector(residual):
                return {"direction": self.labels[i], "residual": residual}
        return None

    def form_vanishes(self, form, subspace, prefix=()):
        """Checks that ``form(*prefix, ...)`` vanishes on the exterior power
        of ``subspace``.
        """
        field = self.field
        degree = form.degree - len(prefix)
        for vectors in combinations(subspace.basis, degree):
            value = form(*(tuple(prefix) + vectors))
            if not field.is_zero(value):
                return {"vectors": list(vectors), "value": value}
        return None

    def interior_vanishes(self, form, x):
        value = form.interior(x)
        return None if value.is_zero() else {"value": value}


def torsion_endomorphism(metric, H, x):
    """The endomorphism ``H(x): Y -> H(x, Y)``, raised with the metric."""
    field = metric.field
    form = H.interior(x)
    return Matrix.from_columns(field, (
        metric.sharp(form.interior(e).covector())
        for e in (field.unit(metric.dim, k) for k in range(metric.dim))),
        metric.dim)


def minus_connection(lie_algebra, metric, H, connection=None):
    """``nabla + H/2``, the connection that must preserve J-."""
    connection = connection or levi_civita(lie_algebra, metric)
    half = metric.field.half
    return connection.shifted(
        torsion_endomorphism(metric, H, e).scale(half)
        for e in lie_algebra.basis())


def _minus_connection(geometry):
    return minus_connection(geometry.L, geometry.g, geometry.H,
                            geometry.connection)


@collects_checks("components-odd")
def check_odd(algebroid, components):
    """The component criterion for odd n, with
    ``nabla-_X = nabla_X + H(X)/2`` and
    ``nabla+_X = nabla_X - H(X)/2 - J+F(X) (x) X+``.
    """
    if not isinstance(components, ComponentsOdd):
        raise DimensionError("check_odd needs odd components")
    geo = _Geometry(algebroid, components)
    field = geo.field
    half = field.half
    c = components
    x_plus, x_minus = c.x_plus, c.x_minus
    j_plus, j_minus = c.j_plus, c.j_minus
    g = geo.g

    minus = _minus_connection(geo)
    plus = geo.connection.shifted(
        geo.h_endo(e).scale(-half) -
        Matrix.outer(field, x_plus, g.flat(j_plus @ geo.f_vector(e)))
        for e in geo.basis)
    t_plus, t_minus = geo.t10(j_plus), geo.t10(j_minus)

    failure = geo.preserves(plus, t_plus)
    yield check("nabla+ preserves T10(J+)", failure is None, failure)
    failure = geo.preserves(minus, t_minus)
    yield check("nabla- preserves T10(J-)", failure is None, failure)
    failure = geo.vector_identity(
        lambda e: minus.covariant(e, x_minus), lambda e: field.zeros(geo.n))
    yield check("nabla-_X X- = 0", failure is None, failure)
    failure = geo.vector_identity(
        lambda e: plus.covariant(e, x_plus),
        lambda e: field.neg(j_plus @ geo.f_vector(e)))
    yield check("nabla+_X X+ = -J+ F(X)", failure is None, failure)

    H, F = geo.H, geo.F
    failure = geo.form_vanishes(H, t_plus)
    yield check("H = 0 on T10(J+)", failure is None, failure)
    failure = geo.form_vanishes(H, t_minus)
    yield check("H = 0 on T10(J-)", failure is None, failure)
    relation = H.interior(x_plus) - F.scale(field.i)
    failure = geo.form_vanishes(relation, t_plus)
    yield check("i_X+ H = i F on T10(J+)", failure is None, failure)
    failure = geo.form_vanishes(H, t_minus, (x_minus,))
    yield check("i_X- H = 0 on T10(J-)", failure is None, failure)
    failure = geo.form_vanishes(F, t_minus)
    yield check("F = 0 on T10(J-)", failure is None, failure)
    failure = geo.interior_vanishes(F, x_minus)
    yield check("i_X- F = 0", failure is None, failure)
    yield {"g(X+, X-)": c.mixed_product()}


def _require_non_null(components):
    if components.is_null():
        raise InadmissibleParameters(NON_NULL_MESSAGE)


@collects_checks("components-even")
def check_even(algebroid, components):
    """The component criterion for even n and non-null X+-, with
    ``D-_X = nabla_X + H(X)/2`` and::

        D+_X = nabla_X - H(X)/2 + c/(1 - c^2) F(X) (x) X+
               - 1/(1 - c^2) J+F(X) (x) X-
    """
    if not isinstance(components, ComponentsEven):
        raise DimensionError("check_even needs even components")
    _require_non_null(components)
    geo = _Geometry(algebroid, components)
    field = geo.field
    half = field.half
    comps = components
    c = comps.c_plus
    x_plus, x_minus = comps.x_plus, comps.x_minus
    j_plus, j_minus = comps.j_plus, comps.j_minus
    g = geo.g
    inverse_norm = field.div(field.one, field.one - c * c)

    minus = _minus_connection(geo)
    plus = geo.connection.shifted(
        geo.h_endo(e).scale(-half) +
        Matrix.outer(field, x_plus, geo.f_covector(e)).scale(
            c * inverse_norm) -
        Matrix.outer(field, x_minus, g.flat(j_plus @ geo.f_vector(e))).scale(
            inverse_norm)
        for e in geo.basis)
    t_plus, t_minus = geo.t10(j_plus), geo.t10(j_minus)

    failure = geo.preserves(plus, t_plus)
    yield check("D+ preserves T10(J+)", failure is None, failure)
    failure = geo.preserves(minus, t_minus)
    yield check("D- preserves T10(J-)", failure is None, failure)
    commutator = geo.L.bracket(x_plus, x_minus)
    yield check("[X+, X-] = 0", field.is_zero_vector(commutator),
                commutator)
    failure = geo.vector_identity(
        lambda e: geo.nabla(e, x_plus),
        lambda e: field.add(field.scale(-half, geo.h_vector(x_plus, e)),
                            field.scale(c, geo.f_vector(e))))
    yield check("nabla_X X+ = -H(X+, X)/2 + c+ F(X)", failure is None,
                failure)
    failure = geo.vector_identity(
        lambda e: geo.nabla(e, x_minus),
        lambda e: field.sub(field.scale(-half, geo.h_vector(x_minus, e)),
                            j_plus @ geo.f_vector(e)))
    yield check("nabla_X X- = -H(X-, X)/2 - J+ F(X)", failure is None,
                failure)

    H, F = geo.H, geo.F
    failure = geo.form_vanishes(F, t_minus)
    yield check("F = 0 on T10(J-)", failure is None, failure)
    failure = geo.form_vanishes(H, t_plus)
    yield check("H = 0 on T10(J+)", failure is None, failure)
    failure = geo.form_vanishes(H, t_minus)
    yield check("H = 0 on T10(J-)", failure is None, failure)
    twisted = field.add(x_plus, field.scale(field.i * c, x_minus))
    failure = geo.form_vanishes(H, t_plus, (twisted,))
    yield check("i_(X+ + i c+ X-) H = 0 on T10(J+)", failure is None,
                failure)
    relation = F + H.interior(x_minus).scale(field.i)
    failure = geo.form_vanishes(relation, t_plus)
    yield check("F = -i i_X- H on T10(J+)", failure is None, failure)
    failure = geo.interior_vanishes(F, x_plus)
    yield check("i_X+ F = dc+ = 0", failure is None, failure)


@collects_checks("reduced-2")
def _check_reduced_2(algebroid, components):
    _require_non_null(components)
    geo = _Geometry(algebroid, components)
    field = geo.field
    comps = components
    c = comps.c_plus
    x_plus, x_minus = comps.x_plus, comps.x_minus
    j_plus, j_minus = comps.j_plus, comps.j_minus
    relations = None
    for eps in (field.one, -field.one):
        if (field.equal_vectors(j_minus @ x_plus,
                                field.scale(-eps, x_minus)) and
                field.equal_vectors(j_minus @ x_minus,
                                    field.scale(eps, x_plus)) and
                j_plus == j_minus.scale(eps * c)):
            relations = eps
    yield check("J- X+ = -eps0 X-, J- X- = eps0 X+, J+ = eps0 c+ J-",
                relations is not None)
    failure = geo.vector_identity(
        lambda e: geo.nabla(e, x_plus),
        lambda e: field.scale(c, geo.f_vector(e)))
    yield check("nabla_X X+ = c+ F(X)", failure is None, failure)
    failure = geo.vector_identity(
        lambda e: geo.nabla(e, x_minus),
        lambda e: field.neg(j_plus @ geo.f_vector(e)))
    yield check("nabla_X X- = -J+ F(X)", failure is None, failure)
    failure = geo.commutes(geo.connection, j_minus)
    yield check("nabla J- = 0", failure is None, failure)
    failure = geo.interior_vanishes(geo.F, x_plus)
    yield check("i_X+ F = dc+ = 0", failure is None, failure)


@collects_checks("reduced-3")
def _check_reduced_3(algebroid, components):
    geo = _Geometry(algebroid, components)
    field = geo.field
    half = field.half
    comps = components
    failure = geo.interior_vanishes(geo.F, comps.x_minus)
    yield check("i_X- F = 0", failure is None, failure)
    failure = geo.vector_identity(
        lambda e: geo.nabla(e, comps.x_minus),
        lambda e: field.scale(-half, geo.h_vector(e, comps.x_minus)))
    yield check("nabla_X X- = -H(X, X-)/2", failure is None, failure)
    failure = geo.vector_identity(
        lambda e: geo.nabla(e, comps.x_plus),
        lambda e: field.sub(
            field.scale(-half, geo.h_vector(comps.x_plus, e)),
            comps.j_plus @ geo.f_vector(e)))
    yield check("nabla_X X+ = -H(X+, X)/2 - J+ F(X)", failure is None,
                failure)


@collects_checks("reduced-4")
def _check_reduced_4(algebroid, components):
    _require_non_null(components)
    geo = _Geometry(algebroid, components)
    field = geo.field
    half = field.half
    comps = components
    c = comps.c_plus
    x_plus, x_minus = comps.x_plus, comps.x_minus
    failure = geo.vector_identity(
        lambda e: geo.nabla(e, x_plus),
        lambda e: field.add(field.scale(-half, geo.h_vector(x_plus, e)),
                            field.scale(c, geo.f_vector(e))))
    yield check("nabla_X X+ = -H(X+, X)/2 + c+ F(X)", failure is None,
                failure)
    failure = geo.vector_identity(
        lambda e: geo.nabla(e, x_minus),
        lambda e: field.sub(field.scale(-half, geo.h_vector(x_minus, e)),
                            comps.j_plus @ geo.f_vector(e)))
    yield check("nabla_X X- = -H(X-, X)/2 - J+ F(X)", failure is None,
                failure)
    failure = geo.commutes(_minus_connection(geo), comps.j_minus)
    yield check("D- preserves J-", failure is None, failure)
    j = comps.j_minus
    type_11 = geo.f_matrix == j.T @ geo.f_matrix @ j
    yield check("F is of type (1,1) for J-", type_11)
    failure = geo.interior_vanishes(geo.F, x_plus)
    yield check("i_X+ F = dc+ = 0", failure is None, failure)
    residual = field.sub(
        geo.h_vector(x_plus, x_minus),
        field.add(field.scale(c, geo.f_vector(x_minus)),
                  comps.j_plus @ geo.f_vector(x_plus)))
    yield check("H(X+, X-) = c+ F(X-) + J+ F(X+)",
                field.is_zero_vector(residual), residual)


def check_reduced(algebroid, components):
    """The reduced criterion for dimensions 2, 3 and 4.

    :raises DimensionError: in other dimensions.
    """
    n = algebroid.dim
    if n == 2:
        return _check_reduced_2(algebroid, components)
    if n == 3:
        return _check_reduced_3(algebroid, components)
    if n == 4:
        return _check_reduced_4(algebroid, components)
    raise DimensionError("No reduced test in dimension {}".format(n))


def _is_classical(components):
    field = components.field
    return (isinstance(components, ComponentsEven) and
            field.is_zero_vector(components.x_plus) and
            field.is_zero_vector(components.x_minus))


def check_components(algebroid, components):
    if isinstance(components, ComponentsOdd):
        return check_odd(algebroid, components)
    if _is_classical(components):
        return classical_reduction_check(algebroid, components)
    return check_even(algebroid, components)


@collects_checks("kahler")
def check_kahler(algebroid, components, via=VIA_BOTH, reduced=False):
    """Decides whether the structure with the given components is
    pseudo-Kahler, directly, from the components, or both (in which case
    the two verdicts must agree). With ``reduced`` the dimension 2, 3 or 4
    test is run as well and must agree.
    """
    if via not in (VIA_DIRECT, VIA_COMPONENTS, VIA_BOTH):
        raise ValueError("Unknown method: {!r}".format(via))
    if (isinstance(components, ComponentsEven) and components.is_null() and
            not _is_classical(components)):
        raise InadmissibleParameters(NON_NULL_MESSAGE)
    log = logger.getChild("integrability")
    verdicts = {}
    if via in (VIA_DIRECT, VIA_BOTH):
        gen_metric = GenMetric(components.metric)
        acs = assemble(gen_metric, components)
        report = check_direct(algebroid, gen_metric, acs)
        verdicts["direct"] = report.passed
        yield report
    if via in (VIA_COMPONENTS, VIA_BOTH):
        report = check_components(algebroid, components)
        verdicts["components"] = report.passed
        yield report
    if reduced and not _is_classical(components):
        report = check_reduced(algebroid, components)
        verdicts["reduced"] = report.passed
        yield report
    log.debug("Verdicts: %r", verdicts)
    if len(verdicts) > 1:
        agree = len(set(verdicts.values())) == 1
        yield check("the verdicts agree", agree, verdicts)
    yield {"verdicts": verdicts}


@collects_checks("side-conditions")
def side_conditions(algebroid, components):
    """Consequences of integrability. Odd n: X- is Killing, commutes with X+
    and preserves J+-. Even n: X+ is Killing, commutes with X-, the exchange
    relation holds and J- is integrable.
    """
    A = algebroid
    field = A.field
    L = A.lie_algebra
    comps = components
    g = comps.metric
    connection = levi_civita(L, g)
    killing = killing_fields(L, g, connection)
    commutator = L.bracket(comps.x_plus, comps.x_minus)
    if isinstance(comps, ComponentsOdd):
        yield check("X- is Killing", killing.contains(comps.x_minus))
        yield check("[X+, X-] = 0", field.is_zero_vector(commutator),
                    commutator)
        for name, j in [("J+", comps.j_plus), ("J-", comps.j_minus)]:
            derivative = lie_derivative_endo(L, comps.x_minus, j,
                                             connection)
            yield check("L_X- {} = 0".format(name), derivative.is_zero(),
                        derivative)
        return
    yield check("X+ is Killing", killing.contains(comps.x_plus))
    yield check("[X+, X-] = 0", field.is_zero_vector(commutator),
                commutator)
    yield exchange_check(algebroid, comps)
    yield nijenhuis(L, comps.j_minus)


@collects_checks("exchange")
def exchange_check(algebroid, components):
    """Checks that, given the covariant derivative formulas for X+-,
    ``[X+, X-] = 0`` holds exactly when
    ``H(X+, X-) = c+ F(X-) + J+ F(X+)``.
    """
    if not isinstance(components, ComponentsEven):
        raise DimensionError("The exchange relation needs even components")
    geo = _Geometry(algebroid, components)
    field = geo.field
    half = field.half
    comps = components
    c = comps.c_plus
    x_plus, x_minus = comps.x_plus, comps.x_minus
    premises = (
        geo.vector_identity(
            lambda e: geo.nabla(e, x_plus),
            lambda e: field.add(field.scale(-half, geo.h_vector(x_plus, e)),
                                field.scale(c, geo.f_vector(e)))) is None and
        geo.vector_identity(
            lambda e: geo.nabla(e, x_minus),
            lambda e: field.sub(field.scale(-half,
                                            geo.h_vector(x_minus, e)),
                                comps.j_plus @ geo.f_vector(e))) is None)
    yield check("covariant derivatives of X+- are given by H and F",
                premises)
    commute = field.is_zero_vector(geo.L.bracket(x_plus, x_minus))
    residual = field.sub(
        geo.h_vector(x_plus, x_minus),
        field.add(field.scale(c, geo.f_vector(x_minus)),
                  comps.j_plus @ geo.f_vector(x_plus)))
    relation = field.is_zero_vector(residual)
    yield check("[X+, X-] = 0 iff H(X+, X-) = c+ F(X-) + J+ F(X+)",
                commute == relation,
                {"commute": commute, "relation": relation})
    yield {"commute": commute, "relation": relation}


@collects_checks("classical")
def classical_reduction_check(algebroid, components):
    """The test for even n with ``X+ = X- = 0``: F vanishes, J+- are
    integrable and ``nabla +- H/2`` preserves ``J-+``.
    """
    if not _is_classical(components):
        raise DimensionError("The classical test needs X+ = X- = 0")
    geo = _Geometry(algebroid, components)
    half = geo.field.half
    yield check("F = 0", geo.F.is_zero(), geo.F)
    yield nijenhuis(geo.L, components.j_plus).prefixed("J+")[0]
    yield nijenhuis(geo.L, components.j_minus).prefixed("J-")[0]
    failure = geo.commutes(_minus_connection(geo), components.j_minus)
    yield check("nabla + H/2 preserves J-", failure is None, failure)
    plus = geo.connection.shifted(
        geo.h_endo(e).scale(-half) for e in geo.basis)
    failure = geo.commutes(plus, components.j_plus)
    yield check("nabla - H/2 preserves J+", failure is None, failure)


def rescale(algebroid, components, factor=None, to_unit=False):
    """Rescales a structure.

    For odd n and ``factor = l``: ``g -> l^2 g``, ``X+- -> X+- / l``,
    ``H -> l^2 H``, ``F -> l F``.

    For even n with ``to_unit``: requires ``F = 0`` and
    ``c+ not in {-1, 0, 1}``; with ``e = sign(1 - c+^2)``, ``g -> e g``,
    ``X+- -> X+- / |1 - c+^2|^(1/2)``, ``c+ -> 0``, J+ is cut off on
    ``span{X+, X-}`` and ``H -> e H``.

    :returns: ``(algebroid, components)``
    :raises InadmissibleParameters: for ``factor = 0`` or inadmissible c+.
    """
    field = algebroid.field
    if (factor is None) == (not to_unit):
        raise ValueError("Pass exactly one of factor and to_unit")
    if factor is not None:
        if not isinstance(components, ComponentsOdd):
            raise DimensionError("Rescaling by a factor needs odd n")
        factor = field.convert(factor)
        if field.is_zero(factor) or not field.is_real(factor):
            raise InadmissibleParameters("The factor must be a nonzero real")
        inverse = field.div(field.one, factor)
        metric = PseudoMetric(
            field, components.metric.matrix.scale(factor * factor))
        rescaled = ComponentsOdd(
            metric, components.j_plus, components.j_minus,
            field.scale(inverse, components.x_plus),
            field.scale(inverse, components.x_minus))
        target = BnAlgebroid(algebroid.lie_algebra,
                             algebroid.H.scale(factor * factor),
                             algebroid.F.scale(factor))
        return target, rescaled

    if not isinstance(components, ComponentsEven):
        raise DimensionError("Rescaling to unit vectors needs even n")
    c = components.c_plus
    if (field.is_zero(c) or components.is_null()):
        raise InadmissibleParameters("c+ must not be -1, 0 or 1")
    if not algebroid.F.is_zero():
        raise InadmissibleParameters("Rescaling to unit vectors needs F = 0")
    norm = field.one - c * c
    sign = field.fraction(field.sign(norm))
    root = field.sqrt(sign * norm)
    inverse = field.div(field.one, root)
    g = components.metric
    projector = (
        Matrix.outer(field, components.x_plus, g.flat(components.x_plus)) +
        Matrix.outer(field, components.x_minus, g.flat(components.x_minus))
    ).scale(field.div(field.one, norm))
    n = components.dim
    j_plus = components.j_plus @ (Matrix.identity(field, n) - projector)
    metric = PseudoMetric(field, g.matrix.scale(sign))
    rescaled = ComponentsEven(
        metric, j_plus, components.j_minus,
        field.scale(inverse, components.x_plus),
        field.scale(inverse, components.x_minus), field.zero)
    target = BnAlgebroid(algebroid.lie_algebra, algebroid.H.scale(sign),
                         KForm.zero(field, n, 2))
    return target, rescaled
