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

"""The known families of pseudo-Kahler structures on three- and
four-dimensional Lie groups (and the abelian plane), plus the searches that
reproduce their classification on rational parameter grids.
"""

from .courant import BnAlgebroid, check_axioms
from .decorators import cached_attr
from .exactfield import Matrix, get_field, kernel, parse_rational
from .exactfield import solve_affine
from .integrability import check_even, check_kahler
from .integrability import minus_connection, side_conditions
from .liealg import KForm, LieAlgebra, PseudoMetric, ce_differential
from .liealg import is_derivation, killing_fields, levi_civita
from .liealg import unimodular_data
from .reports import check, collects_checks
from .structures import ComponentsEven, ComponentsOdd
from .structures import complete_j_plus, complex_structure_around
from .utils import DimensionError, InadmissibleParameters, InvariantError
from .utils import logger, run_grid
from collections import namedtuple
from fractions import Fraction
from itertools import product
import random

__all__ = ["DEFAULT_GRID", "DEFAULT_DIM3_GRID", "CLASSES", "Slot",
           "CatalogEntry", "Instance", "catalog", "get_entry",
           "verify_entry", "parse_grid", "Dim3Solution", "search_dim3",
           "search_dim3_unimodular", "search_dim3_nonunimodular",
           "unimodular_survey", "AdaptedPoint", "adapted_j_minus",
           "point_class", "generic_report", "Extension", "extend_point",
           "extension_expected", "in_extended_family", "point_report",
           "class_points", "PointResult", "solve_classes_dim4",
           "specialized_vs_generic", "random_adapted_point"]

DEFAULT_GRID = "-3..3/1,2,3,5"
DEFAULT_DIM3_GRID = "-2..2/1"
CLASSES = tuple(range(1, 9))
NAMES = ("u", "e1", "e2", "e3")

log = logger.getChild("classify")
F = Fraction


def parse_grid(text):
    """Parses a grid of rational values.

    ``"p..q/d1,d2,..."`` denotes every ``n/d`` with ``p <= n <= q`` and
    ``d`` among the denominators (``"p..q"`` alone uses denominator 1);
    a plain comma-separated list such as ``"1/2,3,-1"`` is taken as is.

    :returns: The distinct values in increasing order.
    :rtype: `tuple` of `fractions.Fraction`
    :raises ValueError: if the text is malformed.
    """
    text = text.strip()
    if not text:
        raise ValueError("Empty grid")
    if ".." not in text:
        values = {parse_rational(v) for v in text.split(",") if v.strip()}
        if not values:
            raise ValueError("Empty grid: {!r}".format(text))
        return tuple(sorted(values))
    numerators, _, denominators = text.partition("/")
    low, _, high = numerators.partition("..")
    low, high = int(low), int(high)
    if low > high:
        raise ValueError("Empty numerator range: {!r}".format(text))
    denominators = [int(d) for d in denominators.split(",")] \
        if denominators.strip() else [1]
    if any(d <= 0 for d in denominators):
        raise ValueError("Denominators must be positive: {!r}".format(text))
    return tuple(sorted({F(p, d) for p in range(low, high + 1)
                         for d in denominators}))


def _sample(combos, build, limit=None, seed=0):
    """Builds points from ``combos``, skipping inadmissible ones. With a
    ``limit`` the combinations are visited in a seeded random order and the
    chosen points are returned in their original order.
    """
    combos = list(combos)
    order = list(range(len(combos)))
    if limit is not None:
        random.Random(seed).shuffle(order)
    chosen = []
    for index in order:
        if limit is not None and len(chosen) >= limit:
            break
        try:
            chosen.append((index, build(combos[index])))
        except InadmissibleParameters as e:
            log.debug("Skipping %r: %s", combos[index], e)
    chosen.sort(key=lambda item: item[0])
    return [point for _, point in chosen]


def _rotation(field, t, hyperbolic=False):
    """A rational point ``(x, y)`` on ``x^2 + y^2 = 1`` (or on
    ``x^2 - y^2 = 1`` when ``hyperbolic``), parametrized by ``t``.
    """
    t = field.convert(t)
    tt = t * t
    denominator = field.one - tt if hyperbolic else field.one + tt
    if field.is_zero(denominator):
        raise InadmissibleParameters("t^2 = 1 has no point on the hyperbola")
    numerator = field.one + tt if hyperbolic else field.one - tt
    return (field.div(numerator, denominator),
            field.div(t + t, denominator))


def _norm_pair(field, s1, s2, norm, t):
    """A rational ``(x, y)`` with ``s1 x^2 + s2 y^2 = norm``."""
    norm = field.convert(norm)
    if field.is_zero(norm):
        raise InadmissibleParameters("The prescribed norm vanishes")
    if s1 == s2:
        if field.sign(norm) != s1:
            raise InadmissibleParameters(
                "No vector of norm {} in a definite plane of sign {}".format(
                    field.format(norm), s1))
        root = field.sqrt(field.convert(s1) * norm)
        x, y = _rotation(field, t)
    else:
        x, y = _rotation(field, t, hyperbolic=True)
        if field.sign(norm) == s1:
            root = field.sqrt(field.convert(s1) * norm)
        else:
            root = field.sqrt(field.convert(s2) * norm)
            x, y = y, x
    return root * x, root * y


def _odd_components(metric, x_plus, x_minus, orient_plus=1, orient_minus=1):
    return ComponentsOdd(
        metric, complex_structure_around(metric, x_plus, orient_plus),
        complex_structure_around(metric, x_minus, orient_minus),
        x_plus, x_minus)


def _signs(*values):
    for value in values:
        if value not in (1, -1):
            raise InadmissibleParameters("Signs must be 1 or -1, not {!r}"
                                         .format(value))


def _nonzero(field, name, value):
    value = field.convert(value)
    if field.is_zero(value):
        raise InadmissibleParameters("{} must be nonzero".format(name))
    return value


Slot = namedtuple("Slot", ["name", "values"])
Slot.__doc__ = """A parameter of a catalog family and the sample values
used when the family is verified. A value may be a dict, which sets several
parameters at once."""

Instance = namedtuple("Instance", ["entry", "parameters", "algebroid",
                                   "components"])


class CatalogEntry:
    """A family of pseudo-Kahler structures with H = F = 0.

    :param str name: The catalog name, e.g. ``"DIM3-ISO2"``.
    :param str parity: ``"odd"`` or ``"even"``.
    :param slots: The `Slot` objects.
    :param generator: ``generator(field, **parameters)`` returns
      ``(algebroid, components)`` or raises `InadmissibleParameters`.
    :param str provenance: Where the family comes from.
    """
    def __init__(self, name, parity, slots, generator, provenance,
                 notes=None):
        self.name = name
        self.parity = parity
        self.slots = tuple(slots)
        self.generator = generator
        self.provenance = provenance
        self.notes = notes

    def generate(self, field=None, **parameters):
        field = field or get_field()
        algebroid, components = self.generator(field, **parameters)
        return Instance(self, dict(parameters), algebroid, components)

    def combinations(self):
        for values in product(*(slot.values for slot in self.slots)):
            parameters = {}
            for slot, value in zip(self.slots, values):
                if isinstance(value, dict):
                    parameters.update(value)
                else:
                    parameters[slot.name] = value
            yield parameters

    def points(self, limit=None, seed=0, field=None):
        """The admissible parameter choices among the slot values.

        :param int limit: At most this many, chosen with a seeded shuffle.
        """
        field = field or get_field()

        def build(parameters):
            self.generator(field, **parameters)
            return parameters
        return _sample(self.combinations(), build, limit, seed)

    def to_json(self):
        def value_json(value):
            if isinstance(value, dict):
                return {k: value_json(v) for k, v in value.items()}
            return str(value)
        return {
            "name": self.name,
            "parity": self.parity,
            "slots": [{"name": s.name,
                       "values": [value_json(v) for v in s.values]}
                      for s in self.slots],
            "provenance": self.provenance,
            "notes": self.notes,
        }

    def __repr__(self):
        return "<CatalogEntry {}>".format(self.name)


def _plane_rotation(field, eps0):
    # J v1 = eps0 v2, J v2 = -eps0 v1
    return Matrix(field, [[0, -eps0], [eps0, 0]])


def _dim2_abelian(field, y, eps, eps0, eps_plus):
    _signs(eps, eps0, eps_plus)
    y = _nonzero(field, "y", y)
    radicand = field.one - field.convert(eps) * y * y
    if field.sign(radicand) <= 0:
        raise InadmissibleParameters(
            "eps y^2 must be less than 1; eps y^2 = 1 is the DIM2-ABELIAN-"
            "UNIT family")
    c = field.convert(eps_plus) * field.sqrt(radicand)
    metric = PseudoMetric.diag(field, [eps, eps])
    j_minus = _plane_rotation(field, eps0)
    components = ComponentsEven(
        metric, j_minus.scale(field.convert(eps0) * c), j_minus,
        (field.zero, y), (y, field.zero), c)
    return BnAlgebroid(LieAlgebra.abelian(field, 2)), components


def _dim2_unit(field, t, eps0, sign):
    _signs(eps0, sign)
    x, y = _rotation(field, t)
    x_plus = field.scale(field.convert(sign), (x, y))
    j_minus = _plane_rotation(field, eps0)
    x_minus = field.scale(-field.convert(eps0), j_minus @ x_plus)
    components = ComponentsEven(
        PseudoMetric.diag(field, [1, 1]), Matrix.zeros(field, 2), j_minus,
        x_plus, x_minus, 0)
    return BnAlgebroid(LieAlgebra.abelian(field, 2)), components


def _iso(field, lam, eps1, eps3, sign, orient_plus, orient_minus):
    _signs(eps1, eps3, sign, orient_plus, orient_minus)
    lam = _nonzero(field, "lambda", lam)
    L = LieAlgebra.from_brackets(field, 3, {
        (0, 1): {2: field.convert(eps3) * lam},
        (1, 2): {0: field.convert(eps1) * lam},
    })
    metric = PseudoMetric.diag(field, [eps1, 1, eps3])
    x_minus = field.unit(3, 1)
    x_plus = field.scale(field.convert(sign), x_minus)
    return BnAlgebroid(L), _odd_components(metric, x_plus, x_minus,
                                           orient_plus, orient_minus)


def _dim3_iso2(field, lam, eps, sign, orient_plus, orient_minus):
    return _iso(field, lam, eps, eps, sign, orient_plus, orient_minus)


def _dim3_iso11(field, lam, eps1, sign, orient_plus, orient_minus):
    return _iso(field, lam, eps1, -eps1, sign, orient_plus, orient_minus)


def _dim3_abelian(field, eps2, eps3, t, sign, orient_plus, orient_minus):
    _signs(eps2, eps3, sign)
    metric = PseudoMetric.diag(field, [1, eps2, eps3])
    x, y = _rotation(field, t, hyperbolic=eps2 < 0)
    x_plus = field.scale(field.convert(sign), (x, y, field.zero))
    return BnAlgebroid(LieAlgebra.abelian(field, 3)), _odd_components(
        metric, x_plus, field.unit(3, 0), orient_plus, orient_minus)


def _dim3_rxsol2(field, delta, eps, eps_prime, sign, orient_plus,
                 orient_minus):
    _signs(eps, eps_prime, sign)
    delta = _nonzero(field, "delta", delta)
    L = LieAlgebra.from_brackets(field, 3, {(0, 1): {1: 1}})
    metric = PseudoMetric.diag(field, [
        field.div(field.convert(eps), delta * delta), eps_prime, 1])
    x_minus = field.unit(3, 2)
    x_plus = field.scale(field.convert(sign), x_minus)
    return BnAlgebroid(L), _odd_components(metric, x_plus, x_minus,
                                           orient_plus, orient_minus)


def _dim3_case2(field, alpha, gamma, eps1, eps2, eps3, sign, orient_plus,
                orient_minus):
    _signs(eps1, eps2, eps3, sign)
    alpha = _nonzero(field, "alpha", alpha)
    gamma = _nonzero(field, "gamma", gamma)
    e23 = field.convert(eps2 * eps3)
    L = LieAlgebra.from_brackets(field, 3, {
        (0, 1): {1: alpha, 2: gamma * e23},
        (0, 2): {1: gamma, 2: e23 * field.div(gamma * gamma, alpha)},
    })
    if unimodular_data(L).is_unimodular:
        raise InadmissibleParameters("alpha^2 + eps2 eps3 gamma^2 = 0 makes "
                                     "the algebra unimodular")
    radicand = alpha * alpha * field.convert(eps3) + \
        gamma * gamma * field.convert(eps2)
    if field.sign(radicand) <= 0:
        raise InadmissibleParameters(
            "c^2 (alpha^2 eps3 + gamma^2 eps2) = alpha^2 has no real "
            "solution for this sign pattern")
    c = field.div(alpha, field.sqrt(radicand))
    metric = PseudoMetric.diag(field, [eps1, eps2, eps3])
    x_minus = field.scale(c, (field.zero, -field.div(gamma, alpha),
                              field.one))
    x_plus = field.scale(field.convert(sign), x_minus)
    return BnAlgebroid(L), _odd_components(metric, x_plus, x_minus,
                                           orient_plus, orient_minus)


def adapted_j_minus(field):
    """J- in an adapted basis ``(u, e1, e2, e3)``: ``J- u = e1``,
    ``J- e2 = e3``.
    """
    return Matrix(field, [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1],
                          [0, 0, 1, 0]])


def _adapted_algebra(field, eps1, eps2, lambdas, a):
    l1, l2, l3 = (field.convert(v) for v in lambdas)
    brackets = {
        (1, 2): {3: field.convert(eps2) * l3},
        (2, 3): {1: field.convert(eps1) * l1},
        (3, 1): {2: field.convert(eps2) * l2},
    }
    for i in range(3):
        brackets[(0, i + 1)] = {j + 1: a[i][j] for j in range(3)}
    return LieAlgebra.from_brackets(field, 4, brackets)


def _dim4_adapted(field, lam, beta, eps1, eps2, a, b, c_plus,
                  x_minus_sign=1, j_sign=1, a_minus=None, b_minus=None):
    _signs(eps1, eps2, x_minus_sign, j_sign)
    lam = _nonzero(field, "lambda", lam)
    a = _nonzero(field, "a", a)
    b = field.convert(b)
    beta = field.convert(beta)
    c = field.convert(c_plus)
    norm = field.one - c * c
    if field.is_zero(c) or field.is_zero(norm):
        raise InadmissibleParameters("c+ must not be -1, 0 or 1")
    if a_minus is None or b_minus is None:
        s = field.convert(x_minus_sign)
        a_minus, b_minus = -s * b, s * a
    a_minus, b_minus = field.convert(a_minus), field.convert(b_minus)
    e1 = field.convert(eps1)
    if not (field.equal(e1 * (a * a + b * b), norm) and
            field.equal(e1 * (a_minus * a_minus + b_minus * b_minus), norm)
            and field.is_zero(a * a_minus + b * b_minus)):
        raise InadmissibleParameters(
            "need eps1 (a^2 + b^2) = eps1 (a~^2 + b~^2) = 1 - c+^2 and "
            "a a~ + b b~ = 0")
    zero = field.zero
    L = _adapted_algebra(field, eps1, eps2, (zero, lam, lam), [
        [zero, zero, zero], [zero, zero, beta], [zero, -beta, zero]])
    metric = PseudoMetric.diag(field, [eps1, eps1, eps2, eps2])
    x_plus = (a, b, zero, zero)
    x_minus = (a_minus, b_minus, zero, zero)
    j_plus = complete_j_plus(metric, x_plus, x_minus, c, j_sign)
    return BnAlgebroid(L), ComponentsEven(
        metric, j_plus, adapted_j_minus(field), x_plus, x_minus, c)


SIGNS = (1, -1)


def catalog():
    """The catalog of known families, in a fixed order.

    :rtype: `list` of `CatalogEntry`
    """
    orientations = [Slot("orient_plus", SIGNS), Slot("orient_minus", SIGNS)]
    return [
        CatalogEntry(
            "DIM2-ABELIAN", "even",
            [Slot("y", (F(3, 5), F(4, 5), F(5, 13), F(12, 13), F(-3, 5),
                        F(3, 4), F(4, 3), F(5, 12), F(-3, 4))),
             Slot("eps", SIGNS), Slot("eps0", SIGNS),
             Slot("eps_plus", SIGNS)],
            _dim2_abelian,
            "abelian plane, g = eps Id, X+ = y v2, X- = y v1, "
            "J+ = eps0 c+ J-, c+ = eps_plus (1 - eps y^2)^(1/2)"),
        CatalogEntry(
            "DIM2-ABELIAN-UNIT", "even",
            [Slot("t", (0, F(1, 2), F(1, 3), 2, F(-1, 2), 3, -2)),
             Slot("eps0", SIGNS), Slot("sign", SIGNS)],
            _dim2_unit,
            "abelian plane with parallel unit X+-, c+ = 0 and J+ = 0"),
        CatalogEntry(
            "DIM3-ISO2", "odd",
            [Slot("lam", (1, 2, 3, -1, F(1, 2), -2)), Slot("eps", SIGNS),
             Slot("sign", SIGNS)] + orientations,
            _dim3_iso2,
            "[v1, v2] = eps lam v3, [v2, v3] = eps lam v1, "
            "g = diag(eps, 1, eps), X- = v2, X+ = +-X-"),
        CatalogEntry(
            "DIM3-ISO11", "odd",
            [Slot("lam", (1, 2, -1)), Slot("eps1", SIGNS),
             Slot("sign", SIGNS)] + orientations,
            _dim3_iso11,
            "the iso(2) brackets with eps3 = -eps1",
            "X-^perp is Lorentzian, so J- cannot exist: every point is "
            "rejected"),
        CatalogEntry(
            "DIM3-ABELIAN", "odd",
            [Slot("eps2", SIGNS), Slot("eps3", SIGNS),
             Slot("t", (0, F(1, 2), 2, F(1, 3), F(-1, 2), 3)),
             Slot("sign", SIGNS)] + orientations,
            _dim3_abelian,
            "abelian, g = diag(1, eps2, eps3), X- = v1, X+ a unit vector "
            "in span{v1, v2}",
            "signatures with a Lorentzian complement of X+- are rejected"),
        CatalogEntry(
            "DIM3-RxSOL2", "odd",
            [Slot("delta", (1, 2, 3, -1, F(1, 2), -3)), Slot("eps", SIGNS),
             Slot("eps_prime", SIGNS), Slot("sign", SIGNS)] + orientations,
            _dim3_rxsol2,
            "[w1, w2] = w2, g = diag(eps/delta^2, eps', 1), X- = w3, "
            "X+ = +-X-",
            "eps != eps' is rejected: X-^perp is then Lorentzian"),
        CatalogEntry(
            "DIM3-NONUNIMOD-CASE2", "odd",
            [Slot("alpha_gamma", tuple(
                {"alpha": p, "gamma": q} for p, q in [
                    (3, 4), (4, 3), (-3, 4), (3, -4), (5, 12), (12, 5),
                    (5, 4), (5, 3), (13, 12), (13, 5), (4, 5), (12, 13)])),
             Slot("eps1", SIGNS), Slot("eps2", SIGNS), Slot("eps3", SIGNS),
             Slot("sign", SIGNS)] + orientations,
            _dim3_case2,
            "[v1, v2] = alpha v2 + gamma eps2 eps3 v3, "
            "[v1, v3] = gamma v2 + eps2 eps3 gamma^2/alpha v3, "
            "X- = c (-gamma/alpha v2 + v3), X+ = +-X-",
            "sign patterns with alpha^2 eps3 + gamma^2 eps2 <= 0 admit no "
            "c and are rejected"),
        CatalogEntry(
            "DIM4-ADAPTED", "even",
            [Slot("lam", (1, 2, -1, F(1, 2))), Slot("beta", (0, 1, -1, 2)),
             Slot("eps1", SIGNS), Slot("eps2", SIGNS),
             Slot("x_plus", tuple(
                 {"a": a, "b": b, "c_plus": c} for a, b, c in [
                     (F(3, 5), 0, F(4, 5)), (F(9, 25), F(12, 25), F(4, 5)),
                     (F(4, 5), 0, F(3, 5)), (F(5, 13), 0, F(12, 13)),
                     (F(-3, 5), 0, F(-4, 5)), (F(3, 4), 0, F(5, 4)),
                     (F(4, 3), 0, F(5, 3)), (F(9, 20), F(3, 5), F(5, 4))])),
             Slot("x_minus_sign", SIGNS), Slot("j_sign", SIGNS)],
            _dim4_adapted,
            "[e1, e2] = eps2 lam e3, [e3, e1] = eps2 lam e2, "
            "[u, e2] = beta e3, [u, e3] = -beta e2, X+ = a u + b e1, "
            "X- = a~ u + b~ e1"),
    ]


def get_entry(name):
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(name)


@collects_checks("catalog")
def _verify_instance(algebroid, components):
    yield check_axioms(algebroid)
    reduced = algebroid.dim in (2, 3, 4)
    yield check_kahler(algebroid, components, reduced=reduced)
    yield side_conditions(algebroid, components)


def verify_entry(entry, parameters, field=None):
    """Generates the instance of ``entry`` at ``parameters`` and checks
    the axioms, both integrability criteria (and the reduced test) and the
    side conditions.

    :raises InadmissibleParameters: if the parameters are not admissible.
    :rtype: `Report`
    """
    instance = entry.generate(field, **parameters)
    return _verify_instance(instance.algebroid, instance.components)


Dim3Solution = namedtuple("Dim3Solution", ["algebroid", "components",
                                           "report", "freedom"])
Dim3Solution.__doc__ = """A structure found by `search_dim3`. ``freedom``
is the dimension of the space of (H, F) solving the linear conditions;
the solution with the smallest pivot values is the one returned."""


def _unit_candidates(metric, vectors, both_signs=True):
    field = metric.field
    result = []
    for v in vectors:
        norm = metric.norm(v)
        if not field.is_real(norm) or field.sign(norm) <= 0:
            continue
        try:
            root = field.sqrt(norm)
        except InadmissibleParameters:
            continue
        u = field.scale(field.div(field.one, root), v)
        if field.sign(field.real(field.first_nonzero(u))) < 0:
            u = field.neg(u)
        for w in (u, field.neg(u)) if both_signs else (u,):
            if not any(field.equal_vectors(w, x) for x in result):
                result.append(w)
    return result


def _affine_system(field, residual, nvars):
    """Writes an affine map ``z -> residual(z)`` as ``(M, -residual(0))``
    so that its zeros are the solutions of ``M z = rhs``.
    """
    origin = residual(field.zeros(nvars))
    columns = [field.sub(residual(field.unit(nvars, k)), origin)
               for k in range(nvars)]
    return (Matrix.from_columns(field, columns, len(origin)),
            field.neg(origin))


def _dim3_forms(field, z):
    H = KForm(field, 3, 3, {(0, 1, 2): z[0]})
    F = KForm(field, 3, 2, {(0, 1): z[1], (0, 2): z[2], (1, 2): z[3]})
    return H, F


def _solve_dim3_forms(L, metric, connection, x_plus, x_minus, j_plus):
    """Solves the linear conditions of the three-dimensional test for
    ``(H, F)``: ``i_X- F = 0``, ``nabla_X X- = -H(X, X-)/2``,
    ``nabla_X X+ = -H(X+, X)/2 - J+ F(X)`` and ``dF = 0``.
    """
    field = L.field
    half = field.half
    basis = L.basis()

    def h_vector(H, x, y):
        return metric.sharp(H.interior(x).interior(y).covector())

    def residual(z):
        H, F = _dim3_forms(field, z)
        values = list(F.interior(x_minus).covector())
        for e in basis:
            values.extend(field.add(connection.covariant(e, x_minus),
                                    field.scale(half, h_vector(H, e,
                                                               x_minus))))
            values.extend(field.add(
                field.add(connection.covariant(e, x_plus),
                          field.scale(half, h_vector(H, x_plus, e))),
                j_plus @ metric.sharp(F.interior(e).covector())))
        values.append(ce_differential(L, F).component(0, 1, 2))
        return tuple(values)

    matrix, rhs = _affine_system(field, residual, 4)
    particular, null = solve_affine(matrix, rhs)
    if particular is None:
        return None
    return _dim3_forms(field, particular), null.rank


def search_dim3(lie_algebra, metric, candidates=()):
    """Searches a three-dimensional metric Lie algebra for pseudo-Kahler
    structures. X- runs over the unit Killing fields spanned by rational
    multiples of the Killing basis (and Killing basis vectors), X+ over the
    same vectors, the unit basis vectors and ``candidates`` (both signs).
    For each commuting pair and each orientation of J+, the linear
    conditions are solved for (H, F) and the result is verified with both
    criteria and the reduced test. Candidates failing the verification are
    logged and dropped.

    :rtype: `list` of `Dim3Solution`
    """
    L = lie_algebra
    field = L.field
    if L.dim != 3 or metric.dim != 3:
        raise DimensionError("search_dim3 needs dimension 3")
    connection = levi_civita(L, metric)
    killing = killing_fields(L, metric, connection)
    basis = L.basis()
    killing_vectors = list(killing.basis) + [
        e for e in basis if killing.contains(e)]
    minus = _unit_candidates(metric, killing_vectors, both_signs=False)
    plus = _unit_candidates(metric, killing_vectors + basis +
                            list(candidates))
    log.debug("%d candidates for X-, %d for X+", len(minus), len(plus))
    solutions = []
    for x_minus in minus:
        try:
            j_minus = complex_structure_around(metric, x_minus)
        except InadmissibleParameters:
            continue
        for x_plus in plus:
            if not field.is_zero_vector(L.bracket(x_plus, x_minus)):
                continue
            for orientation in (1, -1):
                try:
                    j_plus = complex_structure_around(metric, x_plus,
                                                      orientation)
                except InadmissibleParameters:
                    break
                solved = _solve_dim3_forms(L, metric, connection, x_plus,
                                           x_minus, j_plus)
                if solved is None:
                    continue
                (H, F), freedom = solved
                algebroid = BnAlgebroid(L, H, F)
                components = ComponentsOdd(metric, j_plus, j_minus, x_plus,
                                           x_minus)
                report = check_kahler(algebroid, components, reduced=True)
                if not report.passed:
                    log.info("Dropping X+ = %s, X- = %s: %s",
                             field.format_vector(x_plus),
                             field.format_vector(x_minus),
                             ", ".join(c.label for c in report.failures()))
                    continue
                solutions.append(Dim3Solution(algebroid, components, report,
                                              freedom))
    return solutions


def _diagonal_unimodular(field, lambdas, eps):
    l1, l2, l3 = (field.convert(v) for v in lambdas)
    e1, e2, e3 = (field.convert(v) for v in eps)
    return LieAlgebra.from_brackets(field, 3, {
        (0, 1): {2: e3 * l3}, (2, 0): {1: e2 * l2}, (1, 2): {0: e1 * l1}})


def search_dim3_unimodular(lambdas, eps, field=None):
    """Runs `search_dim3` on the unimodular algebra with
    ``[v1, v2] = eps3 l3 v3``, ``[v3, v1] = eps2 l2 v2``,
    ``[v2, v3] = eps1 l1 v1`` and ``g = diag(eps)``.
    """
    field = field or get_field()
    _signs(*eps)
    L = _diagonal_unimodular(field, lambdas, eps)
    return search_dim3(L, PseudoMetric.diag(field, eps))


def search_dim3_nonunimodular(alpha, beta, gamma, delta, eps, field=None):
    """Runs `search_dim3` on ``[v1, v2] = alpha v2 + beta v3``,
    ``[v1, v3] = gamma v2 + delta v3`` with ``g = diag(eps)``.

    :raises InadmissibleParameters: if ``alpha + delta = 0`` or if g is
      degenerate on the unimodular kernel.
    """
    field = field or get_field()
    _signs(*eps)
    alpha, beta, gamma, delta = (field.convert(v)
                                 for v in (alpha, beta, gamma, delta))
    if field.is_zero(alpha + delta):
        raise InadmissibleParameters("alpha + delta = 0: the algebra is "
                                     "unimodular")
    L = LieAlgebra.from_brackets(field, 3, {
        (0, 1): {1: alpha, 2: beta}, (0, 2): {1: gamma, 2: delta}})
    metric = PseudoMetric.diag(field, eps)
    vectors = unimodular_data(L).kernel.basis
    restricted = Matrix(field, [[metric.pair(u, v) for v in vectors]
                                for u in vectors])
    if field.is_zero(restricted.det()):
        raise InadmissibleParameters("g is degenerate on the unimodular "
                                     "kernel")
    return search_dim3(L, metric)


def unimodular_survey(grid=DEFAULT_DIM3_GRID, workers=1, field=None):
    """Runs `search_dim3_unimodular` over every ``(l1, l2, l3)`` in the
    cube of ``grid`` and every sign pattern.

    :returns: ``[(lambdas, eps, solutions)]`` in lexicographic order.
    """
    field = field or get_field()
    values = parse_grid(grid) if isinstance(grid, str) else tuple(grid)
    points = [(lambdas, eps)
              for lambdas in product(values, repeat=3)
              for eps in product(SIGNS, repeat=3)]

    def evaluate(point):
        lambdas, eps = point
        return lambdas, eps, search_dim3_unimodular(lambdas, eps, field)
    return run_grid(evaluate, points, workers)


class AdaptedPoint:
    """A point of the four-dimensional adapted system, in the basis
    ``(u, e1, e2, e3)`` with ``g = diag(eps1, eps1, eps2, eps2)``::

        [e1, e2] = eps2 l3 e3, [e2, e3] = eps1 l1 e1, [e3, e1] = eps2 l2 e2,
        [u, e_i] = sum_j a_ij e_j

    Unless given, H is the form for which ``nabla + H/2`` can preserve J-
    (``H_123 = 2 eps2 a22 - l1 + l2 - l3``,
    ``H(u, e1, e2) = -eps2 a12``, ``H(u, e1, e3) = -eps2 a13``,
    ``H(u, e2, e3) = 0``), and F is ``(dX+^flat + i_X+ H) / (2 c+)``.
    """
    def __init__(self, eps, lambdas, a, x_plus, c_plus, h=None, f=None,
                 field=None):
        field = field or get_field()
        self.field = field
        self.eps1, self.eps2 = eps
        _signs(self.eps1, self.eps2)
        self.lambdas = tuple(field.convert(v) for v in lambdas)
        self.a = Matrix(field, a)
        if self.a.shape != (3, 3):
            raise DimensionError("a must be 3x3")
        self.x_plus = field.vector(x_plus)
        if len(self.x_plus) != 4:
            raise DimensionError("X+ must have 4 components")
        self.c_plus = field.convert(c_plus)
        if field.is_zero(self.c_plus):
            raise InadmissibleParameters("c+ must be nonzero")
        self._h = h
        self._f = f

    def parameters(self):
        field = self.field
        return {
            "eps": [self.eps1, self.eps2],
            "lambdas": [field.to_json(v) for v in self.lambdas],
            "a": self.a.to_json(),
            "X_plus": [field.to_json(v) for v in self.x_plus],
            "c_plus": field.to_json(self.c_plus),
        }

    @cached_attr
    def lie_algebra(self):
        a = [[self.a[i, j] for j in range(3)] for i in range(3)]
        return _adapted_algebra(self.field, self.eps1, self.eps2,
                                self.lambdas, a)

    @cached_attr
    def metric(self):
        return PseudoMetric.diag(self.field, [self.eps1, self.eps1,
                                              self.eps2, self.eps2])

    @cached_attr
    def j_minus(self):
        return adapted_j_minus(self.field)

    @cached_attr
    def connection(self):
        return levi_civita(self.lie_algebra, self.metric)

    @cached_attr
    def H(self):
        if self._h is not None:
            return self._h
        field = self.field
        a = self.a
        e2 = field.convert(self.eps2)
        l1, l2, l3 = self.lambdas
        return KForm(field, 4, 3, {
            (1, 2, 3): e2 * (a[1, 1] + a[1, 1]) - l1 + l2 - l3,
            (0, 1, 2): -e2 * a[0, 1],
            (0, 1, 3): -e2 * a[0, 2],
        })

    @cached_attr
    def F(self):
        if self._f is not None:
            return self._f
        field = self.field
        L = self.lie_algebra
        flat = KForm.from_covector(field, self.metric.flat(self.x_plus))
        total = ce_differential(L, flat) + self.H.interior(self.x_plus)
        return total.scale(field.div(field.one, self.c_plus + self.c_plus))

    def norm_matches(self):
        """Whether ``g(X+, X+) = 1 - c+^2``."""
        field = self.field
        return field.equal(self.metric.norm(self.x_plus),
                           field.one - self.c_plus * self.c_plus)

    def __repr__(self):
        return "<AdaptedPoint {}>".format(self.parameters())


def _is_zero(field, *values):
    return all(field.is_zero(v) for v in values)


def point_class(point):
    """The class of an adapted point among the eight families of solutions
    (with X+ Killing, ``nabla + H/2`` preserving J- and F of type (1,1)),
    or ``None``.
    """
    field = point.field
    a = point.a
    l1, l2, l3 = point.lambdas
    e2 = field.convert(point.eps2)
    p, b, c, d = point.x_plus
    eq = field.equal
    if not (_is_zero(field, a[1, 0], a[2, 0]) and eq(a[2, 1], -a[1, 2])):
        return None
    if _is_zero(field, l1, l2, l3) or field.is_zero_vector(point.x_plus):
        return None
    diagonal_zero = _is_zero(field, a[0, 0], a[1, 1], a[2, 2])
    a23 = a[1, 2]
    if not field.is_zero(p):
        if not diagonal_zero:
            return None
        if _is_zero(field, c, d, a[0, 1], a[0, 2]):
            if not field.is_zero(l1) and eq(l2, l3) and not eq(l2, l1):
                return 1
            if not field.is_zero(l1) and eq(l1, l2) and eq(l2, l3):
                return 2
            if (field.is_zero(l1) and eq(l2, l3) and
                    not field.is_zero(l2) and
                    not eq(b, -e2 * field.div(p * a23, l2))):
                return 4
        if (field.is_zero(l1) and eq(l2, l3) and not field.is_zero(l2) and
                eq(a[0, 1], -field.div(d * l2 * e2, p)) and
                eq(a[0, 2], field.div(c * l2 * e2, p)) and
                eq(b, -e2 * field.div(p * a23, l2))):
            return 3
        return None
    if _is_zero(field, c, d) and not field.is_zero(b):
        if not (diagonal_zero and _is_zero(field, a[0, 1], a[0, 2])):
            return None
        if eq(l1, l2) and eq(l2, l3) and not field.is_zero(l1):
            return 5
        if eq(l2, l3) and not eq(l2, l1):
            return 8
        return None
    if _is_zero(field, b, c) and not field.is_zero(d):
        if (_is_zero(field, a23, a[2, 2], l1, l2) and
                not field.is_zero(l3) and eq(a[0, 0], -e2 * l3) and
                eq(a[1, 1], e2 * l3)):
            return 6
        return None
    if _is_zero(field, b, d) and not field.is_zero(c):
        if (_is_zero(field, a[1, 1], a23, l1, l3) and
                not field.is_zero(l2) and eq(a[0, 0], -e2 * l2) and
                eq(a[2, 2], e2 * l2)):
            return 7
    return None


def _subalgebra(point):
    field = point.field
    L = point.lie_algebra
    return LieAlgebra(field, 3, [
        [L.bracket_basis(i, j)[1:] for j in range(1, 4)]
        for i in range(1, 4)])


@collects_checks("adapted")
def generic_report(point):
    """Checks an adapted point against the generic machinery: ``ad_u``
    is a derivation of ``span{e1, e2, e3}``, ``nabla + H/2`` preserves J-,
    X+ is Killing, F is of type (1,1) for J-, ``i_X+ F = 0``, ``dF = 0``
    and ``dH + F^F = 0``.
    """
    L = point.lie_algebra
    yield is_derivation(_subalgebra(point), point.a.T)
    minus = minus_connection(L, point.metric, point.H, point.connection)
    j = point.j_minus
    commutes = all((op @ j - j @ op).is_zero() for op in minus.ops)
    yield check("nabla + H/2 preserves J-", commutes)
    killing = killing_fields(L, point.metric, point.connection)
    yield check("X+ is Killing", killing.contains(point.x_plus))
    f_matrix = point.F.as_matrix()
    yield check("F is of type (1,1) for J-", f_matrix == j.T @ f_matrix @ j)
    interior = point.F.interior(point.x_plus)
    yield check("i_X+ F = 0", interior.is_zero(), interior)
    dF = ce_differential(L, point.F)
    yield check("dF = 0", dF.is_zero(), dF)
    twist = ce_differential(L, point.H) + point.F.wedge(point.F)
    yield check("dH + F^F = 0", twist.is_zero(), twist)


def _x_minus_candidates(point):
    field = point.field
    metric = point.metric
    x_plus = point.x_plus
    norm = metric.norm(x_plus)
    rotated = point.j_minus @ x_plus
    result = [rotated, field.neg(rotated)]
    for v in metric.orthogonal_complement([x_plus]).basis:
        own = metric.norm(v)
        if field.is_zero(own):
            continue
        ratio = field.div(norm, own)
        if not field.is_real(ratio) or field.sign(ratio) <= 0:
            continue
        try:
            scale = field.sqrt(ratio)
        except InadmissibleParameters:
            continue
        for w in (field.scale(scale, v), field.scale(-scale, v)):
            if not any(field.equal_vectors(w, x) for x in result):
                result.append(w)
    return result


Extension = namedtuple("Extension", ["algebroid", "components", "report"])
Extension.__doc__ = """A completion found by `extend_point`, with the
report of `check_kahler` on it (both criteria and the reduced test)."""


def extend_point(point):
    """Looks for X- and J+ completing an adapted point to a pseudo-Kahler
    structure. X- runs over ``+-J- X+`` and rescaled vectors of a basis of
    ``X+^perp``; J+ over both orientations of the complement of
    ``span{X+, X-}``. The first candidate passing the component criterion
    is returned together with the full `check_kahler` report, which also
    runs the direct criterion and requires the verdicts to agree.

    :rtype: `Extension` or ``None``
    """
    field = point.field
    if not point.norm_matches() or not generic_report(point).passed:
        return None
    L = point.lie_algebra
    algebroid = BnAlgebroid(L, point.H, point.F)
    for x_minus in _x_minus_candidates(point):
        if not field.is_zero_vector(L.bracket(point.x_plus, x_minus)):
            continue
        for sign in SIGNS:
            try:
                j_plus = complete_j_plus(point.metric, point.x_plus, x_minus,
                                         point.c_plus, sign)
                components = ComponentsEven(
                    point.metric, j_plus, point.j_minus, point.x_plus,
                    x_minus, point.c_plus)
            except (InvariantError, InadmissibleParameters) as e:
                log.debug("Candidate X- = %r rejected: %s", x_minus, e)
                continue
            if not check_even(algebroid, components).passed:
                continue
            report = check_kahler(algebroid, components, reduced=True)
            return Extension(algebroid, components, report)
    return None


def extension_expected(point, cls):
    """Whether a point of class ``cls`` should extend: class 3 with X+ in
    ``span{u, e1}``, class 4, and class 8 with ``l1 = 0``.
    """
    field = point.field
    if cls == 3:
        return _is_zero(field, point.x_plus[2], point.x_plus[3])
    if cls == 8:
        return field.is_zero(point.lambdas[0])
    return cls == 4


def in_extended_family(point, components):
    """Whether an extended point has the shape of the known family:
    ``l1 = 0``, ``l2 = l3``, ``ad_u`` a rotation of ``span{e2, e3}``,
    X+- in ``span{u, e1}`` and ``H = F = 0``.
    """
    field = point.field
    a = point.a
    l1, l2, l3 = point.lambdas
    rotation = (_is_zero(field, *(a[i, j] for i in range(3) for j in range(3)
                                  if (i, j) not in ((1, 2), (2, 1)))) and
                field.equal(a[2, 1], -a[1, 2]))
    return (field.is_zero(l1) and field.equal(l2, l3) and rotation and
            _is_zero(field, *point.x_plus[2:]) and
            _is_zero(field, *components.x_minus[2:]) and
            point.H.is_zero() and point.F.is_zero())


@collects_checks("adapted-point")
def point_report(point, cls, extension):
    """Collects the generic checks at an adapted point, the identified
    class and whether the extension verdict matches it.
    """
    yield generic_report(point)
    yield check("the point lies in one of the eight classes",
                cls is not None)
    extendable = extension is not None
    expected = cls is not None and extension_expected(point, cls)
    yield check("the extension verdict matches the class",
                extendable == expected,
                {"class": cls, "extendable": extendable})
    if extension is not None:
        yield extension.report
        yield check("the extension belongs to the known family",
                    in_extended_family(point, extension.components))


class PointResult(namedtuple("PointResult", ["parameters", "cls",
                                             "extendable", "report"])):
    """The outcome of `solve_classes_dim4` at one point."""
    __slots__ = ()

    def to_json(self):
        return {
            "parameters": self.parameters,
            "class": self.cls,
            "extendable": self.extendable,
            "report": self.report.to_json(),
        }


def _class_builders(field, eps, c_plus, values):
    eps1, eps2 = eps
    c = field.convert(c_plus)
    norm = field.one - c * c
    nonzero = [v for v in values if v != 0]
    zero = field.zero

    def point(lambdas, a, x_plus):
        return AdaptedPoint(eps, lambdas, a, x_plus, c, field=field)

    def rotation_a(a23):
        return [[0, 0, 0], [0, 0, a23], [0, -a23, 0]]

    def au_be1(t):
        p, b = _norm_pair(field, eps1, eps1, norm, t)
        if field.is_zero(p):
            raise InadmissibleParameters("a must be nonzero")
        return p, b

    def class_1(combo):
        l1, l2, a23, t = combo
        if l1 == 0 or l2 == l1:
            raise InadmissibleParameters("need l1 != 0 and l2 != l1")
        p, b = au_be1(t)
        return point((l1, l2, l2), rotation_a(a23), (p, b, zero, zero))

    def class_2(combo):
        lam, a23, t = combo
        if lam == 0:
            raise InadmissibleParameters("lambda must be nonzero")
        p, b = au_be1(t)
        return point((lam, lam, lam), rotation_a(a23), (p, b, zero, zero))

    def class_3(combo):
        lam, k, t, which = combo
        if lam == 0:
            raise InadmissibleParameters("lambda must be nonzero")
        k = field.convert(k)
        if field.is_zero(k):
            p, y = _norm_pair(field, eps1, eps2, norm, t)
            cc, dd = (y, zero) if which > 0 else (zero, y)
            b = a23 = zero
        else:
            scale = field.sqrt(field.div(field.convert(eps1) * norm,
                                         field.one + k * k))
            p = field.convert(which) * scale
            a23 = k * field.convert(lam)
            b = -field.convert(eps2) * p * k
            cc = dd = zero
        if field.is_zero(p):
            raise InadmissibleParameters("a must be nonzero")
        lam = field.convert(lam)
        e2 = field.convert(eps2)
        a = [[0, -field.div(dd * lam * e2, p), field.div(cc * lam * e2, p)],
             [0, 0, a23], [0, -a23, 0]]
        return point((0, lam, lam), a, (p, b, cc, dd))

    def class_4(combo):
        lam, a23, t = combo
        if lam == 0:
            raise InadmissibleParameters("lambda must be nonzero")
        p, b = au_be1(t)
        if field.equal(b, -field.convert(eps2) * field.div(
                p * field.convert(a23), field.convert(lam))):
            raise InadmissibleParameters("this b belongs to class 3")
        return point((0, lam, lam), rotation_a(a23), (p, b, zero, zero))

    def b_only(sign):
        return field.convert(sign) * field.sqrt(field.convert(eps1) * norm)

    def class_5(combo):
        lam, a23, sign = combo
        if lam == 0:
            raise InadmissibleParameters("lambda must be nonzero")
        return point((lam, lam, lam), rotation_a(a23),
                     (zero, b_only(sign), zero, zero))

    def class_8(combo):
        l1, l2, a23, sign = combo
        if l2 == l1:
            raise InadmissibleParameters("need l2 != l1")
        return point((l1, l2, l2), rotation_a(a23),
                     (zero, b_only(sign), zero, zero))

    def other_only(sign):
        return field.convert(sign) * field.sqrt(field.convert(eps2) * norm)

    def class_6(combo):
        lam, a12, a13, sign = combo
        if lam == 0:
            raise InadmissibleParameters("lambda must be nonzero")
        s = eps2 * lam
        return point((0, 0, lam), [[-s, a12, a13], [0, s, 0], [0, 0, 0]],
                     (zero, zero, zero, other_only(sign)))

    def class_7(combo):
        lam, a12, a13, sign = combo
        if lam == 0:
            raise InadmissibleParameters("lambda must be nonzero")
        s = eps2 * lam
        return point((0, lam, 0), [[-s, a12, a13], [0, 0, 0], [0, 0, s]],
                     (zero, zero, other_only(sign), zero))

    ratios = (0, F(3, 4), F(4, 3), F(-3, 4), F(5, 12), F(12, 5))
    return {
        1: (class_1, product(nonzero, values, values, values)),
        2: (class_2, product(nonzero, values, values)),
        3: (class_3, product(nonzero, ratios, values, SIGNS)),
        4: (class_4, product(nonzero, values, values)),
        5: (class_5, product(nonzero, values, SIGNS)),
        6: (class_6, product(nonzero, values, values, SIGNS)),
        7: (class_7, product(nonzero, values, values, SIGNS)),
        8: (class_8, product(values, values, values, SIGNS)),
    }


def class_points(cls, eps, c_plus, grid=DEFAULT_GRID, limit=10, seed=0,
                 field=None):
    """Adapted points of class ``cls`` with ``g(X+, X+) = 1 - c+^2``,
    drawn from the rational ``grid``.

    :rtype: `list` of `AdaptedPoint`
    """
    field = field or get_field()
    if cls not in CLASSES:
        raise ValueError("No class {!r}".format(cls))
    values = parse_grid(grid) if isinstance(grid, str) else tuple(grid)
    build, combos = _class_builders(field, eps, c_plus, values)[cls]
    return _sample(combos, build, limit, seed + cls)


def _evaluate_point(point):
    cls = point_class(point)
    extension = extend_point(point)
    return PointResult(point.parameters(), cls, extension is not None,
                       point_report(point, cls, extension))


def solve_classes_dim4(eps, c_plus, grid=DEFAULT_GRID, classes=CLASSES,
                       per_class=10, workers=1, field=None):
    """Generates points of each class, checks them against the generic
    system, identifies their class and decides whether X- and J+ extend
    them to a pseudo-Kahler structure.

    :raises InadmissibleParameters: if ``c+`` is -1, 0 or 1.
    :rtype: `list` of `PointResult`, grouped by class
    """
    field = field or get_field()
    c = field.convert(c_plus)
    if field.is_zero(c) or field.equal(c * c, field.one):
        raise InadmissibleParameters("c+ must not be -1, 0 or 1")
    points = []
    for cls in classes:
        found = class_points(cls, eps, c, grid, per_class, field=field)
        log.info("Class %d: %d points", cls, len(found))
        points.extend(found)
    return run_grid(_evaluate_point, points, workers)


@collects_checks("adapted-crosscheck")
def specialized_vs_generic(point):
    """Compares the closed-form adapted-basis conditions with the generic
    computations at ``point``: the closure formula for ``dH + F^F``, the
    three closedness formulas for F, the conditions for ``nabla + H/2`` to
    preserve J-, and the Killing equations.

    :raises InvariantError: if the Killing equations do not apply
      (``a21``, ``a31`` or ``a23 + a32`` nonzero).
    """
    field = point.field
    L = point.lie_algebra
    a = point.a
    H, Fm = point.H, point.F
    e1, e2 = field.convert(point.eps1), field.convert(point.eps2)
    e3 = e2
    l1, l2, l3 = point.lambdas
    eq = field.equal

    def f(i, j=None):
        return Fm.component(0, i) if j is None else Fm.component(i, j)

    def aa(i, j):
        return a[i - 1, j - 1]

    closure = ce_differential(L, H) + Fm.wedge(Fm)
    cyclic = f(1) * f(2, 3) + f(3) * f(1, 2) + f(2) * f(3, 1)
    formula = H.component(1, 2, 3) * a.trace() - cyclic - cyclic
    generic = -closure.component(0, 1, 2, 3)
    yield check("closure formula equals -(dH + F^F)(u, e1, e2, e3)",
                eq(formula, generic), {"formula": formula,
                                       "generic": generic})

    dF = ce_differential(L, Fm)
    residuals = [
        (e1 * l1 * f(1) - f(2, 3) * (aa(2, 2) + aa(3, 3)) -
         f(2, 1) * aa(3, 1) - f(1, 3) * aa(2, 1), (0, 2, 3)),
        (e2 * l2 * f(2) - f(3, 1) * (aa(1, 1) + aa(3, 3)) -
         f(2, 1) * aa(3, 2) - f(3, 2) * aa(1, 2), (0, 3, 1)),
        (e3 * l3 * f(3) - f(1, 2) * (aa(1, 1) + aa(2, 2)) -
         f(3, 2) * aa(1, 3) - f(1, 3) * aa(2, 3), (0, 1, 2)),
    ]
    for k, (value, indices) in enumerate(residuals, 1):
        expected = dF.component(*indices)
        yield check("closedness formula {} equals dF({})".format(
            k, ", ".join(NAMES[i] for i in indices)), eq(value, expected),
            {"formula": value, "generic": expected})
    yield check("dF(e1, e2, e3) = 0", field.is_zero(dF.component(1, 2, 3)))

    specialized = (
        _is_zero(field, aa(2, 1), aa(3, 1), aa(2, 3) + aa(3, 2),
                 H.component(0, 2, 3)) and
        eq(aa(2, 2) - aa(3, 3), e2 * (l3 - l2)) and
        eq(H.component(0, 1, 2), -e2 * aa(1, 2)) and
        eq(H.component(0, 1, 3), -e3 * aa(1, 3)) and
        eq(H.component(1, 2, 3), e2 * (aa(2, 2) + aa(2, 2)) - l1 + l2 - l3))
    minus = minus_connection(L, point.metric, H, point.connection)
    j = point.j_minus
    preserved = all((op @ j - j @ op).is_zero() for op in minus.ops)
    yield check("J- conditions agree with nabla + H/2 preserving J-",
                specialized == preserved,
                {"specialized": specialized, "generic": preserved})

    if not (_is_zero(field, aa(2, 1), aa(3, 1)) and
            eq(aa(3, 2), -aa(2, 3))):
        raise InvariantError("point.a", "the Killing equations need "
                             "a21 = a31 = 0 and a32 = -a23")
    zero = field.zero
    rows = [
        (zero, aa(1, 1), zero, zero),
        (aa(1, 1), zero, zero, zero),
        (aa(2, 2), zero, zero, zero),
        (aa(3, 3), zero, zero, zero),
        (zero, aa(1, 2), aa(2, 2), aa(3, 2)),
        (zero, aa(1, 3), aa(2, 3), aa(3, 3)),
        (e2 * aa(1, 2), zero, zero, l2 - l1),
        (e3 * aa(1, 3), zero, l1 - l3, zero),
        (zero, l3 - l2, zero, zero),
    ]
    specialized = kernel(Matrix(field, rows, 4, False))
    generic = killing_fields(L, point.metric, point.connection)
    yield check("Killing equations agree with killing_fields",
                specialized == generic,
                {"specialized": specialized, "generic": generic})


def _derivation_residual(field, eps, lambdas, extra):
    """The derivation conditions on ``(a11, a12, a13, a22, a23, a33)``
    (with ``a21 = a31 = 0``, ``a32 = -a23``) as an affine residual.
    """
    def matrix(z):
        a11, a12, a13, a22, a23, a33 = z
        return [[a11, a12, a13], [field.zero, a22, a23],
                [field.zero, -a23, a33]]

    def residual(z):
        point = AdaptedPoint(eps, lambdas, matrix(z), (1, 0, 0, 0), 1,
                             field=field)
        L0 = _subalgebra(point)
        D = point.a.T
        values = []
        basis = L0.basis()
        for i in range(3):
            for k in range(i + 1, 3):
                values.extend(field.sub(
                    D @ L0.bracket_basis(i, k),
                    field.add(L0.bracket(D @ basis[i], basis[k]),
                              L0.bracket(basis[i], D @ basis[k]))))
        if extra:
            e2 = field.convert(eps[1])
            values.append(z[3] - z[5] - e2 * (lambdas[2] - lambdas[1]))
        return tuple(values)
    return matrix, residual


def random_adapted_point(rng, solved=False, field=None):
    """A random adapted point with rational entries, ``a21 = a31 = 0``,
    ``a32 = -a23`` and ``ad_u`` a derivation. With ``solved`` the diagonal
    also satisfies ``a22 - a33 = eps2 (l3 - l2)``, so that
    ``nabla + H/2`` preserves J-.

    :param random.Random rng: The source of randomness.
    """
    field = field or get_field()
    while True:
        eps = (rng.choice(SIGNS), rng.choice(SIGNS))
        lambdas = tuple(field.convert(rng.randint(-2, 2)) for _ in range(3))
        if all(field.is_zero(v) for v in lambdas):
            continue
        matrix, residual = _derivation_residual(field, eps, lambdas, solved)
        system, rhs = _affine_system(field, residual, 6)
        particular, null = solve_affine(system, rhs)
        if particular is None:
            continue
        z = particular
        for vector in null.basis:
            z = field.add(z, field.scale(field.convert(rng.randint(-2, 2)),
                                         vector))
        x_plus = [field.convert(F(rng.randint(-3, 3), rng.randint(1, 3)))
                  for _ in range(4)]
        if field.is_zero_vector(x_plus):
            continue
        c_plus = rng.choice((F(1, 2), 2, F(-1, 3), F(3, 5), F(4, 5)))
        return AdaptedPoint(eps, lambdas, matrix(z), x_plus, c_plus,
                            field=field)
