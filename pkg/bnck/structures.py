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

"""Generalized metrics, Bn-generalized almost complex structures and their
classical components.

A generalized metric in standard form is determined by a pseudo-Riemannian
metric g: ``E- = {X - g(X)}`` and ``E+ = E-^perp``. A Bn-generalized almost
complex structure commuting with it is equivalent to component tensors
``(g, J+, J-, X+, X-)`` when n is odd and ``(g, J+, J-, X+, X-, c+)`` when
n is even.
"""

from .courant import gram, join, split, twist_isomorphism
from .decorators import cached_attr, document_attr
from .exactfield import ComplexSubspace, Matrix, eigenspace, intersect
from .exactfield import kernel
from .liealg import KForm, PseudoMetric, cross_product
from .reports import check, collects_checks
from .utils import DimensionError, InadmissibleParameters, InvariantError
from collections import namedtuple

__all__ = ["GenMetric", "ComponentsOdd", "ComponentsEven", "BnACS",
           "Eigenbundles", "components_for", "gend", "assemble", "extract",
           "eigenbundles", "direct_eigenbundles", "closed_form_eigenbundles",
           "admissibility_check", "complex_structure_around",
           "complete_j_plus", "normalize_section", "twisted_e_minus"]

Eigenbundles = namedtuple("Eigenbundles", ["l1", "l1_plus", "l1_minus"])


def normalize_section(field, u):
    """Flips the sign of ``u`` so that its first nonzero coordinate (in
    basis order) is positive.
    """
    first = field.first_nonzero(u)
    if first is None:
        return tuple(u)
    re = field.real(first)
    lead = re if not field.is_zero(re) else field.imag(first)
    return tuple(u) if field.sign(lead) > 0 else field.neg(u)


class GenMetric:
    """A generalized metric in standard form.

    :param PseudoMetric metric: The induced metric g.
    """
    def __init__(self, metric):
        self._metric = metric
        self._field = metric.field

    @classmethod
    def from_twisted(cls, algebroid, metric, b=None, a_form=None):
        """Normalizes the generalized metric with data ``(g, b, A)``, whose
        negative bundle is ``{X - i_X (g - b) - A(X) A + A(X)}``, to standard
        form.

        :returns: ``(gen_metric, twist)`` where ``twist`` maps the twisted
          negative bundle onto the standard one.
        :raises InvariantError: if the image of the twisted negative bundle
          is not ``{X - g(X)}``.
        """
        twist = twist_isomorphism(algebroid, b, a_form)
        gen_metric = cls(metric)
        source = twisted_e_minus(metric, b, a_form)
        image = ComplexSubspace(metric.field, gen_metric.rank, (
            twist.isomorphism @ u for u in source.basis))
        if image != gen_metric.e_minus():
            raise InvariantError(
                "metric", "the twist does not map the negative bundle of "
                "(g, b, A) onto {X - g(X)}")
        return gen_metric, twist

    @document_attr
    def metric(self):
        """The induced pseudo-Riemannian metric.

        :type: `PseudoMetric`
        """

    @document_attr
    def field(self):
        """The field backend."""

    @property
    def dim(self):
        return self.metric.dim

    @property
    def rank(self):
        return 2 * self.dim + 1

    def s(self, x):
        """``s(X) = X - i_X g``, the isomorphism ``TM -> E-``."""
        return join(x, self.field.neg(self.metric.flat(x)), self.field.zero)

    def s_plus(self, x):
        return join(x, self.metric.flat(x), self.field.zero)

    @cached_attr
    def gend(self):
        """The involution that is -1 on E- and +1 on E+.

        :type: `Matrix`
        """
        field = self.field
        n = self.dim
        return Matrix.blocks(field, [
            [Matrix.zeros(field, n), self.metric.inverse,
             Matrix.zeros(field, n, 1)],
            [self.metric.matrix, Matrix.zeros(field, n),
             Matrix.zeros(field, n, 1)],
            [Matrix.zeros(field, 1, n), Matrix.zeros(field, 1, n),
             Matrix.identity(field, 1)],
        ])

    @cached_attr
    def bilinear(self):
        """The matrix of ``G(u, v) = <G^end u, v>``.

        :type: `Matrix`
        """
        return self.gend.T @ gram(self.field, self.dim)

    def e_minus(self):
        return ComplexSubspace(self.field, self.rank, (
            self.s(self.field.unit(self.dim, i)) for i in range(self.dim)))

    def e_plus(self):
        field = self.field
        vectors = [self.s_plus(field.unit(self.dim, i))
                   for i in range(self.dim)]
        vectors.append(field.unit(self.rank, self.rank - 1))
        return ComplexSubspace(field, self.rank, vectors)

    def induced_metric(self):
        """Recovers g as ``g(X, Y) = -<s(X), s(Y)>``."""
        field = self.field
        Q = gram(field, self.dim)
        images = [self.s(field.unit(self.dim, i)) for i in range(self.dim)]
        return PseudoMetric(field, Matrix(field, (
            tuple(-field.dot(u, Q @ v) for v in images) for u in images),
            self.dim, False))

    def __repr__(self):
        return "GenMetric({!r})".format(self.metric)


def gend(gen_metric):
    return gen_metric.gend


def twisted_e_minus(metric, b=None, a_form=None):
    """The negative bundle ``{X - i_X (g - b) - A(X) A + A(X)}`` of the
    generalized metric with data ``(g, b, A)``.

    :rtype: `ComplexSubspace`
    """
    field = metric.field
    n = metric.dim
    b = KForm.zero(field, n, 2) if b is None else b
    a = field.zeros(n) if a_form is None else a_form.covector()
    vectors = []
    for i in range(n):
        x = field.unit(n, i)
        covector = field.sub(b.interior(x).covector(), metric.flat(x))
        covector = field.sub(covector, field.scale(a[i], a))
        vectors.append(join(x, covector, a[i]))
    return ComplexSubspace(field, 2 * n + 1, vectors)


def _vector(field, values, n, path):
    try:
        vector = field.vector(values)
    except (TypeError, ValueError) as e:
        raise InvariantError(path, str(e)) from None
    if len(vector) != n:
        raise InvariantError(path, "expected {} entries".format(n))
    if not field.is_real_vector(vector):
        raise InvariantError(path, "entries must be real")
    return vector


def _endo(field, matrix, n, path):
    if not isinstance(matrix, Matrix):
        try:
            matrix = Matrix(field, matrix)
        except (TypeError, ValueError, DimensionError) as e:
            raise InvariantError(path, str(e)) from None
    if matrix.shape != (n, n):
        raise InvariantError(path, "expected a {0}x{0} matrix".format(n))
    if not matrix.is_real():
        raise InvariantError(path, "entries must be real")
    return matrix


def _first_failing_column(field, matrix):
    for j in range(matrix.ncols):
        if not field.is_zero_vector(matrix.column(j)):
            return j
    return None


class _Components:
    parity = None

    def _require(self, path, condition, message):
        if not condition:
            raise InvariantError(path, message)

    def _require_skew(self, path, endo):
        self._require(path, self.metric.is_skew(endo), "not g-skew")

    @document_attr
    def metric(self):
        """The metric g.

        :type: `PseudoMetric`
        """

    @document_attr
    def j_plus(self):
        """The endomorphism J+.

        :type: `Matrix`
        """

    @document_attr
    def j_minus(self):
        """The endomorphism J-.

        :type: `Matrix`
        """

    @document_attr
    def x_plus(self):
        """The vector X+."""

    @document_attr
    def x_minus(self):
        """The vector X-."""

    @property
    def field(self):
        return self.metric.field

    @property
    def dim(self):
        return self.metric.dim

    def _projector(self, *vectors):
        field = self.field
        result = Matrix.zeros(field, self.dim)
        for x in vectors:
            result = result + Matrix.outer(field, x, self.metric.flat(x))
        return result

    def _to_json(self):
        field = self.field
        return {
            "parity": self.parity,
            "metric": self.metric.to_json(),
            "J_plus": self.j_plus.to_json(),
            "J_minus": self.j_minus.to_json(),
            "X_plus": [field.to_json(a) for a in self.x_plus],
            "X_minus": [field.to_json(a) for a in self.x_minus],
        }


class ComponentsOdd(_Components):
    """The components of a Bn-generalized almost pseudo-Hermitian structure
    in odd dimension n: g-skew ``J+-`` with ``J+- X+- = 0``, unit ``X+-``, and
    ``J+-^2 = -Id + g(., X+-) X+-``.

    The value of ``g(X+, X-)`` is not constrained.

    :raises InvariantError: if a relation fails; the path names the
      offending field.
    """
    parity = "odd"

    def __init__(self, metric, j_plus, j_minus, x_plus, x_minus):
        field = metric.field
        n = metric.dim
        if n % 2 != 1:
            raise DimensionError("Odd components need odd n, not {}".format(
                n))
        self._metric = metric
        self._j_plus = _endo(field, j_plus, n, "structure.J_plus")
        self._j_minus = _endo(field, j_minus, n, "structure.J_minus")
        self._x_plus = _vector(field, x_plus, n, "structure.X_plus")
        self._x_minus = _vector(field, x_minus, n, "structure.X_minus")
        identity = Matrix.identity(field, n)
        for name, j, x in [("plus", self.j_plus, self.x_plus),
                           ("minus", self.j_minus, self.x_minus)]:
            self._require("structure.X_" + name,
                          field.equal(metric.norm(x), field.one),
                          "g(X, X) must be 1")
            self._require_skew("structure.J_" + name, j)
            self._require("structure.J_" + name,
                          field.is_zero_vector(j @ x),
                          "J must annihilate X")
            self._require("structure.J_" + name,
                          j @ j == self._projector(x) - identity,
                          "J^2 must be -Id + g(., X) X")

    @property
    def x_bullet(self):
        """The vector in the last block column of the assembled matrix."""
        return self.x_plus

    def kernel_section(self):
        """``u- = X- - g(X-)``."""
        field = self.field
        return join(self.x_minus, field.neg(self.metric.flat(self.x_minus)),
                    field.zero)

    def normalized(self):
        """Returns the components whose kernel section has positive first
        nonzero coordinate (flipping X- if needed).
        """
        field = self.field
        if normalize_section(field, self.kernel_section()) == \
                self.kernel_section():
            return self
        return ComponentsOdd(self.metric, self.j_plus, self.j_minus,
                             self.x_plus, field.neg(self.x_minus))

    def with_fields(self, **kwargs):
        values = dict(metric=self.metric, j_plus=self.j_plus,
                      j_minus=self.j_minus, x_plus=self.x_plus,
                      x_minus=self.x_minus)
        values.update(kwargs)
        return ComponentsOdd(**values)

    def mixed_product(self):
        return self.metric.pair(self.x_plus, self.x_minus)

    def __eq__(self, other):
        if not isinstance(other, ComponentsOdd):
            return NotImplemented
        field = self.field
        return (self.metric == other.metric and
                self.j_plus == other.j_plus and
                self.j_minus == other.j_minus and
                field.equal_vectors(self.x_plus, other.x_plus) and
                field.equal_vectors(self.x_minus, other.x_minus))

    __hash__ = None

    def to_json(self):
        return self._to_json()

    def __repr__(self):
        return "<ComponentsOdd n={} X+={} X-={}>".format(
            self.dim, self.field.format_vector(self.x_plus),
            self.field.format_vector(self.x_minus))


class ComponentsEven(_Components):
    """The components of a Bn-generalized almost pseudo-Hermitian structure
    in even dimension n: a g-skew complex structure J-, a g-skew J+ with
    ``J+ X+ = -c X-``, ``J+ X- = c X+`` and
    ``J+^2 = -Id + g(., X+) X+ + g(., X-) X-``, and orthogonal X+- with
    ``g(X+-, X+-) = 1 - c^2``.
    """
    parity = "even"

    def __init__(self, metric, j_plus, j_minus, x_plus, x_minus, c_plus):
        field = metric.field
        n = metric.dim
        if n % 2 != 0:
            raise DimensionError("Even components need even n, not {}".format(
                n))
        self._metric = metric
        self._j_plus = _endo(field, j_plus, n, "structure.J_plus")
        self._j_minus = _endo(field, j_minus, n, "structure.J_minus")
        self._x_plus = _vector(field, x_plus, n, "structure.X_plus")
        self._x_minus = _vector(field, x_minus, n, "structure.X_minus")
        try:
            self._c_plus = field.convert(c_plus)
        except (TypeError, ValueError) as e:
            raise InvariantError("structure.c_plus", str(e)) from None
        self._require("structure.c_plus", field.is_real(self.c_plus),
                      "c+ must be real")
        c = self.c_plus
        identity = Matrix.identity(field, n)
        norm = field.one - c * c
        self._require_skew("structure.J_minus", self.j_minus)
        self._require("structure.J_minus",
                      self.j_minus @ self.j_minus == -identity,
                      "J- must be a complex structure")
        self._require_skew("structure.J_plus", self.j_plus)
        self._require("structure.X_plus",
                      field.equal(metric.norm(self.x_plus), norm),
                      "g(X+, X+) must be 1 - c+^2")
        self._require("structure.X_minus",
                      field.equal(metric.norm(self.x_minus), norm),
                      "g(X-, X-) must be 1 - c+^2")
        self._require("structure.X_minus",
                      field.is_zero(metric.pair(self.x_plus, self.x_minus)),
                      "g(X+, X-) must vanish")
        self._require("structure.J_plus", field.equal_vectors(
            self.j_plus @ self.x_plus, field.scale(-c, self.x_minus)),
            "J+ X+ must be -c+ X-")
        self._require("structure.J_plus", field.equal_vectors(
            self.j_plus @ self.x_minus, field.scale(c, self.x_plus)),
            "J+ X- must be c+ X+")
        self._require(
            "structure.J_plus",
            self.j_plus @ self.j_plus ==
            self._projector(self.x_plus, self.x_minus) - identity,
            "J+^2 must be -Id + g(., X+) X+ + g(., X-) X-")

    @document_attr
    def c_plus(self):
        """The constant c+."""

    @property
    def x_bullet(self):
        return self.x_minus

    def is_null(self):
        return self.field.equal(self.c_plus * self.c_plus, self.field.one)

    def kernel_section(self):
        """``u+ = X+ + g(X+) + c+``."""
        return join(self.x_plus, self.metric.flat(self.x_plus), self.c_plus)

    def normalized(self):
        field = self.field
        if normalize_section(field, self.kernel_section()) == \
                self.kernel_section():
            return self
        return ComponentsEven(self.metric, self.j_plus, self.j_minus,
                              field.neg(self.x_plus), self.x_minus,
                              -self.c_plus)

    def with_fields(self, **kwargs):
        values = dict(metric=self.metric, j_plus=self.j_plus,
                      j_minus=self.j_minus, x_plus=self.x_plus,
                      x_minus=self.x_minus, c_plus=self.c_plus)
        values.update(kwargs)
        return ComponentsEven(**values)

    def __eq__(self, other):
        if not isinstance(other, ComponentsEven):
            return NotImplemented
        field = self.field
        return (self.metric == other.metric and
                self.j_plus == other.j_plus and
                self.j_minus == other.j_minus and
                field.equal_vectors(self.x_plus, other.x_plus) and
                field.equal_vectors(self.x_minus, other.x_minus) and
                field.equal(self.c_plus, other.c_plus))

    __hash__ = None

    def to_json(self):
        result = self._to_json()
        result["c_plus"] = self.field.to_json(self.c_plus)
        return result

    def __repr__(self):
        return "<ComponentsEven n={} c+={}>".format(
            self.dim, self.field.format(self.c_plus))


def components_for(metric, j_plus, j_minus, x_plus, x_minus, c_plus=None):
    """Builds `ComponentsOdd` or `ComponentsEven` according to the parity
    of the dimension.
    """
    if metric.dim % 2:
        if c_plus is not None:
            raise InvariantError("structure.c_plus",
                                 "c+ only exists in even dimension")
        return ComponentsOdd(metric, j_plus, j_minus, x_plus, x_minus)
    if c_plus is None:
        raise InvariantError("structure.c_plus",
                             "c+ is required in even dimension")
    return ComponentsEven(metric, j_plus, j_minus, x_plus, x_minus, c_plus)


class BnACS:
    """A Bn-generalized almost complex structure: a skew endomorphism F of
    ``g + g* + R`` with ``F^2 = -Id + (-1)^n <., u0> u0``, ``<u0, u0> =
    (-1)^n`` and ``ker F = span{u0}``.

    :param Matrix matrix: The endomorphism.
    :param u0: The normalized kernel section.
    :param int n: The dimension of the Lie algebra.
    """
    def __init__(self, matrix, u0, n):
        field = matrix.field
        rank = 2 * n + 1
        if matrix.shape != (rank, rank):
            raise DimensionError("F must be {0}x{0}".format(rank))
        u0 = tuple(u0)
        Q = gram(field, n)
        sign = field.one if n % 2 == 0 else -field.one
        if not field.equal(field.dot(u0, Q @ u0), sign):
            raise InvariantError("structure", "<u0, u0> must be (-1)^n")
        if not (matrix.T @ Q + Q @ matrix).is_zero():
            raise InvariantError("structure",
                                 "F is not skew for the scalar product")
        expected = (Matrix.outer(field, u0, Q @ u0).scale(sign) -
                    Matrix.identity(field, rank))
        if not matrix @ matrix == expected:
            raise InvariantError("structure",
                                 "F^2 != -Id + (-1)^n <., u0> u0")
        if matrix.kernel().rank != 1:
            raise InvariantError("structure", "ker F must have rank 1")
        self._matrix = matrix
        self._u0 = u0
        self._n = n

    @classmethod
    def from_matrix(cls, matrix, n):
        """Builds the structure from F alone, normalizing the kernel section
        (which needs a rational square root in exact mode).
        """
        field = matrix.field
        null = matrix.kernel()
        if null.rank != 1:
            raise InvariantError("structure", "ker F must have rank 1")
        u = null.basis[0]
        Q = gram(field, n)
        norm = field.dot(u, Q @ u)
        sign = field.one if n % 2 == 0 else -field.one
        ratio = field.div(sign, norm)
        if not field.is_real(ratio) or field.sign(ratio) <= 0:
            raise InvariantError("structure",
                                 "the kernel of F has the wrong causal type")
        u = field.scale(field.sqrt(ratio), u)
        return cls(matrix, normalize_section(field, u), n)

    @document_attr
    def matrix(self):
        """The endomorphism F.

        :type: `Matrix`
        """

    @document_attr
    def u0(self):
        """The normalized kernel section."""

    @document_attr
    def n(self):
        """The dimension of the Lie algebra.

        :type: `int`
        """

    @property
    def field(self):
        return self.matrix.field

    @property
    def parity(self):
        return "odd" if self.n % 2 else "even"

    def __eq__(self, other):
        if not isinstance(other, BnACS):
            return NotImplemented
        return (self.n == other.n and self.matrix == other.matrix and
                self.field.equal_vectors(self.u0, other.u0))

    __hash__ = None

    def to_json(self):
        return {"matrix": self.matrix.to_json(),
                "u0": [self.field.to_json(a) for a in self.u0]}

    def __repr__(self):
        return "<BnACS n={} u0={}>".format(
            self.n, self.field.format_vector(self.u0))


def assemble(gen_metric, components):
    """Assembles the Bn-generalized almost complex structure of the given
    components. With ``X = X+`` (n odd) or ``X = X-`` (n even)::

        F = [[ (J+ + J-)/2,   (J+ - J-) g^-1 / 2,  X   ],
             [ g (J+ - J-)/2, -(J+ + J-)^T / 2,    g X ],
             [ -(g X)^T / 2,  -X^T / 2,            0   ]]

    :rtype: `BnACS`
    """
    field = gen_metric.field
    g = gen_metric.metric
    if components.metric != g:
        raise InvariantError("structure.metric",
                             "components and generalized metric differ")
    half = field.half
    total = components.j_plus + components.j_minus
    diff = components.j_plus - components.j_minus
    x = components.x_bullet
    gx = g.flat(x)
    column = Matrix.from_columns(field, [x])
    gcolumn = Matrix.from_columns(field, [gx])
    matrix = Matrix.blocks(field, [
        [total.scale(half), (diff @ g.inverse).scale(half), column],
        [(g.matrix @ diff).scale(half), total.T.scale(-half), gcolumn],
        [gcolumn.T.scale(-half), column.T.scale(-half),
         Matrix.zeros(field, 1)],
    ])
    u0 = normalize_section(field, components.kernel_section())
    return BnACS(matrix, u0, gen_metric.dim)


def extract(gen_metric, acs):
    """Recovers the normalized components of ``acs``.

    :raises InvariantError: if ``acs`` does not commute with the
      generalized metric.
    """
    field = gen_metric.field
    n = gen_metric.dim
    g = gen_metric.metric
    F = acs.matrix
    G = gen_metric.gend
    if not G @ F == F @ G:
        raise InvariantError(
            "structure", "F does not commute with the generalized metric")

    def anchored(u):
        return split(F @ u).vector

    basis = [field.unit(n, i) for i in range(n)]
    j_minus = Matrix.from_columns(field, (
        anchored(gen_metric.s(e)) for e in basis), n)
    j_plus = Matrix.from_columns(field, (
        anchored(gen_metric.s_plus(e)) for e in basis), n)
    x_bullet = anchored(field.unit(2 * n + 1, 2 * n))
    u0 = split(acs.u0)
    if n % 2:
        return ComponentsOdd(g, j_plus, j_minus, x_bullet, u0.vector)
    return ComponentsEven(g, j_plus, j_minus, u0.vector, x_bullet,
                          u0.scalar)


def direct_eigenbundles(gen_metric, acs):
    """``L1 = ker(F - i)`` and its intersections with the complexified
    E+ and E-.
    """
    l1 = eigenspace(acs.matrix, acs.field.i)
    return Eigenbundles(l1, intersect(l1, gen_metric.e_plus()),
                        intersect(l1, gen_metric.e_minus()))


def closed_form_eigenbundles(gen_metric, components):
    """The eigenbundles from the components::

        L1+ = {X + g(X) : X in T10(J+)} + span{V + g(V) + i}
        L1- = {X - g(X) : X in T10(J-)}

    with ``V = X+`` (n odd) or ``V = (X- - i c+ X+) / (1 - c+^2)`` (n even).
    """
    field = gen_metric.field
    rank = gen_metric.rank
    if isinstance(components, ComponentsEven):
        if components.is_null():
            raise InadmissibleParameters(
                "c+^2 = 1: the closed forms need non-null X+ and X-")
        c = components.c_plus
        v = field.scale(
            field.div(field.one, field.one - c * c),
            field.sub(components.x_minus,
                      field.scale(field.i * c, components.x_plus)))
    else:
        v = components.x_plus
    plus = [gen_metric.s_plus(x) for x in
            eigenspace(components.j_plus, field.i).basis]
    plus.append(field.add(gen_metric.s_plus(v),
                          field.scale(field.i, field.unit(rank, rank - 1))))
    minus = [gen_metric.s(x) for x in
             eigenspace(components.j_minus, field.i).basis]
    l1_plus = ComplexSubspace(field, rank, plus)
    l1_minus = ComplexSubspace(field, rank, minus)
    return Eigenbundles(l1_plus + l1_minus, l1_plus, l1_minus)


def eigenbundles(gen_metric, acs, components=None):
    """Computes ``(L1, L1+, L1-)`` directly and from the closed forms, and
    checks that both agree.

    :raises InvariantError: if the computations disagree or
      ``rank L1 != n``.
    """
    direct = direct_eigenbundles(gen_metric, acs)
    if direct.l1.rank != gen_metric.dim:
        raise InvariantError("structure", "rank L1 = {} != n = {}".format(
            direct.l1.rank, gen_metric.dim))
    if components is None:
        components = extract(gen_metric, acs)
    closed = closed_form_eigenbundles(gen_metric, components)
    for name, a, b in zip(Eigenbundles._fields, direct, closed):
        if a != b:
            raise InvariantError(
                "structure", "{} differs between the eigenspace and the "
                "closed form".format(name))
    return direct


@collects_checks("admissibility")
def admissibility_check(gen_metric, first, second):
    """Checks that the anchor maps ``{u : F1 u = -F2 u}`` (intersected with
    ``u0^perp`` when n is even) isomorphically onto the tangent space, along
    with the identities relating the generalized metric and F1.
    """
    field = gen_metric.field
    n = gen_metric.dim
    rank = gen_metric.rank
    Q = gram(field, n)
    u0 = first.u0
    space = kernel(first.matrix + second.matrix)
    if n % 2 == 0:
        space = intersect(space, kernel(Matrix(field, [Q @ u0], rank)))
    image = ComplexSubspace(field, n, (split(u).vector for u in space.basis))
    yield check("the anchor is injective on the subspace",
                space.rank == n, {"rank": space.rank})
    yield check("the anchor is onto the tangent space", image.rank == n,
                {"rank": image.rank})

    G = gen_metric.gend
    sign = field.one if n % 2 == 0 else -field.one
    yield check("G^end u0 = (-1)^n u0", field.equal_vectors(
        G @ u0, field.scale(sign, u0)))
    Gm = gen_metric.bilinear
    F = first.matrix
    lowered = Q @ u0
    yield check("G(Fu, Fv) = G(u, v) - <u, u0><v, u0>",
                F.T @ Gm @ F == Gm - Matrix.outer(field, lowered, lowered))
    yield check("G(Fu, v) = -G(u, Fv)", F.T @ Gm == -(Gm @ F))


def complex_structure_around(metric, x, orientation=1):
    """In dimension 3, the g-skew endomorphism ``J = X x .`` of a unit
    vector X, which is a complex structure on ``X^perp``.

    :raises InadmissibleParameters: if ``X^perp`` admits no g-skew complex
      structure (or X is not a unit vector).
    """
    field = metric.field
    if metric.dim != 3:
        raise DimensionError("complex_structure_around needs dimension 3")
    if not field.equal(metric.norm(x), field.one):
        raise InadmissibleParameters("g(X, X) must be 1")
    j = Matrix.from_columns(field, (
        cross_product(metric, x, field.unit(3, k), orientation)
        for k in range(3)), 3)
    expected = Matrix.outer(field, x, metric.flat(x)) - \
        Matrix.identity(field, 3)
    if not j @ j == expected:
        raise InadmissibleParameters(
            "the orthogonal complement of X is not definite, so it has no "
            "g-skew complex structure")
    return j


def complete_j_plus(metric, x_plus, x_minus, c_plus, sign=1):
    """In dimension 4, the J+ determined by X+-, c+ and a choice of
    orientation ``sign`` on the orthogonal complement of ``span{X+, X-}``::

        J+ Y = (c/N) (g(Y, X-) X+ - g(Y, X+) X-)
               + (sign/|N|) g^-1 vol(X+, X-, Y, .),   N = 1 - c^2
    """
    field = metric.field
    if metric.dim != 4:
        raise DimensionError("complete_j_plus needs dimension 4")
    c = field.convert(c_plus)
    norm = field.one - c * c
    if field.is_zero(norm):
        raise InadmissibleParameters("c+^2 = 1 leaves X+- null")
    det = metric.matrix.det()
    volume = field.sqrt(det if field.sign(det) > 0 else -det)
    scale = field.div(volume if sign > 0 else -volume,
                      norm if field.sign(norm) > 0 else -norm)
    ratio = field.div(c, norm)
    columns = []
    for k in range(4):
        y = field.unit(4, k)
        value = field.scale(ratio, field.sub(
            field.scale(metric.pair(y, x_minus), x_plus),
            field.scale(metric.pair(y, x_plus), x_minus)))
        lowered = tuple(scale * field.det((x_plus, x_minus, y,
                                           field.unit(4, m)))
                        for m in range(4))
        columns.append(field.add(value, metric.sharp(lowered)))
    return Matrix.from_columns(field, columns, 4)
