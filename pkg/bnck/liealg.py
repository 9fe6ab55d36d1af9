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

"""Lie algebras given by structure constants, forms on them, the
Chevalley-Eilenberg differential, left-invariant pseudo-Riemannian metrics
and their Levi-Civita connections.
"""

from .decorators import cached_attr, document_attr
from .exactfield import ComplexSubspace, Matrix, kernel
from .reports import check, collects_checks
from .utils import DimensionError, InvariantError
from collections import namedtuple
from itertools import combinations, permutations

__all__ = ["LieAlgebra", "KForm", "PseudoMetric", "Connection",
           "UnimodularData", "ce_differential", "jacobi_check",
           "levi_civita", "killing_fields", "unimodular_data",
           "canonical_operator_L", "is_derivation", "nijenhuis",
           "lie_derivative_endo", "cross_product", "is_self_adjoint"]


def _label(i):
    return "e{}".format(i + 1)


def _permutation_sign(indices):
    """Returns ``(sorted_indices, sign)``; the sign is 0 when an index
    repeats.
    """
    indices = list(indices)
    if len(set(indices)) != len(indices):
        return tuple(sorted(indices)), 0
    sign = 1
    for a in range(len(indices)):
        for b in range(a + 1, len(indices)):
            if indices[a] > indices[b]:
                sign = -sign
    return tuple(sorted(indices)), sign


class LieAlgebra:
    """A real Lie algebra of dimension n given by structure constants
    ``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k`` (indices are
    0-based here and 1-based in documents).

    Antisymmetry in ``i, j`` is validated; the Jacobi identity is checked
    separately by `jacobi_check`.

    :param field: The field backend.
    :param int dim: The dimension n.
    :param constants: An n x n x n nested sequence of scalars.
    """
    def __init__(self, field, dim, constants):
        self._field = field
        self._dim = dim
        table = []
        for i in range(dim):
            row = []
            for j in range(dim):
                try:
                    vector = field.vector(constants[i][j])
                except (IndexError, TypeError):
                    raise DimensionError(
                        "Structure constants must be {0}x{0}x{0}".format(
                            dim)) from None
                if len(vector) != dim:
                    raise DimensionError(
                        "Structure constants must be {0}x{0}x{0}".format(
                            dim))
                row.append(vector)
            table.append(tuple(row))
        for i in range(dim):
            for j in range(i, dim):
                if not field.equal_vectors(table[i][j],
                                           field.neg(table[j][i])):
                    raise InvariantError(
                        "lie_algebra.brackets",
                        "[{0}, {1}] != -[{1}, {0}]".format(
                            _label(i), _label(j)))
        self._table = tuple(table)

    @classmethod
    def from_brackets(cls, field, dim, brackets):
        """Builds a Lie algebra from the brackets of basis elements.

        :param dict brackets: Maps ``(i, j)`` (0-based, ``i != j``) to the
          bracket ``[e_i, e_j]``, either a full vector or a dict ``{k: c}``.
          Missing brackets are filled by antisymmetry or are zero.
        """
        table = [[field.zeros(dim) for _ in range(dim)] for _ in range(dim)]
        given = set()
        for (i, j), value in brackets.items():
            if isinstance(value, dict):
                vector = [field.zero] * dim
                for k, c in value.items():
                    vector[k] = field.convert(c)
                vector = tuple(vector)
            else:
                vector = field.vector(value)
            if i == j:
                if not field.is_zero_vector(vector):
                    raise InvariantError(
                        "lie_algebra.brackets",
                        "[{0}, {0}] must vanish".format(_label(i)))
                continue
            if (j, i) in given and not field.equal_vectors(
                    table[i][j], vector):
                raise InvariantError(
                    "lie_algebra.brackets",
                    "[{0}, {1}] and [{1}, {0}] are inconsistent".format(
                        _label(i), _label(j)))
            given.add((i, j))
            table[i][j] = vector
            table[j][i] = field.neg(vector)
        return cls(field, dim, table)

    @classmethod
    def abelian(cls, field, dim):
        return cls.from_brackets(field, dim, {})

    @document_attr
    def field(self):
        """The field backend."""

    @document_attr
    def dim(self):
        """The dimension of the algebra.

        :type: `int`
        """

    @property
    def constants(self):
        return self._table

    def bracket_basis(self, i, j):
        return self._table[i][j]

    def bracket(self, x, y):
        field = self.field
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionError("Vectors must have length {}".format(
                self.dim))
        return field.lincomb((
            (x[i] * y[j], self._table[i][j])
            for i in range(self.dim) if not field.is_zero(x[i])
            for j in range(self.dim) if not field.is_zero(y[j])
        ), self.dim)

    def ad(self, x):
        """The matrix of ``y -> [x, y]``."""
        field = self.field
        return Matrix.from_columns(field, (
            self.bracket(x, field.unit(self.dim, j))
            for j in range(self.dim)), self.dim)

    def is_abelian(self):
        return all(self.field.is_zero_vector(v)
                   for row in self._table for v in row)

    def basis(self):
        return [self.field.unit(self.dim, i) for i in range(self.dim)]

    def to_json(self):
        records = []
        for i, j in combinations(range(self.dim), 2):
            for k, c in enumerate(self._table[i][j]):
                if not self.field.is_zero(c):
                    records.append({"i": i + 1, "j": j + 1, "k": k + 1,
                                    "c": self.field.to_json(c)})
        return {"dimension": self.dim, "brackets": records}

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and all(
            self.field.equal_vectors(a, b)
            for r, s in zip(self._table, other._table)
            for a, b in zip(r, s))

    __hash__ = None

    def __repr__(self):
        return "<LieAlgebra dim={} brackets={}>".format(
            self.dim, len(self.to_json()["brackets"]))


@collects_checks("jacobi")
def jacobi_check(lie_algebra):
    """Checks the Jacobi identity on every basis triple ``i < j < k``."""
    L = lie_algebra
    field = L.field
    n = L.dim
    basis = L.basis()
    for i, j, k in combinations(range(n), 3):
        x, y, z = basis[i], basis[j], basis[k]
        total = field.add(
            field.add(L.bracket(x, L.bracket(y, z)),
                      L.bracket(y, L.bracket(z, x))),
            L.bracket(z, L.bracket(x, y)))
        yield check(
            "Jacobi ({}, {}, {})".format(_label(i), _label(j), _label(k)),
            field.is_zero_vector(total), total)


class KForm:
    """A left-invariant k-form on an n-dimensional Lie algebra, stored by
    its components on increasing index tuples.

    Forms evaluate with the determinant convention:
    ``(e^1 ^ e^2)(e_1, e_2) == 1``.

    :param field: The field backend.
    :param int dim: The dimension n.
    :param int degree: The degree k.
    :param dict components: Maps index tuples (0-based, in any order) to
      values. Each set of indices may appear once.
    """
    def __init__(self, field, dim, degree, components=None):
        self._field = field
        self._dim = dim
        self._degree = degree
        coeffs = {}
        for indices, value in (components or {}).items():
            indices = tuple(indices)
            if len(indices) != degree:
                raise DimensionError(
                    "A {}-form component needs {} indices: {}".format(
                        degree, degree, indices))
            if any(not 0 <= i < dim for i in indices):
                raise DimensionError("Form index out of range: {}".format(
                    indices))
            value = field.convert(value)
            key, sign = _permutation_sign(indices)
            if sign == 0:
                if not field.is_zero(value):
                    raise InvariantError(
                        "form", "repeated index in {}".format(
                            tuple(i + 1 for i in indices)))
                continue
            coeffs[key] = coeffs.get(key, field.zero) + (
                value if sign > 0 else -value)
        self._coeffs = {k: v for k, v in coeffs.items()
                        if not field.is_zero(v)}

    @classmethod
    def zero(cls, field, dim, degree):
        return cls(field, dim, degree)

    @classmethod
    def from_covector(cls, field, covector):
        return cls(field, len(covector), 1, {
            (i,): c for i, c in enumerate(covector)})

    @document_attr
    def field(self):
        """The field backend."""

    @document_attr
    def dim(self):
        """The dimension of the underlying algebra.

        :type: `int`
        """

    @document_attr
    def degree(self):
        """The degree of the form.

        :type: `int`
        """

    def items(self):
        return sorted(self._coeffs.items())

    def component(self, *indices):
        key, sign = _permutation_sign(indices)
        if sign == 0:
            return self.field.zero
        value = self._coeffs.get(key, self.field.zero)
        return value if sign > 0 else -value

    def __call__(self, *vectors):
        if len(vectors) != self.degree:
            raise DimensionError("A {}-form takes {} arguments".format(
                self.degree, self.degree))
        field = self.field
        total = field.zero
        for key, value in self._coeffs.items():
            for perm in permutations(range(self.degree)):
                term = value
                for a, p in enumerate(perm):
                    term = term * vectors[a][key[p]]
                    if field.is_zero(term):
                        break
                else:
                    if _permutation_sign(perm)[1] > 0:
                        total += term
                    else:
                        total -= term
        return total

    def interior(self, x):
        """Returns ``i_x`` of this form: ``(i_x w)(...) = w(x, ...)``."""
        if self.degree == 0:
            raise DimensionError("Interior product of a 0-form")
        field = self.field
        coeffs = {}
        for key, value in self._coeffs.items():
            for a, index in enumerate(key):
                if field.is_zero(x[index]):
                    continue
                rest = key[:a] + key[a + 1:]
                term = value * x[index]
                coeffs[rest] = coeffs.get(rest, field.zero) + (
                    term if a % 2 == 0 else -term)
        return KForm(self.field, self.dim, self.degree - 1, coeffs)

    def covector(self):
        if self.degree != 1:
            raise DimensionError("Only 1-forms are covectors")
        return tuple(self.component(i) for i in range(self.dim))

    def scalar(self):
        if self.degree != 0:
            raise DimensionError("Only 0-forms are scalars")
        return self._coeffs.get((), self.field.zero)

    def as_matrix(self):
        """For a 2-form, the matrix ``M[i][j] = w(e_i, e_j)``."""
        if self.degree != 2:
            raise DimensionError("Only 2-forms have a matrix")
        return Matrix(self.field, (
            tuple(self.component(i, j) for j in range(self.dim))
            for i in range(self.dim)), self.dim, False)

    def wedge(self, other):
        if self.dim != other.dim:
            raise DimensionError("Forms on different algebras")
        field = self.field
        coeffs = {}
        for a, u in self._coeffs.items():
            for b, v in other._coeffs.items():
                key, sign = _permutation_sign(a + b)
                if sign == 0:
                    continue
                term = u * v
                coeffs[key] = coeffs.get(key, field.zero) + (
                    term if sign > 0 else -term)
        return KForm(field, self.dim, self.degree + other.degree, coeffs)

    def _check_compatible(self, other):
        if self.dim != other.dim or self.degree != other.degree:
            raise DimensionError(
                "Cannot combine a {}-form on dimension {} with a {}-form on "
                "dimension {}".format(self.degree, self.dim, other.degree,
                                      other.dim))

    def __add__(self, other):
        self._check_compatible(other)
        coeffs = dict(self._coeffs)
        for key, value in other._coeffs.items():
            coeffs[key] = coeffs.get(key, self.field.zero) + value
        return KForm(self.field, self.dim, self.degree, coeffs)

    def __neg__(self):
        return self.scale(-self.field.one)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field.convert(c)
        return KForm(self.field, self.dim, self.degree, {
            k: c * v for k, v in self._coeffs.items()})

    def is_zero(self):
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return (self.dim == other.dim and self.degree == other.degree and
                (self - other).is_zero())

    __hash__ = None

    def to_json(self):
        names = "ijk"[:self.degree] if self.degree <= 3 else None
        records = []
        for key, value in self.items():
            if names is None:
                record = {"indices": [i + 1 for i in key]}
            else:
                record = {n: i + 1 for n, i in zip(names, key)}
            record["c"] = self.field.to_json(value)
            records.append(record)
        return records

    def __repr__(self):
        return "KForm(degree={}, {})".format(self.degree, ", ".join(
            "{}: {}".format(tuple(i + 1 for i in k), self.field.format(v))
            for k, v in self.items()))


def ce_differential(lie_algebra, form):
    """The Chevalley-Eilenberg differential of a left-invariant form::

        dw(x_0, ..., x_k) = sum_{a < b} (-1)^(a + b)
                            w([x_a, x_b], x_0, ..^a..^b.., x_k)
    """
    L = lie_algebra
    field = L.field
    n = L.dim
    if form.dim != n:
        raise DimensionError("Form and algebra dimensions differ")
    k = form.degree
    basis = L.basis()
    coeffs = {}
    for key in combinations(range(n), k + 1):
        total = field.zero
        for a, b in combinations(range(k + 1), 2):
            bracket = L.bracket_basis(key[a], key[b])
            if field.is_zero_vector(bracket):
                continue
            rest = [basis[key[c]] for c in range(k + 1) if c not in (a, b)]
            value = form(bracket, *rest)
            total += value if (a + b) % 2 == 0 else -value
        coeffs[key] = total
    return KForm(field, n, k + 1, coeffs)


class PseudoMetric:
    """A left-invariant pseudo-Riemannian metric: a symmetric, nondegenerate
    real matrix.

    :param field: The field backend.
    :param matrix: A `Matrix` or a sequence of rows.
    """
    def __init__(self, field, matrix):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(field, matrix)
        if not matrix.is_square():
            raise DimensionError("A metric must be square")
        if not matrix.is_symmetric():
            raise InvariantError("metric", "the metric is not symmetric")
        if not matrix.is_real():
            raise InvariantError("metric", "the metric must be real")
        if field.is_zero(matrix.det()):
            raise InvariantError("metric", "the metric is degenerate")
        self._field = field
        self._matrix = matrix

    @classmethod
    def diag(cls, field, entries):
        return cls(field, Matrix.diagonal(field, entries))

    @document_attr
    def field(self):
        """The field backend."""

    @document_attr
    def matrix(self):
        """The Gram matrix ``g[i][j] = g(e_i, e_j)``.

        :type: `Matrix`
        """

    @property
    def dim(self):
        return self.matrix.nrows

    @cached_attr
    def inverse(self):
        """The inverse Gram matrix.

        :type: `Matrix`
        """
        return self.matrix.inverse()

    def pair(self, x, y):
        return self.field.dot(x, self.matrix @ y)

    def norm(self, x):
        return self.pair(x, x)

    def flat(self, x):
        return self.matrix @ x

    def sharp(self, xi):
        return self.inverse @ xi

    def orthogonal_complement(self, vectors):
        field = self.field
        rows = [self.flat(v) for v in vectors]
        if not rows:
            return ComplexSubspace.full(field, self.dim)
        return kernel(Matrix(field, rows, self.dim, False))

    def is_skew(self, endo):
        """Whether ``g(AX, Y) = -g(X, AY)``, i.e. ``g A`` is skew."""
        m = self.matrix @ endo
        return (m + m.T).is_zero()

    def __eq__(self, other):
        if not isinstance(other, PseudoMetric):
            return NotImplemented
        return self.matrix == other.matrix

    __hash__ = None

    def to_json(self):
        return self.matrix.to_json()

    def __repr__(self):
        return "PseudoMetric({!r})".format(self.matrix)


class Connection:
    """A left-invariant connection, given by the matrices of
    ``Y -> nabla_{e_i} Y``.

    :param field: The field backend.
    :param ops: One n x n `Matrix` per basis vector.
    """
    def __init__(self, field, ops):
        ops = tuple(ops)
        n = len(ops)
        if any(op.shape != (n, n) for op in ops):
            raise DimensionError("Connection matrices must be {0}x{0}".format(
                n))
        self.field = field
        self.ops = ops
        self.dim = n

    def endomorphism(self, x):
        """The matrix of ``Y -> nabla_x Y``."""
        field = self.field
        result = Matrix.zeros(field, self.dim)
        for i, c in enumerate(x):
            if not field.is_zero(c):
                result = result + self.ops[i].scale(c)
        return result

    def covariant(self, x, y):
        return self.endomorphism(x) @ y

    def shifted(self, terms):
        """Returns ``nabla + S`` where ``terms[i]`` is the matrix of
        ``S_{e_i}``.
        """
        return Connection(self.field, (a + b for a, b in zip(self.ops,
                                                              terms)))

    def derivative_of_endo(self, x, endo):
        """``(nabla_x A) = [nabla_x, A]`` for an endomorphism field."""
        op = self.endomorphism(x)
        return op @ endo - endo @ op

    def derivative_of_vector(self, vector):
        """The matrix whose i-th column is ``nabla_{e_i} vector``."""
        return Matrix.from_columns(self.field, (
            op @ vector for op in self.ops), self.dim)

    def christoffel(self, i, j, k):
        """The ``e_k`` component of ``nabla_{e_i} e_j``."""
        return self.ops[i][k, j]

    def torsion_free(self, lie_algebra):
        L = lie_algebra
        field = self.field
        for i, j in combinations(range(self.dim), 2):
            torsion = field.sub(
                field.sub(self.ops[i].column(j), self.ops[j].column(i)),
                L.bracket_basis(i, j))
            if not field.is_zero_vector(torsion):
                return False
        return True

    def metric_compatible(self, metric):
        return all(metric.is_skew(op) for op in self.ops)

    def to_json(self):
        records = []
        for i, op in enumerate(self.ops):
            for j in range(self.dim):
                for k in range(self.dim):
                    if not self.field.is_zero(op[k, j]):
                        records.append({
                            "i": i + 1, "j": j + 1, "k": k + 1,
                            "c": self.field.to_json(op[k, j])})
        return records

    def __eq__(self, other):
        if not isinstance(other, Connection):
            return NotImplemented
        return self.dim == other.dim and all(
            a == b for a, b in zip(self.ops, other.ops))

    __hash__ = None


def levi_civita(lie_algebra, metric):
    """The Levi-Civita connection of a left-invariant metric, from the
    Koszul formula::

        2 g(nabla_{e_i} e_j, e_k) = g([e_i, e_j], e_k) - g([e_j, e_k], e_i)
                                    + g([e_k, e_i], e_j)
    """
    L = lie_algebra
    field = L.field
    n = L.dim
    if metric.dim != n:
        raise DimensionError("Metric and algebra dimensions differ")
    half = field.half
    flats = [[metric.flat(L.bracket_basis(i, j)) for j in range(n)]
             for i in range(n)]
    ops = []
    for i in range(n):
        columns = []
        for j in range(n):
            lowered = tuple(half * (flats[i][j][k] - flats[j][k][i] +
                                    flats[k][i][j]) for k in range(n))
            columns.append(metric.sharp(lowered))
        ops.append(Matrix.from_columns(field, columns, n))
    return Connection(field, ops)


def killing_fields(lie_algebra, metric, connection=None):
    """The left-invariant Killing fields: the ``X`` with
    ``g(nabla_Y X, Z) + g(nabla_Z X, Y) = 0`` for all ``Y, Z``.

    :rtype: `ComplexSubspace`
    """
    field = lie_algebra.field
    n = lie_algebra.dim
    conn = connection or levi_civita(lie_algebra, metric)
    lowered = [metric.matrix @ op for op in conn.ops]
    rows = []
    for a in range(n):
        for c in range(a, n):
            rows.append(tuple(lowered[a][c, m] + lowered[c][a, m]
                              for m in range(n)))
    return kernel(Matrix(field, rows, n, False))


UnimodularData = namedtuple("UnimodularData", ["is_unimodular", "kernel",
                                               "trace_form"])
UnimodularData.__doc__ = """Whether ``tr ad`` vanishes, the unimodular
kernel ``{x : tr ad_x = 0}`` and the covector ``x -> tr ad_x``."""


def unimodular_data(lie_algebra):
    L = lie_algebra
    field = L.field
    n = L.dim
    trace_form = tuple(L.ad(field.unit(n, i)).trace() for i in range(n))
    unimodular = field.is_zero_vector(trace_form)
    if unimodular:
        return UnimodularData(True, ComplexSubspace.full(field, n),
                              trace_form)
    return UnimodularData(False, kernel(Matrix(field, [trace_form], n,
                                               False)), trace_form)


def cross_product(metric, u, v, orientation=1):
    """The metric cross product in dimension 3:
    ``g(u x v, w) = o * sqrt|det g| * det(u, v, w)``.
    """
    field = metric.field
    if metric.dim != 3:
        raise DimensionError("The cross product needs dimension 3")
    volume = field.sqrt(_abs(field, metric.matrix.det()))
    coefficient = volume if orientation > 0 else -volume
    lowered = tuple(coefficient * field.det((u, v, field.unit(3, k)))
                    for k in range(3))
    return metric.sharp(lowered)


def _abs(field, z):
    return z if field.sign(z) >= 0 else -z


def canonical_operator_L(lie_algebra, metric, orientation=1):
    """The operator ``L`` of a three-dimensional metric Lie algebra,
    characterized by ``[u, v] = L(u x v)``. It is self-adjoint exactly when
    the algebra is unimodular.
    """
    L = lie_algebra
    field = L.field
    if L.dim != 3:
        raise DimensionError("The canonical operator exists only in "
                             "dimension 3")
    e = L.basis()
    pairs = [(1, 2), (2, 0), (0, 1)]
    crosses = Matrix.from_columns(field, (
        cross_product(metric, e[a], e[b], orientation) for a, b in pairs))
    brackets = Matrix.from_columns(field, (
        L.bracket_basis(a, b) for a, b in pairs))
    return brackets @ crosses.inverse()


def is_self_adjoint(metric, endo):
    m = metric.matrix @ endo
    return m == m.T


@collects_checks("derivation")
def is_derivation(lie_algebra, endo):
    """Checks ``D[x, y] = [Dx, y] + [x, Dy]`` on basis pairs."""
    L = lie_algebra
    field = L.field
    basis = L.basis()
    failure = None
    for i, j in combinations(range(L.dim), 2):
        residual = field.sub(
            endo @ L.bracket_basis(i, j),
            field.add(L.bracket(endo @ basis[i], basis[j]),
                      L.bracket(basis[i], endo @ basis[j])))
        if failure is None and not field.is_zero_vector(residual):
            failure = {"pair": [_label(i), _label(j)], "residual": residual}
    yield check("D[x, y] = [Dx, y] + [x, Dy]", failure is None, failure)


@collects_checks("nijenhuis")
def nijenhuis(lie_algebra, endo):
    """Checks that the Nijenhuis tensor of ``endo`` vanishes::

        N(X, Y) = [JX, JY] - J[JX, Y] - J[X, JY] + J^2 [X, Y]
    """
    L = lie_algebra
    field = L.field
    basis = L.basis()
    square = endo @ endo
    failure = None
    for i, j in combinations(range(L.dim), 2):
        x, y = basis[i], basis[j]
        jx, jy = endo @ x, endo @ y
        tensor = field.add(
            field.sub(field.sub(L.bracket(jx, jy),
                                endo @ L.bracket(jx, y)),
                      endo @ L.bracket(x, jy)),
            square @ L.bracket(x, y))
        if failure is None and not field.is_zero_vector(tensor):
            failure = {"pair": [_label(i), _label(j)], "value": tensor}
    yield check("N_J = 0", failure is None, failure)


def lie_derivative_endo(lie_algebra, x, endo, connection=None):
    """The Lie derivative of a left-invariant endomorphism field along a
    left-invariant vector field: ``L_x J = ad_x J - J ad_x``.

    When a torsion-free ``connection`` is given the result is computed as
    ``nabla_x J - nabla(.) x J + J nabla(.) x`` instead, which agrees.
    """
    if connection is None:
        ad = lie_algebra.ad(x)
        return ad @ endo - endo @ ad
    derivative = connection.derivative_of_vector(x)
    return (connection.derivative_of_endo(x, endo) - derivative @ endo +
            endo @ derivative)
