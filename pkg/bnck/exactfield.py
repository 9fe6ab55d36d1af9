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

"""Exact complex-rational scalars, matrices and subspaces.

Every verification in bnck is computed over a *field backend*. The exact
backend works over Q(i) (sympy's ``QQ_I``) and all its equality tests are
exact; the numeric backend works over Python complex numbers with numpy
and compares against a tolerance. Both expose the same interface, so the
algebra modules never need to know which one they are running on.
"""

from .utils import DimensionError, InadmissibleParameters, logger
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational
from sympy.polys.matrices import DomainMatrix
from fractions import Fraction
import math
import numpy as np

__all__ = ["DEFAULT_TOLERANCE", "EXACT_MODE", "NUMERIC_MODE", "ExactField",
           "NumericField", "get_field", "Matrix", "ComplexSubspace", "rref",
           "kernel", "eigenspace", "intersect", "solve_affine",
           "parse_rational"]

DEFAULT_TOLERANCE = 1e-9
EXACT_MODE = "exact"
NUMERIC_MODE = "numeric"


def parse_rational(value):
    """Parses ``value`` as an exact rational. Accepts ints, `Fraction`
    objects, strings such as ``"3/4"``, ``"-2"`` or ``"0.125"``, and floats
    (through their shortest decimal representation).

    :rtype: `fractions.Fraction`
    """
    if isinstance(value, bool):
        raise TypeError("Booleans are not scalars: {!r}".format(value))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError("Not a finite number: {!r}".format(value))
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError("Cannot interpret {!r} as a rational number".format(value))


def _format_fraction(value):
    value = parse_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


class _Field:
    exact = None
    mode = None

    # Vector helpers. Vectors are tuples of scalars.

    def vector(self, values):
        return tuple(self.convert(v) for v in values)

    def zeros(self, n):
        return (self.zero,) * n

    def unit(self, n, i):
        return tuple(self.one if k == i else self.zero for k in range(n))

    def add(self, u, v):
        if len(u) != len(v):
            raise DimensionError("Vector lengths differ: {} and {}".format(
                len(u), len(v)))
        return tuple(a + b for a, b in zip(u, v))

    def sub(self, u, v):
        if len(u) != len(v):
            raise DimensionError("Vector lengths differ: {} and {}".format(
                len(u), len(v)))
        return tuple(a - b for a, b in zip(u, v))

    def neg(self, u):
        return tuple(-a for a in u)

    def scale(self, c, u):
        return tuple(c * a for a in u)

    def dot(self, u, v):
        if len(u) != len(v):
            raise DimensionError("Vector lengths differ: {} and {}".format(
                len(u), len(v)))
        total = self.zero
        for a, b in zip(u, v):
            total += a * b
        return total

    def lincomb(self, pairs, n):
        """Returns the sum of ``c * u`` over ``(c, u)`` in ``pairs``."""
        total = list(self.zeros(n))
        for c, u in pairs:
            if self.is_zero(c):
                continue
            for k, a in enumerate(u):
                total[k] += c * a
        return tuple(total)

    def vconj(self, u):
        return tuple(self.conj(a) for a in u)

    def is_zero_vector(self, u):
        return all(self.is_zero(a) for a in u)

    def equal(self, a, b):
        return self.is_zero(a - b)

    def equal_vectors(self, u, v):
        return len(u) == len(v) and all(
            self.equal(a, b) for a, b in zip(u, v))

    def fraction(self, p, q=1):
        return self.convert(Fraction(p, q))

    @property
    def half(self):
        return self.fraction(1, 2)

    def is_real(self, z):
        return self.is_zero(self.imag(z))

    def is_real_vector(self, u):
        return all(self.is_real(a) for a in u)

    def sign(self, z):
        """Returns -1, 0 or 1 for a real scalar."""
        if not self.is_real(z):
            raise DimensionError("Sign of a non-real scalar: {}".format(
                self.format(z)))
        if self.is_zero(z):
            return 0
        return 1 if self.real_value(z) > 0 else -1

    def first_nonzero(self, u):
        for a in u:
            if not self.is_zero(a):
                return a
        return None

    def format_vector(self, u):
        return "(" + ", ".join(self.format(a) for a in u) + ")"


class ExactField(_Field):
    """The exact backend: scalars are elements of sympy's ``QQ_I``."""
    exact = True
    mode = EXACT_MODE
    tolerance = None

    def __init__(self):
        self.domain = QQ_I
        self.zero = QQ_I(QQ(0), QQ(0))
        self.one = QQ_I(QQ(1), QQ(0))
        self.i = QQ_I(QQ(0), QQ(1))

    def convert(self, value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, dict):
            re = parse_rational(value.get("re", 0))
            im = parse_rational(value.get("im", 0))
            return self.domain(QQ(re.numerator, re.denominator),
                               QQ(im.numerator, im.denominator))
        if isinstance(value, complex):
            return self.convert({"re": value.real, "im": value.imag})
        re = parse_rational(value)
        return self.domain(QQ(re.numerator, re.denominator), QQ(0))

    def is_scalar(self, value):
        return isinstance(value, GaussianRational)

    def is_zero(self, z):
        return z.x == 0 and z.y == 0

    def conj(self, z):
        return self.domain(z.x, -z.y)

    def real(self, z):
        return self.domain(z.x, QQ(0))

    def imag(self, z):
        return self.domain(z.y, QQ(0))

    def real_value(self, z):
        return Fraction(int(z.x.numerator), int(z.x.denominator))

    def div(self, a, b):
        if self.is_zero(b):
            raise ZeroDivisionError("Division by zero in Q(i)")
        norm = b.x * b.x + b.y * b.y
        return a * self.domain(b.x / norm, -b.y / norm)

    def sqrt(self, z):
        """Returns the nonnegative square root of a nonnegative real
        rational scalar.

        :raises InadmissibleParameters: if the root is not rational.
        """
        if not self.is_real(z) or self.real_value(z) < 0:
            raise InadmissibleParameters(
                "Square root of {} is not a nonnegative real".format(
                    self.format(z)))
        value = self.real_value(z)
        p, q = value.numerator, value.denominator
        rp, rq = math.isqrt(p), math.isqrt(q)
        if rp * rp != p or rq * rq != q:
            raise InadmissibleParameters(
                "sqrt({}) is irrational; use numeric mode".format(
                    _format_fraction(value)))
        return self.fraction(rp, rq)

    def to_json(self, z):
        if z.y == 0:
            return _format_fraction(self.real_value(z))
        return {
            "re": _format_fraction(self.real_value(z)),
            "im": _format_fraction(self.real_value(self.imag(z))),
        }

    def from_json(self, value):
        return self.convert(value)

    def format(self, z):
        re = _format_fraction(self.real_value(z))
        if z.y == 0:
            return re
        im = _format_fraction(self.real_value(self.imag(z)))
        if z.x == 0:
            return "{}i".format(im)
        return "({}{}{}i)".format(re, "" if im.startswith("-") else "+", im)

    def to_complex(self, z):
        return complex(float(z.x), float(z.y))

    def rref(self, rows, ncols):
        """Returns ``(rows, pivots)``: the reduced row echelon form with zero
        rows dropped, and the pivot columns.
        """
        rows = [list(r) for r in rows]
        if not rows or ncols == 0:
            return [], ()
        reduced, pivots = DomainMatrix(
            rows, (len(rows), ncols), self.domain).rref()
        reduced = reduced.to_list()
        return [tuple(reduced[k]) for k in range(len(pivots))], tuple(pivots)

    def det(self, rows):
        n = len(rows)
        if n == 0:
            return self.one
        return DomainMatrix([list(r) for r in rows], (n, n),
                            self.domain).det()

    def __eq__(self, other):
        return isinstance(other, ExactField)

    def __hash__(self):
        return hash(EXACT_MODE)

    def __repr__(self):
        return "ExactField()"


class NumericField(_Field):
    """The numeric backend: scalars are Python complex numbers and every
    zero test is ``|x| <= tolerance * (1 + magnitude)``.

    :param float tolerance: The absolute tolerance.
    :param float magnitude: The magnitude of the input data.
    """
    exact = False
    mode = NUMERIC_MODE
    zero = 0j
    one = 1 + 0j
    i = 1j

    def __init__(self, tolerance=DEFAULT_TOLERANCE, magnitude=1.0):
        if tolerance is None:
            tolerance = DEFAULT_TOLERANCE
        tolerance = float(tolerance)
        if not tolerance > 0:
            raise ValueError("Tolerance must be positive: {}".format(
                tolerance))
        self.tolerance = tolerance
        self.magnitude = max(float(magnitude), 0.0)
        self.threshold = tolerance * (1 + self.magnitude)

    def convert(self, value):
        if isinstance(value, complex):
            return value
        if isinstance(value, dict):
            return complex(float(parse_rational(value.get("re", 0))),
                           float(parse_rational(value.get("im", 0))))
        if isinstance(value, (float, int)) and not isinstance(value, bool):
            return complex(value)
        if isinstance(value, GaussianRational):
            return complex(float(value.x), float(value.y))
        return complex(float(parse_rational(value)))

    def is_scalar(self, value):
        return isinstance(value, complex)

    def is_zero(self, z):
        return abs(z) <= self.threshold

    def conj(self, z):
        return z.conjugate()

    def real(self, z):
        return complex(z.real)

    def imag(self, z):
        return complex(z.imag)

    def real_value(self, z):
        return z.real

    def div(self, a, b):
        if self.is_zero(b):
            raise ZeroDivisionError("Division by a numerically zero scalar")
        return a / b

    def sqrt(self, z):
        if not self.is_real(z) or z.real < -self.threshold:
            raise InadmissibleParameters(
                "Square root of {} is not a nonnegative real".format(
                    self.format(z)))
        return complex(math.sqrt(max(z.real, 0.0)))

    def to_json(self, z):
        if self.is_zero(complex(0, z.imag)):
            return z.real
        return {"re": z.real, "im": z.imag}

    def from_json(self, value):
        return self.convert(value)

    def format(self, z):
        if self.is_zero(complex(0, z.imag)):
            return "{:.12g}".format(z.real)
        return "({:.12g}{:+.12g}i)".format(z.real, z.imag)

    def to_complex(self, z):
        return z

    def rref(self, rows, ncols):
        if not rows or ncols == 0:
            return [], ()
        m = np.array([list(r) for r in rows], dtype=complex)
        nrows = m.shape[0]
        pivots = []
        r = 0
        for col in range(ncols):
            if r >= nrows:
                break
            best = r + int(np.argmax(np.abs(m[r:, col])))
            if abs(m[best, col]) <= self.threshold:
                m[r:, col] = 0
                continue
            m[[r, best]] = m[[best, r]]
            m[r] = m[r] / m[r, col]
            for k in range(nrows):
                if k != r:
                    m[k] = m[k] - m[k, col] * m[r]
            pivots.append(col)
            r += 1
        m[np.abs(m) <= self.threshold] = 0
        return ([tuple(complex(x) for x in m[k]) for k in range(r)],
                tuple(pivots))

    def det(self, rows):
        if not rows:
            return self.one
        return complex(np.linalg.det(np.array(
            [list(r) for r in rows], dtype=complex)))

    def __eq__(self, other):
        return (isinstance(other, NumericField) and
                other.tolerance == self.tolerance and
                other.magnitude == self.magnitude)

    def __hash__(self):
        return hash((NUMERIC_MODE, self.tolerance, self.magnitude))

    def __repr__(self):
        return "NumericField(tolerance={!r}, magnitude={!r})".format(
            self.tolerance, self.magnitude)


_EXACT = ExactField()


def get_field(mode=EXACT_MODE, tolerance=None, magnitude=1.0):
    """Returns the field backend for ``mode`` ("exact" or "numeric").

    :param float tolerance: Only used in numeric mode. Defaults to
      `DEFAULT_TOLERANCE`.
    :param float magnitude: The input magnitude for numeric zero tests.
    """
    if mode in (None, EXACT_MODE):
        if tolerance is not None:
            logger.getChild("exactfield").debug(
                "Ignoring tolerance %r in exact mode", tolerance)
        return _EXACT
    if mode == NUMERIC_MODE:
        return NumericField(tolerance, magnitude)
    raise ValueError("Unknown mode: {!r} (expected 'exact' or "
                     "'numeric')".format(mode))


class Matrix:
    """An immutable matrix over a field backend.

    :param field: The field backend.
    :param rows: The entries, as a sequence of rows.
    :param int ncols: The number of columns; required when there are no
      rows.
    :param bool convert: Whether to convert entries through the field.
    """
    def __init__(self, field, rows, ncols=None, convert=True):
        if convert:
            rows = tuple(tuple(field.convert(x) for x in row) for row in rows)
        else:
            rows = tuple(tuple(row) for row in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("ncols is required for an empty matrix")
            ncols = len(rows[0])
        if any(len(row) != ncols for row in rows):
            raise DimensionError("Ragged matrix rows")
        self.field = field
        self.rows = rows
        self.shape = (len(rows), ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, (field.unit(n, i) for i in range(n)), n, False)

    @classmethod
    def zeros(cls, field, m, n=None):
        n = m if n is None else n
        return cls(field, (field.zeros(n) for _ in range(m)), n, False)

    @classmethod
    def diagonal(cls, field, entries):
        entries = [field.convert(x) for x in entries]
        n = len(entries)
        return cls(field, (
            tuple(entries[i] if i == j else field.zero for j in range(n))
            for i in range(n)), n, False)

    @classmethod
    def from_columns(cls, field, columns, nrows=None):
        columns = [tuple(c) for c in columns]
        if not columns:
            return cls.zeros(field, nrows or 0, 0)
        return cls(field, zip(*columns), len(columns), False)

    @classmethod
    def outer(cls, field, u, v):
        return cls(field, (tuple(a * b for b in v) for a in u), len(v), False)

    @classmethod
    def blocks(cls, field, grid):
        """Assembles a block matrix from a grid of matrices."""
        rows = []
        for block_row in grid:
            height = block_row[0].shape[0]
            if any(b.shape[0] != height for b in block_row):
                raise DimensionError("Block heights differ")
            for k in range(height):
                rows.append(sum((b.rows[k] for b in block_row), ()))
        return cls(field, rows, sum(b.shape[1] for b in grid[0]), False)

    @property
    def nrows(self):
        return self.shape[0]

    @property
    def ncols(self):
        return self.shape[1]

    def __getitem__(self, index):
        if isinstance(index, tuple):
            i, j = index
            return self.rows[i][j]
        return self.rows[index]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def block(self, rows, cols):
        return Matrix(self.field, (
            tuple(self.rows[i][j] for j in cols) for i in rows),
            len(cols), False)

    def _check_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError("Shapes differ: {} and {}".format(
                self.shape, other.shape))

    def __add__(self, other):
        self._check_shape(other)
        return Matrix(self.field, (
            tuple(a + b for a, b in zip(r, s))
            for r, s in zip(self.rows, other.rows)), self.ncols, False)

    def __sub__(self, other):
        self._check_shape(other)
        return Matrix(self.field, (
            tuple(a - b for a, b in zip(r, s))
            for r, s in zip(self.rows, other.rows)), self.ncols, False)

    def __neg__(self):
        return self.scale(-self.field.one)

    def scale(self, c):
        c = self.field.convert(c)
        return Matrix(self.field, (
            tuple(c * a for a in r) for r in self.rows), self.ncols, False)

    def __matmul__(self, other):
        field = self.field
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError("Cannot multiply {} by {}".format(
                    self.shape, other.shape))
            cols = other.columns()
            return Matrix(field, (
                tuple(field.dot(r, c) for c in cols) for r in self.rows),
                other.ncols, False)
        if len(other) != self.ncols:
            raise DimensionError("Cannot apply {} matrix to a vector of "
                                 "length {}".format(self.shape, len(other)))
        return tuple(field.dot(r, other) for r in self.rows)

    def __call__(self, vector):
        return self @ vector

    @property
    def T(self):
        return Matrix(self.field, zip(*self.rows), self.nrows, False) \
            if self.nrows else Matrix.zeros(self.field, self.ncols, 0)

    def transpose(self):
        return self.T

    def conj(self):
        return Matrix(self.field, (self.field.vconj(r) for r in self.rows),
                      self.ncols, False)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(self.field.equal_vectors(r, s)
                   for r, s in zip(self.rows, other.rows))

    __hash__ = None

    def is_zero(self):
        return all(self.field.is_zero_vector(r) for r in self.rows)

    def is_square(self):
        return self.nrows == self.ncols

    def is_symmetric(self):
        return self.is_square() and self == self.T

    def is_real(self):
        return all(self.field.is_real_vector(r) for r in self.rows)

    def trace(self):
        if not self.is_square():
            raise DimensionError("Trace of a non-square matrix")
        total = self.field.zero
        for i in range(self.nrows):
            total += self.rows[i][i]
        return total

    def det(self):
        if not self.is_square():
            raise DimensionError("Determinant of a non-square matrix")
        return self.field.det(self.rows)

    def rref(self):
        return self.field.rref(self.rows, self.ncols)

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        return kernel(self)

    def image(self):
        return ComplexSubspace(self.field, self.nrows, self.columns())

    def inverse(self):
        field = self.field
        n = self.nrows
        if not self.is_square():
            raise DimensionError("Inverse of a non-square matrix")
        augmented = [r + field.unit(n, i) for i, r in enumerate(self.rows)]
        reduced, pivots = field.rref(augmented, 2 * n)
        if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) < n:
            raise ZeroDivisionError("Matrix is singular")
        return Matrix(field, (r[n:] for r in reduced[:n]), n, False)

    def to_json(self):
        return [[self.field.to_json(a) for a in r] for r in self.rows]

    def __repr__(self):
        return "Matrix([{}])".format(", ".join(
            self.field.format_vector(r) for r in self.rows))


class ComplexSubspace:
    """A complex subspace of a coordinate space, stored as the reduced row
    echelon form of a spanning set (zero rows dropped). Two subspaces are
    equal exactly when their canonical bases are.

    :param field: The field backend.
    :param int dim: The dimension of the ambient space.
    :param vectors: A spanning set.
    """
    def __init__(self, field, dim, vectors=()):
        vectors = [tuple(v) for v in vectors]
        if any(len(v) != dim for v in vectors):
            raise DimensionError("Vectors must have length {}".format(dim))
        self.field = field
        self.dim = dim
        self.basis, self.pivots = field.rref(vectors, dim)
        self.basis = tuple(self.basis)

    @classmethod
    def zero(cls, field, dim):
        return cls(field, dim)

    @classmethod
    def full(cls, field, dim):
        return cls(field, dim, (field.unit(dim, i) for i in range(dim)))

    @property
    def rank(self):
        return len(self.basis)

    def __len__(self):
        return self.rank

    def is_zero(self):
        return self.rank == 0

    def is_full(self):
        return self.rank == self.dim

    def residual(self, vector):
        """Reduces ``vector`` against the basis. The result is zero exactly
        when ``vector`` lies in this subspace.
        """
        field = self.field
        v = list(vector)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if field.is_zero(c):
                continue
            for k in range(self.dim):
                v[k] -= c * row[k]
        return tuple(v)

    def contains(self, vector):
        if len(vector) != self.dim:
            raise DimensionError("Vector must have length {}".format(
                self.dim))
        return self.field.is_zero_vector(self.residual(vector))

    def __contains__(self, vector):
        return self.contains(vector)

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.basis)

    def _check_dim(self, other):
        if self.dim != other.dim:
            raise DimensionError(
                "Subspaces of different ambient spaces: {} and {}".format(
                    self.dim, other.dim))

    def __eq__(self, other):
        if not isinstance(other, ComplexSubspace):
            return NotImplemented
        self._check_dim(other)
        return (self.rank == other.rank and
                self.contains_subspace(other))

    __hash__ = None

    def __add__(self, other):
        self._check_dim(other)
        return ComplexSubspace(self.field, self.dim,
                               self.basis + other.basis)

    def annihilator(self):
        """Returns the subspace of coefficient vectors ``a`` with
        ``sum(a[k] * v[k]) == 0`` for every ``v`` in this subspace.
        """
        if self.is_zero():
            return ComplexSubspace.full(self.field, self.dim)
        return kernel(Matrix(self.field, self.basis, self.dim, False))

    def intersect(self, other):
        return intersect(self, other)

    def conj(self):
        return ComplexSubspace(self.field, self.dim,
                               (self.field.vconj(v) for v in self.basis))

    def map(self, matrix):
        """Returns the image of this subspace under ``matrix``."""
        if matrix.ncols != self.dim:
            raise DimensionError("Cannot map a subspace of dimension {} "
                                 "with a {} matrix".format(self.dim,
                                                           matrix.shape))
        return ComplexSubspace(self.field, matrix.nrows,
                               (matrix @ v for v in self.basis))

    def to_json(self):
        return [[self.field.to_json(a) for a in v] for v in self.basis]

    def __repr__(self):
        return "ComplexSubspace(dim={}, basis=[{}])".format(
            self.dim, ", ".join(self.field.format_vector(v)
                                for v in self.basis))


def rref(matrix):
    """Returns ``(reduced, rank)``: the reduced row echelon form of
    ``matrix`` (zero rows dropped) and its rank.
    """
    rows, pivots = matrix.rref()
    return Matrix(matrix.field, rows, matrix.ncols, False), len(pivots)


def kernel(matrix):
    """Returns the kernel of ``matrix`` as a `ComplexSubspace`."""
    field = matrix.field
    n = matrix.ncols
    rows, pivots = matrix.rref()
    pivot_set = set(pivots)
    vectors = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [field.zero] * n
        v[free] = field.one
        for row, p in zip(rows, pivots):
            v[p] = -row[free]
        vectors.append(tuple(v))
    return ComplexSubspace(field, n, vectors)


def eigenspace(matrix, value):
    """Returns the eigenspace of ``matrix`` for the eigenvalue ``value``
    (the zero subspace if ``value`` is not an eigenvalue).
    """
    if not matrix.is_square():
        raise DimensionError("Eigenspace of a non-square matrix")
    field = matrix.field
    shifted = matrix - Matrix.identity(field, matrix.nrows).scale(value)
    return kernel(shifted)


def intersect(a, b):
    """Returns the intersection of two subspaces of the same space."""
    if a.dim != b.dim:
        raise DimensionError(
            "Cannot intersect subspaces of dimensions {} and {}".format(
                a.dim, b.dim))
    conditions = a.annihilator().basis + b.annihilator().basis
    if not conditions:
        return ComplexSubspace.full(a.field, a.dim)
    return kernel(Matrix(a.field, conditions, a.dim, False))


def solve_affine(matrix, rhs):
    """Solves ``matrix @ x == rhs``.

    :returns: ``(particular, kernel)``, where ``particular`` is one solution
      (or ``None`` when the system is inconsistent) and ``kernel`` is the
      solution space of the homogeneous system.
    """
    field = matrix.field
    n = matrix.ncols
    if len(rhs) != matrix.nrows:
        raise DimensionError("Right-hand side must have length {}".format(
            matrix.nrows))
    augmented = [row + (b,) for row, b in zip(matrix.rows, rhs)]
    rows, pivots = field.rref(augmented, n + 1)
    if pivots and pivots[-1] == n:
        return None, kernel(matrix)
    x = [field.zero] * n
    for row, p in zip(rows, pivots):
        x[p] = row[n]
    return tuple(x), kernel(matrix)
