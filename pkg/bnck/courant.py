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

"""The Courant algebroid ``E = g + g* + R`` of type Bn over a Lie algebra,
twisted by a closed 2-form F and a 3-form H with ``dH = -F ^ F``.

Sections are left-invariant and are represented by coordinate tuples of
length ``2n + 1`` in the block order (vectors, covectors, scalar).
"""

from .decorators import cached_attr, document_attr
from .exactfield import Matrix
from .liealg import KForm, ce_differential
from .reports import check, collects_checks
from .utils import DimensionError, InvariantError, logger
from collections import namedtuple

__all__ = ["Parts", "BnAlgebroid", "Twist", "split", "join",
           "scalar_product", "gram", "dorfman", "check_axioms",
           "dorfman_lie_derivative", "twist_isomorphism", "verify_twist",
           "section_labels"]

Parts = namedtuple("Parts", ["vector", "covector", "scalar"])
Twist = namedtuple("Twist", ["isomorphism", "algebroid"])
Twist.__doc__ = """The result of `twist_isomorphism`: the bundle map and the
algebroid it maps to."""


def split(u):
    """Splits a section into its `Parts`."""
    if len(u) % 2 != 1:
        raise DimensionError("A section has odd length 2n + 1, not {}".format(
            len(u)))
    n = (len(u) - 1) // 2
    return Parts(tuple(u[:n]), tuple(u[n:2 * n]), u[2 * n])


def join(vector, covector, scalar):
    if len(vector) != len(covector):
        raise DimensionError("Vector and covector lengths differ")
    return tuple(vector) + tuple(covector) + (scalar,)


def section_labels(n):
    """Labels of the basis sections: ``e1, ..., e1*, ..., 1``."""
    return (["e{}".format(i + 1) for i in range(n)] +
            ["e{}*".format(i + 1) for i in range(n)] + ["1"])


def scalar_product(field, u, v):
    """``<X + xi + l, Y + eta + m> = (eta(X) + xi(Y)) / 2 + l m``."""
    if len(u) != len(v):
        raise DimensionError("Sections of different algebroids")
    a, b = split(u), split(v)
    return (field.half * (field.dot(b.covector, a.vector) +
                          field.dot(a.covector, b.vector)) +
            a.scalar * b.scalar)


def gram(field, n):
    """The Gram matrix of the scalar product in the section basis."""
    half = Matrix.identity(field, n).scale(field.half)
    zero = Matrix.zeros(field, n)
    return Matrix.blocks(field, [
        [zero, half, Matrix.zeros(field, n, 1)],
        [half, zero, Matrix.zeros(field, n, 1)],
        [Matrix.zeros(field, 1, n), Matrix.zeros(field, 1, n),
         Matrix.identity(field, 1)],
    ])


class BnAlgebroid:
    """A Courant algebroid of type Bn over a Lie algebra.

    :param LieAlgebra lie_algebra: The underlying Lie algebra.
    :param KForm H: A 3-form; defaults to zero.
    :param KForm F: A closed 2-form; defaults to zero.
    :raises InvariantError: if ``dF != 0`` or ``dH != -F ^ F``.
    """
    def __init__(self, lie_algebra, H=None, F=None):
        field = lie_algebra.field
        n = lie_algebra.dim
        H = KForm.zero(field, n, 3) if H is None else H
        F = KForm.zero(field, n, 2) if F is None else F
        if H.degree != 3 or H.dim != n:
            raise DimensionError("H must be a 3-form on dimension {}".format(
                n))
        if F.degree != 2 or F.dim != n:
            raise DimensionError("F must be a 2-form on dimension {}".format(
                n))
        dF = ce_differential(lie_algebra, F)
        if not dF.is_zero():
            raise InvariantError(
                "F", "F is not closed: dF = {}".format(dF.to_json()))
        twist = ce_differential(lie_algebra, H) + F.wedge(F)
        if not twist.is_zero():
            raise InvariantError(
                "H", "the twist condition dH = -F^F fails: dH + F^F = "
                "{}".format(twist.to_json()))
        self._lie_algebra = lie_algebra
        self._H = H
        self._F = F
        self._field = field

    @document_attr
    def lie_algebra(self):
        """The underlying Lie algebra.

        :type: `LieAlgebra`
        """

    @document_attr
    def H(self):
        """The twisting 3-form.

        :type: `KForm`
        """

    @document_attr
    def F(self):
        """The twisting closed 2-form.

        :type: `KForm`
        """

    @document_attr
    def field(self):
        """The field backend."""

    @property
    def dim(self):
        return self.lie_algebra.dim

    @property
    def rank(self):
        return 2 * self.dim + 1

    def basis(self):
        return [self.field.unit(self.rank, a) for a in range(self.rank)]

    def labels(self):
        return section_labels(self.dim)

    def scalar_product(self, u, v):
        return scalar_product(self.field, u, v)

    @cached_attr
    def gram(self):
        """The Gram matrix of the scalar product.

        :type: `Matrix`
        """
        return gram(self.field, self.dim)

    def anchor(self, u):
        return split(u).vector

    def anchor_matrix(self):
        n = self.dim
        return Matrix.blocks(self.field, [[
            Matrix.identity(self.field, n), Matrix.zeros(self.field, n),
            Matrix.zeros(self.field, n, 1)]])

    def dorfman(self, u, v):
        return dorfman(self, u, v)

    @cached_attr
    def bracket_table(self):
        """``bracket_table[a][b]`` is the Dorfman bracket of the basis
        sections ``a`` and ``b``.
        """
        basis = self.basis()
        return tuple(tuple(dorfman(self, u, v) for v in basis)
                     for u in basis)

    def bracket(self, u, v):
        """The Dorfman bracket, extended bilinearly from the basis table
        (so complex sections are allowed).
        """
        field = self.field
        table = self.bracket_table
        if len(u) != self.rank or len(v) != self.rank:
            raise DimensionError("Sections must have length {}".format(
                self.rank))
        return field.lincomb((
            (u[a] * v[b], table[a][b])
            for a in range(self.rank) if not field.is_zero(u[a])
            for b in range(self.rank) if not field.is_zero(v[b])
        ), self.rank)

    def with_forms(self, H=None, F=None):
        return BnAlgebroid(self.lie_algebra,
                           self.H if H is None else H,
                           self.F if F is None else F)

    def to_json(self):
        return {
            "lie_algebra": self.lie_algebra.to_json(),
            "H": self.H.to_json(),
            "F": self.F.to_json(),
        }

    def __repr__(self):
        return "<BnAlgebroid n={} H={} F={}>".format(
            self.dim, len(self.H.items()), len(self.F.items()))


def dorfman(algebroid, u, v):
    """The twisted Dorfman bracket of two left-invariant sections
    ``u = X + xi + l`` and ``v = Y + eta + m``::

        [u, v] = [X, Y]
                 + L_X eta - i_Y d xi + i_X i_Y H - 2 (m i_X F - l i_Y F)
                 + F(X, Y)

    with ``i_X i_Y H = H(Y, X, .)``. On so(3) with ``H = -e123`` this
    gives ``[e1, e2] = e3 + e3*`` and ``[e1, e3*] = -e2*``.
    """
    A = algebroid
    L = A.lie_algebra
    field = A.field
    n = A.dim
    if len(u) != A.rank or len(v) != A.rank:
        raise DimensionError("Sections must have length {}".format(A.rank))
    x, xi, lam = split(u)
    y, eta, mu = split(v)
    basis = L.basis()
    two = field.fraction(2)
    covector = []
    for k in range(n):
        # L_X eta (e_k) = d eta (X, e_k) = -eta([X, e_k])
        value = -field.dot(eta, L.bracket(x, basis[k]))
        # (i_Y d xi)(e_k) = -xi([Y, e_k])
        value += field.dot(xi, L.bracket(y, basis[k]))
        covector.append(value)
    covector = field.add(covector, A.H.interior(y).interior(x).covector())
    F = A.F.as_matrix()
    x_f = F.T @ x
    y_f = F.T @ y
    covector = field.sub(covector, field.scale(two * mu, x_f))
    covector = field.add(covector, field.scale(two * lam, y_f))
    return join(L.bracket(x, y), covector, field.dot(x_f, y))


def _triple_label(labels, *indices):
    return [labels[a] for a in indices]


@collects_checks("axioms")
def check_axioms(algebroid):
    """Checks the Courant axioms on all basis sections. With constant
    coefficients the anchor terms of C4 and C5 vanish and C3 reduces to
    bilinearity, which holds by construction.
    """
    A = algebroid
    field = A.field
    rank = A.rank
    T = A.bracket_table
    labels = A.labels()
    Q = A.gram

    def combine(coeffs, index):
        return field.lincomb(((c, T[index][d]) for d, c in enumerate(coeffs)),
                             rank)

    def combine_right(coeffs, index):
        return field.lincomb(((c, T[d][index]) for d, c in enumerate(coeffs)),
                             rank)

    leibniz = None
    for a in range(rank):
        for b in range(rank):
            for c in range(rank):
                lhs = combine(T[b][c], a)
                first = combine_right(T[a][b], c)
                second = combine(T[a][c], b)
                residual = field.sub(lhs, field.add(first, second))
                if not field.is_zero_vector(residual):
                    leibniz = {"triple": _triple_label(labels, a, b, c),
                               "residual": residual}
                    break
            if leibniz:
                break
        if leibniz:
            break
    yield check("C1 (Leibniz identity)", leibniz is None, leibniz)

    L = A.lie_algebra
    anchor = None
    for a in range(rank):
        for b in range(rank):
            residual = field.sub(
                A.anchor(T[a][b]),
                L.bracket(A.anchor(A.basis()[a]), A.anchor(A.basis()[b])))
            if anchor is None and not field.is_zero_vector(residual):
                anchor = {"pair": _triple_label(labels, a, b),
                          "residual": residual}
    yield check("C2 (anchor is a bracket morphism)", anchor is None, anchor)

    yield check("C3 (constant coefficients: reduces to bilinearity)", True)

    products = [[Q @ T[a][b] for b in range(rank)] for a in range(rank)]
    invariance = None
    for a in range(rank):
        for b in range(rank):
            for c in range(rank):
                residual = products[a][b][c] + products[a][c][b]
                if invariance is None and not field.is_zero(residual):
                    invariance = {"triple": _triple_label(labels, a, b, c),
                                  "residual": residual}
    yield check("C4 (<[u,v],w> + <v,[u,w]> = 0)", invariance is None,
                invariance)

    symmetric = None
    for a in range(rank):
        for b in range(a, rank):
            for c in range(rank):
                residual = products[a][b][c] + products[b][a][c]
                if symmetric is None and not field.is_zero(residual):
                    symmetric = {"triple": _triple_label(labels, a, b, c),
                                 "residual": residual}
    yield check("C5 (<[u,u],v> = 0)", symmetric is None, symmetric)


def dorfman_lie_derivative(algebroid, u, endo):
    """The Dorfman Lie derivative ``(L_u T)(v) = [u, Tv] - T[u, v]``."""
    A = algebroid
    field = A.field
    columns = []
    for v in A.basis():
        columns.append(field.sub(A.bracket(u, endo @ v),
                                 endo @ A.bracket(u, v)))
    return Matrix.from_columns(field, columns, A.rank)


def twist_isomorphism(algebroid, b=None, a_form=None, verify=True):
    """The isomorphism from the algebroid twisted by ``(H, F)`` to the one
    twisted by ``(H - db - (2F + dA) ^ A, F + dA)``::

        I(X) = X - i_X b - A(X) A - A(X),  I(eta) = eta,
        I(m) = 2 m A + m

    :param KForm b: A 2-form; defaults to zero.
    :param KForm a_form: A 1-form; defaults to zero.
    :param bool verify: Whether to check the result with `verify_twist`.
    :raises ReportError: if verification fails.
    :rtype: `Twist`
    """
    A = algebroid
    L = A.lie_algebra
    field = A.field
    n = A.dim
    b = KForm.zero(field, n, 2) if b is None else b
    a_form = KForm.zero(field, n, 1) if a_form is None else a_form
    if b.degree != 2 or a_form.degree != 1:
        raise DimensionError("b must be a 2-form and A a 1-form")
    a = a_form.covector()
    two = field.fraction(2)
    columns = []
    for i in range(n):
        e = field.unit(n, i)
        covector = field.sub(field.neg(b.interior(e).covector()),
                             field.scale(a[i], a))
        columns.append(join(e, covector, -a[i]))
    for i in range(n):
        columns.append(join(field.zeros(n), field.unit(n, i), field.zero))
    columns.append(join(field.zeros(n), field.scale(two, a), field.one))
    isomorphism = Matrix.from_columns(field, columns, A.rank)

    d_a = ce_differential(L, a_form)
    H = (A.H - ce_differential(L, b) -
         (A.F.scale(two) + d_a).wedge(a_form))
    F = A.F + d_a
    twist = Twist(isomorphism, BnAlgebroid(L, H, F))
    if verify:
        report = verify_twist(A, twist)
        if not report.passed:
            raise report.to_exception("twist")
        logger.getChild("courant").debug("Twist verified on %d sections",
                                         A.rank)
    return twist


@collects_checks("twist")
def verify_twist(algebroid, twist):
    """Checks that a twist is orthogonal and intertwines the brackets on
    all basis pairs.
    """
    A = algebroid
    field = A.field
    iso, target = twist
    Q = A.gram
    yield check("I preserves the scalar product", iso.T @ Q @ iso == Q)
    labels = A.labels()
    images = iso.columns()
    failure = None
    for a, u in enumerate(A.basis()):
        for b, v in enumerate(A.basis()):
            residual = field.sub(iso @ A.bracket(u, v),
                                 target.bracket(images[a], images[b]))
            if failure is None and not field.is_zero_vector(residual):
                failure = {"pair": [labels[a], labels[b]],
                           "residual": residual}
    yield check("I intertwines the Dorfman brackets", failure is None,
                failure)
