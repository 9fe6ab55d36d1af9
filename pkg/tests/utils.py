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

from bnck import BnAlgebroid, ComponentsEven, ComponentsOdd, KForm
from bnck import LieAlgebra, Matrix, PseudoMetric, get_entry, get_field
from bnck import serialize
from bnck.courant import twist_isomorphism
from bnck.structures import complex_structure_around
from hypothesis import assume
from fractions import Fraction
from itertools import combinations
import hypothesis.strategies as st
import json
import os
import tempfile

exact = get_field()


def so3(field=exact):
    return LieAlgebra.from_brackets(field, 3, {
        (0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})


def heisenberg(field=exact):
    return LieAlgebra.from_brackets(field, 3, {(0, 1): {2: 1}})


def solvable(field=exact):
    """[e1, e2] = e2, the three-dimensional algebra r2 x R."""
    return LieAlgebra.from_brackets(field, 3, {(0, 1): {1: 1}})


def iso2_instance(field=exact, **parameters):
    values = dict(lam=1, eps=1, sign=1, orient_plus=1, orient_minus=1)
    values.update(parameters)
    return get_entry("DIM3-ISO2").generate(field, **values)


def dim2_instance(field=exact, y=Fraction(3, 5)):
    return get_entry("DIM2-ABELIAN").generate(
        field, y=y, eps=1, eps0=1, eps_plus=1)


def so3_structure(field=exact, H=None):
    """X+- = e3 on so(3) with the identity metric."""
    metric = PseudoMetric.diag(field, [1, 1, 1])
    x = field.unit(3, 2)
    j = complex_structure_around(metric, x)
    return (BnAlgebroid(so3(field), H),
            ComponentsOdd(metric, j, j, x, x))


def form(field, dim, degree, values):
    keys = list(combinations(range(dim), degree))
    return KForm(field, dim, degree, dict(zip(keys, values)))


def rationals(bound=3, denominator=4):
    return st.fractions(min_value=-bound, max_value=bound,
                        max_denominator=denominator)


def forms(field, dim, degree):
    count = len(list(combinations(range(dim), degree)))
    return st.lists(rationals(), min_size=count, max_size=count).map(
        lambda values: form(field, dim, degree, values))


def vectors(dim):
    return st.lists(rationals(), min_size=dim, max_size=dim)


def write_document(test, document):
    """Writes ``document`` to a temporary JSON file removed after
    ``test``.
    """
    if not isinstance(document, str):
        document = json.dumps(document)
    fd, path = tempfile.mkstemp(suffix=".json")
    with os.fdopen(fd, "w", encoding="utf-8") as f:
        f.write(document)
    test.addCleanup(os.remove, path)
    return path


def instance_document(instance):
    return serialize(instance.algebroid, components=instance.components)


def lie_algebras(dims=(2, 3, 4)):
    """A sample of Lie algebras of the given dimensions."""
    return st.sampled_from([L for L in [
        LieAlgebra.abelian(exact, 2),
        LieAlgebra.from_brackets(exact, 2, {(0, 1): {1: 1}}),
        so3(), heisenberg(), solvable(),
        LieAlgebra.abelian(exact, 4),
        LieAlgebra.from_brackets(exact, 4, {(0, 1): {1: 1}, (0, 2): {3: 1},
                                            (0, 3): {2: -1}}),
        LieAlgebra.from_brackets(exact, 4, {(0, 1): {2: 1}, (0, 2): {3: 1}}),
    ] if L.dim in dims])


@st.composite
def twisted_algebroids(draw, dim):
    """``BnAlgebroid(L)`` twisted by a random ``(b, A)``, which gives a
    random admissible ``(H, F)``.
    """
    L = draw(lie_algebras([dim]))
    b = draw(forms(exact, dim, 2))
    a_form = draw(forms(exact, dim, 1))
    return twist_isomorphism(BnAlgebroid(L), b, a_form).algebroid


@st.composite
def circle_points(draw, sign=1):
    """Rational ``(a, b)`` with ``a^2 + sign * b^2 = 1`` and ``b != 0``."""
    t = draw(rationals().filter(lambda t: t != 0 and t * t != 1))
    if sign > 0:
        return (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)
    return (1 + t * t) / (2 * t), (1 - t * t) / (2 * t)


@st.composite
def unipotent(draw, n):
    """A random upper unitriangular basis change."""
    rows = []
    for i in range(n):
        rows.append([1 if i == j else draw(rationals()) if j > i else 0
                     for j in range(n)])
    return Matrix(exact, rows)


def change_basis(components, change):
    """The components expressed in the basis given by the columns of
    ``change``.
    """
    inverse = change.inverse()
    metric = PseudoMetric(exact, change.T @ components.metric.matrix @ change)
    values = dict(
        metric=metric,
        j_plus=inverse @ components.j_plus @ change,
        j_minus=inverse @ components.j_minus @ change,
        x_plus=inverse @ components.x_plus,
        x_minus=inverse @ components.x_minus)
    return components.with_fields(**values)


@st.composite
def odd_components(draw):
    """Random valid `ComponentsOdd` in dimension 3, for the metrics
    ``diag(1, 1, 1)`` and ``diag(-1, -1, 1)`` in a random basis.
    """
    s = draw(st.sampled_from([1, -1]))
    metric = PseudoMetric.diag(exact, [s, s, 1])

    def unit_vector():
        t, u = draw(rationals()), draw(rationals())
        r = t * t + u * u
        if s > 0:
            return exact.vector([2 * t / (1 + r), 2 * u / (1 + r),
                                 (1 - r) / (1 + r)])
        assume(r != 1)
        return exact.vector([2 * t / (1 - r), 2 * u / (1 - r),
                             (1 + r) / (1 - r)])

    x_plus, x_minus = unit_vector(), unit_vector()
    j_plus = complex_structure_around(
        metric, x_plus, draw(st.sampled_from([1, -1])))
    j_minus = complex_structure_around(
        metric, x_minus, draw(st.sampled_from([1, -1])))
    components = ComponentsOdd(metric, j_plus, j_minus, x_plus, x_minus)
    return change_basis(components, draw(unipotent(3)))


def _block_diagonal(blocks):
    zero = Matrix.zeros(exact, 2)
    return Matrix.blocks(exact, [
        [block if i == j else zero for j in range(len(blocks))]
        for i, block in enumerate(blocks)])


@st.composite
def even_components(draw, dim=2):
    """Random valid non-null `ComponentsEven` in dimension 2 or 4. The
    metric is ``diag(s1, s1, s2, s2)`` in a random basis, X+- span the first
    plane and J+ is a rotation on the second.
    """
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=dim // 2,
                          max_size=dim // 2))
    metric = PseudoMetric.diag(exact, [s for s in signs for _ in "xy"])
    c, k = draw(circle_points(signs[0]))
    p, q = draw(circle_points())
    sigma = draw(st.sampled_from([1, -1]))
    padding = [0] * (dim - 2)
    x_plus = exact.vector([k * p, k * q] + padding)
    x_minus = exact.vector([-sigma * k * q, sigma * k * p] + padding)
    rotation = Matrix(exact, [[0, -1], [1, 0]])
    j_plus = _block_diagonal(
        [rotation.scale(exact.convert(-sigma * c))] +
        [rotation.scale(exact.convert(draw(st.sampled_from([1, -1]))))
         for _ in signs[1:]])
    j_minus = _block_diagonal(
        [rotation.scale(exact.convert(draw(st.sampled_from([1, -1]))))
         for _ in signs])
    components = ComponentsEven(metric, j_plus, j_minus, x_plus, x_minus, c)
    return change_basis(components, draw(unipotent(dim)))
