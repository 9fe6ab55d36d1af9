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

from .tests import BaseTest
from .utils import dim2_instance, even_components, exact, forms
from .utils import iso2_instance, lie_algebras, odd_components
from .utils import so3_structure
from bnck.classify import get_entry
from bnck.courant import BnAlgebroid, gram
from bnck.exactfield import ComplexSubspace, Matrix, get_field
from bnck.liealg import KForm, LieAlgebra, PseudoMetric
from bnck.structures import BnACS, ComponentsEven, ComponentsOdd
from bnck.structures import GenMetric, admissibility_check, assemble
from bnck.structures import complex_structure_around, components_for
from bnck.structures import closed_form_eigenbundles, direct_eigenbundles
from bnck.structures import eigenbundles, extract, twisted_e_minus
from bnck.utils import DimensionError, InadmissibleParameters
from bnck.utils import InvariantError
from hypothesis import given, settings
from fractions import Fraction
import hypothesis.strategies as st
import unittest


def line_structure():
    """g = (1), J+- = 0 and X+- = v1 on the real line."""
    metric = PseudoMetric.diag(exact, [1])
    zero = Matrix.zeros(exact, 1)
    return GenMetric(metric), ComponentsOdd(metric, zero, zero, (1,), (1,))


def dim4_instance(field=exact):
    return get_entry("DIM4-ADAPTED").generate(
        field, lam=1, beta=0, eps1=1, eps2=1, a=Fraction(3, 5), b=0,
        c_plus=Fraction(4, 5))


class TestGenMetric(BaseTest):
    def test_gend_is_an_involution(self):
        for entries in [[1], [2], [1, -1, 3], [-1, -1, 1, 1]]:
            gm = GenMetric(PseudoMetric.diag(exact, entries))
            self.assertEqual(gm.gend @ gm.gend,
                             Matrix.identity(exact, gm.rank))
            self.assertTrue(gm.bilinear.is_symmetric())
            self.assertEqual(gm.induced_metric(), gm.metric)

    def test_line_gend(self):
        gm = GenMetric(PseudoMetric.diag(exact, [2]))
        self.assertEqual(gm.gend, Matrix(exact, [
            [0, Fraction(1, 2), 0], [2, 0, 0], [0, 0, 1]]))
        self.assertEqual(gm.rank, 3)

    def test_bundles(self):
        gm = GenMetric(PseudoMetric.diag(exact, [1, -1, 1]))
        minus = gm.e_minus()
        plus = gm.e_plus()
        self.assertEqual(minus.rank, 3)
        self.assertEqual(plus.rank, 4)
        self.assertTrue((minus + plus).is_full())
        for u in minus.basis:
            self.assertEqualVectors(exact, gm.gend @ u, exact.neg(u))
        for u in plus.basis:
            self.assertEqualVectors(exact, gm.gend @ u, u)

    def test_from_twisted(self):
        L = LieAlgebra.abelian(exact, 2)
        b = KForm(exact, 2, 2, {(0, 1): 1})
        gm, twist = GenMetric.from_twisted(
            BnAlgebroid(L), PseudoMetric.diag(exact, [1, 1]), b)
        self.assertEqual(gm.dim, 2)
        self.assertTrue(twist.algebroid.H.is_zero())

    @settings(deadline=None, max_examples=20)
    @given(st.data())
    def test_random_twists(self, data):
        L = data.draw(lie_algebras())
        n = L.dim
        entries = data.draw(st.lists(
            st.sampled_from([1, -1, 2, Fraction(1, 4)]), min_size=n,
            max_size=n))
        metric = PseudoMetric.diag(exact, entries)
        b = data.draw(forms(exact, n, 2))
        a_form = data.draw(forms(exact, n, 1))
        gm, twist = GenMetric.from_twisted(BnAlgebroid(L), metric, b, a_form)
        source = twisted_e_minus(metric, b, a_form)
        self.assertEqual(source.rank, n)
        image = ComplexSubspace(exact, gm.rank, (
            twist.isomorphism @ u for u in source.basis))
        self.assertEqual(image, GenMetric(metric).e_minus())

    def test_from_twisted_checks_the_image(self):
        metric = PseudoMetric.diag(exact, [1, 1])
        self.patch("bnck.structures.twisted_e_minus",
                   return_value=GenMetric(metric).e_plus())
        with self.assertRaises(InvariantError) as cm:
            GenMetric.from_twisted(
                BnAlgebroid(LieAlgebra.abelian(exact, 2)), metric,
                KForm(exact, 2, 2, {(0, 1): 1}))
        self.assertEqual(cm.exception.path, "metric")


class TestComponents(BaseTest):
    def test_line_assembly(self):
        gm, comps = line_structure()
        acs = assemble(gm, comps)
        half = Fraction(-1, 2)
        self.assertEqual(acs.matrix, Matrix(exact, [
            [0, 0, 1], [0, 0, 1], [half, half, 0]]))
        self.assertEqualVectors(exact, acs.u0, exact.vector([1, -1, 0]))
        one = exact.unit(3, 2)
        self.assertEqualVectors(exact, acs.matrix @ (acs.matrix @ one),
                                exact.neg(one))
        self.assertEqual(BnACS.from_matrix(acs.matrix, 1), acs)

    def test_line_eigenbundles(self):
        gm, comps = line_structure()
        bundles = direct_eigenbundles(gm, assemble(gm, comps))
        self.assertEqual(bundles.l1.rank, 1)
        self.assertTrue(bundles.l1.contains(
            (exact.one, exact.one, exact.i)))
        self.assertTrue(bundles.l1_minus.is_zero())
        self.assertEqual(bundles.l1_plus, bundles.l1)

    def test_plane_kernel_section(self):
        instance = dim2_instance()
        gm = GenMetric(instance.components.metric)
        acs = assemble(gm, instance.components)
        f = Fraction
        self.assertEqualVectors(exact, acs.u0, exact.vector(
            [0, f(3, 5), 0, f(3, 5), f(4, 5)]))
        self.assertTrue(exact.is_zero_vector(acs.matrix @ acs.u0))

    def test_extract_round_trip(self):
        for instance in [iso2_instance(), iso2_instance(sign=-1, eps=-1),
                         dim2_instance(), dim4_instance()]:
            comps = instance.components
            gm = GenMetric(comps.metric)
            self.assertEqual(extract(gm, assemble(gm, comps)),
                             comps.normalized())

    def test_extract_requires_commuting(self):
        gm, comps = line_structure()
        acs = assemble(gm, comps)
        other = GenMetric(PseudoMetric.diag(exact, [4]))
        with self.assertRaises(InvariantError):
            extract(other, acs)

    def test_assemble_requires_same_metric(self):
        _, comps = line_structure()
        with self.assertRaises(InvariantError):
            assemble(GenMetric(PseudoMetric.diag(exact, [4])), comps)

    def test_invalid_components(self):
        A, comps = so3_structure()
        with self.assertRaises(InvariantError) as cm:
            comps.with_fields(x_plus=(0, 0, 2))
        self.assertEqual(cm.exception.path, "structure.X_plus")
        with self.assertRaises(InvariantError) as cm:
            comps.with_fields(j_minus=Matrix.zeros(exact, 3))
        self.assertEqual(cm.exception.path, "structure.J_minus")
        with self.assertRaises(InvariantError) as cm:
            components_for(comps.metric, comps.j_plus, comps.j_minus,
                           comps.x_plus, comps.x_minus, c_plus=0)
        self.assertEqual(cm.exception.path, "structure.c_plus")
        with self.assertRaises(DimensionError):
            ComponentsEven(comps.metric, comps.j_plus, comps.j_minus,
                           comps.x_plus, comps.x_minus, 0)

    def test_even_components(self):
        comps = dim2_instance().components
        self.assertTrue(exact.equal(comps.c_plus, exact.fraction(4, 5)))
        self.assertFalse(comps.is_null())
        with self.assertRaises(InvariantError) as cm:
            comps.with_fields(c_plus=Fraction(3, 5))
        self.assertEqual(cm.exception.path, "structure.X_plus")
        flipped = comps.with_fields(x_plus=exact.neg(comps.x_plus),
                                    c_plus=-comps.c_plus)
        self.assertEqual(flipped.normalized(), comps)

    def test_invalid_structure(self):
        with self.assertRaises(InvariantError):
            BnACS(Matrix.identity(exact, 3), (1, -1, 0), 1)
        with self.assertRaises(DimensionError):
            BnACS(Matrix.identity(exact, 3), (1, -1, 0), 2)


class TestEigenbundles(BaseTest):
    def test_catalog_instances(self):
        for instance in [iso2_instance(), iso2_instance(lam=2, eps=-1),
                         dim2_instance(), dim4_instance()]:
            comps = instance.components
            gm = GenMetric(comps.metric)
            bundles = eigenbundles(gm, assemble(gm, comps), comps)
            self.assertEqual(bundles.l1.rank, gm.dim)
            self.assertEqual(bundles.l1, bundles.l1_plus + bundles.l1_minus)
            Q = gram(exact, gm.dim)
            for u in bundles.l1.basis:
                for v in bundles.l1.basis:
                    self.assertTrue(exact.is_zero(exact.dot(u, Q @ v)))

    def test_numeric(self):
        field = get_field("numeric")
        comps = iso2_instance(field).components
        gm = GenMetric(comps.metric)
        acs = assemble(gm, comps)
        self.assertEqual(eigenbundles(gm, acs).l1.rank, 3)
        self.assertEqual(extract(gm, acs), comps.normalized())

    def check_random(self, comps):
        gm = GenMetric(comps.metric)
        acs = assemble(gm, comps)
        direct = direct_eigenbundles(gm, acs)
        self.assertEqual(direct.l1.rank, gm.dim)
        self.assertEqual(direct, closed_form_eigenbundles(gm, comps))
        self.assertEqual(extract(gm, acs), comps.normalized())

    @settings(deadline=None, max_examples=100)
    @given(odd_components())
    def test_random_odd(self, comps):
        self.check_random(comps)

    @settings(deadline=None, max_examples=100)
    @given(st.sampled_from([2, 4]).flatmap(even_components))
    def test_random_even(self, comps):
        self.check_random(comps)


class TestAdmissibility(BaseTest):
    def check_pair(self, comps):
        gm = GenMetric(comps.metric)
        acs = assemble(gm, comps)
        second = BnACS(gm.gend @ acs.matrix, acs.u0, gm.dim)
        self.assertPasses(admissibility_check(gm, acs, second))
        report = admissibility_check(gm, acs, acs)
        self.assertFails(report, "the anchor is injective on the subspace")
        self.assertEqual(report.method, "admissibility")

    def test_odd(self):
        self.check_pair(iso2_instance().components)
        self.check_pair(so3_structure()[1])

    def test_even(self):
        self.check_pair(dim2_instance().components)
        self.check_pair(dim4_instance().components)


class TestComplexStructureAround(BaseTest):
    def test_definite_complement(self):
        metric = PseudoMetric.diag(exact, [1, 1, 1])
        x = exact.unit(3, 2)
        j = complex_structure_around(metric, x)
        self.assertTrue(metric.is_skew(j))
        self.assertTrue(exact.is_zero_vector(j @ x))
        flipped = complex_structure_around(metric, x, orientation=-1)
        self.assertEqual(flipped, -j)

    def test_lorentzian_complement(self):
        metric = PseudoMetric.diag(exact, [1, 1, -1])
        with self.assertRaises(InadmissibleParameters):
            complex_structure_around(metric, exact.unit(3, 0))
        with self.assertRaises(InadmissibleParameters):
            complex_structure_around(metric, exact.vector([0, 0, 2]))
        with self.assertRaises(DimensionError):
            complex_structure_around(PseudoMetric.diag(exact, [1, 1]),
                                     exact.unit(2, 0))


if __name__ == "__main__":
    unittest.main()
