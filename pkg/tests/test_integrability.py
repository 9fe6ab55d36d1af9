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
from .utils import dim2_instance, even_components, exact, iso2_instance
from .utils import odd_components, so3, so3_structure, twisted_algebroids
from bnck.classify import get_entry
from bnck.courant import BnAlgebroid
from bnck.exactfield import ComplexSubspace, Matrix
from bnck.integrability import VIA_COMPONENTS, VIA_DIRECT, bundle_closed
from bnck.integrability import check_direct, check_even, check_kahler
from bnck.integrability import check_odd, check_reduced
from bnck.integrability import classical_reduction_check, exchange_check
from bnck.integrability import rescale, side_conditions
from bnck.liealg import KForm, LieAlgebra, PseudoMetric
from bnck.structures import ComponentsEven, GenMetric, assemble
from bnck.utils import DimensionError, InadmissibleParameters
from bnck.utils import InvariantError
from hypothesis import given, settings
from fractions import Fraction
from itertools import combinations
import hypothesis.strategies as st
import unittest

F = Fraction


def dim4_instance():
    return get_entry("DIM4-ADAPTED").generate(
        exact, lam=1, beta=0, eps1=1, eps2=1, a=F(3, 5), b=0,
        c_plus=F(4, 5))


def rotation():
    return Matrix(exact, [[0, -1], [1, 0]])


def flat_plane(j_plus=None, F=None):
    """The classical structure on the abelian plane: g = Id, X+- = 0."""
    metric = PseudoMetric.diag(exact, [1, 1])
    j_minus = rotation()
    comps = ComponentsEven(metric, j_minus if j_plus is None else j_plus,
                           j_minus, (0, 0), (0, 0), 1)
    return BnAlgebroid(LieAlgebra.abelian(exact, 2), F=F), comps


def catalog_instances():
    return [
        iso2_instance(), iso2_instance(lam=2, eps=-1, sign=-1),
        get_entry("DIM3-ABELIAN").generate(
            exact, eps2=1, eps3=1, t=F(1, 2), sign=1, orient_plus=1,
            orient_minus=-1),
        get_entry("DIM3-RxSOL2").generate(
            exact, delta=2, eps=1, eps_prime=1, sign=-1, orient_plus=1,
            orient_minus=1),
        dim2_instance(), dim4_instance(),
    ]


class TestBundleClosed(BaseTest):
    def test_full_bundle(self):
        A = BnAlgebroid(so3())
        self.assertPasses(bundle_closed(A, ComplexSubspace.full(exact, 7)))

    def test_so3_plane(self):
        A = BnAlgebroid(so3())
        gm = GenMetric(PseudoMetric.diag(exact, [1, 1, 1]))
        subspace = ComplexSubspace(exact, 7, [
            gm.s_plus(exact.unit(3, 0)), gm.s_plus(exact.unit(3, 1))])
        report = bundle_closed(A, subspace, name="S")
        self.assertFails(report, "S is closed under the Dorfman bracket")
        witness = report["S is closed under the Dorfman bracket"].witness
        self.assertEqual(witness["pair"], [1, 2])
        # a single constant section is always closed
        line = ComplexSubspace(exact, 7, subspace.basis[:1])
        self.assertPasses(bundle_closed(A, line))

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionError):
            bundle_closed(BnAlgebroid(so3()), ComplexSubspace.full(exact, 5))

    def test_catalog_l1(self):
        instance = iso2_instance()
        comps = instance.components
        gm = GenMetric(comps.metric)
        acs = assemble(gm, comps)
        report = check_direct(instance.algebroid, gm, acs)
        self.assertPasses(report)
        self.assertIn("L_u0 F = 0", report)
        self.assertIn("L_u0 G = 0", report)


class TestCheckKahler(BaseTest):
    def test_catalog_instances(self):
        for instance in catalog_instances():
            report = check_kahler(instance.algebroid, instance.components,
                                  reduced=True)
            self.assertPasses(report)
            self.assertEqual(report.method, "kahler")
            self.assertEqual(set(report.details["verdicts"].values()),
                             {True})

    def test_so3_without_twist(self):
        A, comps = so3_structure()
        report = check_kahler(A, comps, reduced=True)
        self.assertFalse(report.passed)
        self.assertTrue(report["the verdicts agree"].passed)
        self.assertEqual(report.details["verdicts"], {
            "direct": False, "components": False, "reduced": False})

    def test_injected_f(self):
        instance = iso2_instance()
        L = instance.algebroid.lie_algebra
        A = BnAlgebroid(L, F=KForm(exact, 3, 2, {(1, 2): 1}))
        report = check_kahler(A, instance.components, reduced=True)
        self.assertFails(report, "components-odd: i_X- F = 0",
                         "reduced-3: i_X- F = 0")
        self.assertTrue(report["the verdicts agree"].passed)
        self.assertFalse(check_odd(A, instance.components).passed)

    def test_single_route(self):
        instance = dim2_instance()
        A, comps = instance.algebroid, instance.components
        report = check_kahler(A, comps, via=VIA_DIRECT)
        self.assertPasses(report)
        self.assertEqual(report.details["verdicts"], {"direct": True})
        self.assertNotIn("the verdicts agree", report)
        report = check_kahler(A, comps, via=VIA_COMPONENTS)
        self.assertPasses(report)
        self.assertTrue(all(c.label.startswith("components-even: ")
                            for c in report))
        with self.assertRaises(ValueError):
            check_kahler(A, comps, via="both routes")

    def test_even(self):
        instance = dim4_instance()
        self.assertPasses(check_even(instance.algebroid,
                                     instance.components))
        self.assertPasses(check_reduced(instance.algebroid,
                                        instance.components))

    def test_reduced_dimension(self):
        A = BnAlgebroid(LieAlgebra.abelian(exact, 1))
        with self.assertRaises(DimensionError):
            check_reduced(A, None)


class TestVerdictAgreement(BaseTest):
    def assertVerdictsAgree(self, algebroid, components):
        report = check_kahler(algebroid, components, reduced=True)
        self.assertTrue(report["the verdicts agree"].passed,
                        "\n" + report.format_table())
        return report

    @settings(deadline=None, max_examples=50)
    @given(twisted_algebroids(3), odd_components())
    def test_random_odd(self, algebroid, comps):
        self.assertVerdictsAgree(algebroid, comps)

    @settings(deadline=None, max_examples=50)
    @given(st.data())
    def test_random_even(self, data):
        n = data.draw(st.sampled_from([2, 4]))
        algebroid = data.draw(twisted_algebroids(n))
        self.assertVerdictsAgree(algebroid, data.draw(even_components(n)))

    def test_twist_coefficients(self):
        failing = 0
        for instance in catalog_instances():
            A = instance.algebroid
            L = A.lie_algebra
            n = A.dim
            for degree in [2, 3]:
                for key in combinations(range(n), degree):
                    bump = KForm(exact, n, degree, {key: 1})
                    try:
                        if degree == 3:
                            corrupted = BnAlgebroid(L, A.H + bump, A.F)
                        else:
                            corrupted = BnAlgebroid(L, A.H, A.F + bump)
                    except InvariantError:
                        continue
                    report = self.assertVerdictsAgree(
                        corrupted, instance.components)
                    failing += not report.passed
        self.assertGreater(failing, 0)

    def test_component_sign_flips(self):
        for instance in catalog_instances():
            comps = instance.components
            for name in ["j_plus", "j_minus", "x_plus", "x_minus"]:
                value = getattr(comps, name)
                if isinstance(value, Matrix):
                    value = -value
                else:
                    value = exact.neg(value)
                try:
                    corrupted = comps.with_fields(**{name: value})
                except InvariantError:
                    continue
                self.assertVerdictsAgree(instance.algebroid, corrupted)


class TestClassical(BaseTest):
    def test_flat_plane(self):
        A, comps = flat_plane()
        self.assertPasses(classical_reduction_check(A, comps))
        self.assertPasses(check_kahler(A, comps, reduced=True))

    def test_opposite_rotations(self):
        A, comps = flat_plane(j_plus=-rotation())
        self.assertPasses(classical_reduction_check(A, comps))
        self.assertPasses(check_kahler(A, comps))

    def test_f_forbidden(self):
        A, comps = flat_plane(F=KForm(exact, 2, 2, {(0, 1): 1}))
        self.assertFails(classical_reduction_check(A, comps), "F = 0")
        report = check_kahler(A, comps)
        self.assertFalse(report.passed)
        self.assertTrue(report["the verdicts agree"].passed)

    def test_null_c_rejected(self):
        A, comps = flat_plane()
        with self.assertRaises(InadmissibleParameters):
            check_even(A, comps)
        instance = dim2_instance()
        with self.assertRaises(DimensionError):
            classical_reduction_check(instance.algebroid,
                                      instance.components)


class TestSideConditions(BaseTest):
    def test_odd(self):
        for instance in catalog_instances()[:4]:
            report = side_conditions(instance.algebroid,
                                     instance.components)
            self.assertPasses(report)
            self.assertIn("X- is Killing", report)
            self.assertIn("L_X- J+ = 0", report)

    def test_even(self):
        for instance in [dim2_instance(), dim4_instance()]:
            report = side_conditions(instance.algebroid,
                                     instance.components)
            self.assertPasses(report)
            self.assertIn("X+ is Killing", report)
            self.assertTrue(report.details["commute"])

    def test_exchange(self):
        instance = dim4_instance()
        report = exchange_check(instance.algebroid, instance.components)
        self.assertPasses(report)
        self.assertEqual(report.details, {"commute": True,
                                          "relation": True})
        odd = iso2_instance()
        with self.assertRaises(DimensionError):
            exchange_check(odd.algebroid, odd.components)


class TestRescale(BaseTest):
    def test_identity(self):
        instance = iso2_instance()
        A, comps = rescale(instance.algebroid, instance.components, 1)
        self.assertEqual(comps, instance.components)
        self.assertTrue(A.H.is_zero())

    def test_odd_factor(self):
        for factor in [2, -1, F(3, 2), -2]:
            instance = iso2_instance()
            A, comps = rescale(instance.algebroid, instance.components,
                               factor)
            self.assertTrue(exact.equal(
                comps.metric.norm(comps.x_plus), exact.one))
            self.assertPasses(check_kahler(A, comps, reduced=True))

    def test_odd_factor_failing_structure(self):
        A, comps = so3_structure()
        A, comps = rescale(A, comps, 2)
        self.assertFalse(check_kahler(A, comps).passed)

    def test_to_unit(self):
        instance = dim4_instance()
        A, comps = rescale(instance.algebroid, instance.components,
                           to_unit=True)
        self.assertTrue(exact.is_zero(comps.c_plus))
        self.assertEqualVectors(exact, comps.x_plus,
                                exact.vector([1, 0, 0, 0]))
        self.assertPasses(check_kahler(A, comps, reduced=True))
        instance = dim2_instance()
        A, comps = rescale(instance.algebroid, instance.components,
                           to_unit=True)
        self.assertEqualVectors(exact, comps.x_plus, exact.vector([0, 1]))
        self.assertPasses(check_kahler(A, comps))

    def test_invalid(self):
        instance = iso2_instance()
        A, comps = instance.algebroid, instance.components
        with self.assertRaises(InadmissibleParameters):
            rescale(A, comps, 0)
        with self.assertRaises(ValueError):
            rescale(A, comps)
        with self.assertRaises(ValueError):
            rescale(A, comps, 2, to_unit=True)
        with self.assertRaises(DimensionError):
            rescale(A, comps, to_unit=True)
        unit = get_entry("DIM2-ABELIAN-UNIT").generate(
            exact, t=0, eps0=1, sign=1)
        with self.assertRaises(InadmissibleParameters):
            rescale(unit.algebroid, unit.components, to_unit=True)
        plane = dim2_instance()
        with self.assertRaises(DimensionError):
            rescale(plane.algebroid, plane.components, 2)


if __name__ == "__main__":
    unittest.main()
