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
from .utils import exact, forms, heisenberg, lie_algebras, so3, solvable
from bnck.courant import BnAlgebroid, check_axioms, dorfman
from bnck.courant import dorfman_lie_derivative, gram, join
from bnck.courant import scalar_product, split, twist_isomorphism
from bnck.courant import verify_twist
from bnck.exactfield import Matrix
from bnck.liealg import KForm, LieAlgebra, ce_differential
from bnck.reports import ReportError
from bnck.utils import DimensionError, InvariantError
from hypothesis import given, settings
import hypothesis.strategies as st
import unittest


def section(n, vector=(), covector=(), scalar=0):
    v = list(exact.zeros(n))
    for i, c in vector:
        v[i] = exact.convert(c)
    xi = list(exact.zeros(n))
    for i, c in covector:
        xi[i] = exact.convert(c)
    return join(v, xi, exact.convert(scalar))


class TestScalarProduct(BaseTest):
    def test_pairing(self):
        e1 = section(2, vector=[(0, 1)])
        e1_star = section(2, covector=[(0, 1)])
        one = section(2, scalar=1)
        self.assertEqual(scalar_product(exact, e1, e1_star), exact.half)
        self.assertTrue(exact.is_zero(scalar_product(exact, e1, e1)))
        self.assertEqual(scalar_product(exact, one, one), exact.one)
        Q = gram(exact, 2)
        self.assertTrue(Q.is_symmetric())
        self.assertEqual(exact.dot(e1, Q @ e1_star), exact.half)

    def test_split(self):
        parts = split(section(2, [(1, 3)], [(0, 2)], 5))
        self.assertEqual(parts.vector, exact.vector([0, 3]))
        self.assertEqual(parts.covector, exact.vector([2, 0]))
        self.assertEqual(parts.scalar, exact.fraction(5))
        with self.assertRaises(DimensionError):
            split(exact.zeros(4))


class TestBnAlgebroid(BaseTest):
    def test_closed_f_required(self):
        F = KForm(exact, 3, 2, {(1, 2): 1})
        with self.assertRaises(InvariantError) as cm:
            BnAlgebroid(solvable(), F=F)
        self.assertEqual(cm.exception.path, "F")

    def test_twist_condition_required(self):
        F = KForm(exact, 4, 2, {(0, 1): 1, (2, 3): 1})
        with self.assertRaises(InvariantError) as cm:
            BnAlgebroid(LieAlgebra.abelian(exact, 4), F=F)
        self.assertEqual(cm.exception.path, "H")
        H = KForm(exact, 4, 3, {(1, 2, 3): -2})
        L = LieAlgebra.from_brackets(exact, 4, {(0, 1): {1: 1}})
        with self.assertRaises(InvariantError):
            BnAlgebroid(L, H)

    def test_forms_must_match(self):
        with self.assertRaises(DimensionError):
            BnAlgebroid(so3(), F=KForm(exact, 3, 3))

    def test_dorfman_abelian(self):
        A = BnAlgebroid(LieAlgebra.abelian(exact, 2),
                        F=KForm(exact, 2, 2, {(0, 1): 1}))
        e1, e2 = section(2, [(0, 1)]), section(2, [(1, 1)])
        one = section(2, scalar=1)
        self.assertEqual(dorfman(A, e1, e2), section(2, scalar=1))
        self.assertEqual(dorfman(A, one, e1), section(2, covector=[(1, 2)]))
        self.assertEqual(dorfman(A, e1, one),
                         section(2, covector=[(1, -2)]))

    def test_dorfman_so3(self):
        H = KForm(exact, 3, 3, {(0, 1, 2): -1})
        A = BnAlgebroid(so3(), H)
        e1, e2 = section(3, [(0, 1)]), section(3, [(1, 1)])
        # i_X i_Y H = H(Y, X, .)
        self.assertEqual(dorfman(A, e1, e2),
                         section(3, [(2, 1)], [(2, 1)]))
        e3_star = section(3, covector=[(2, 1)])
        self.assertEqual(dorfman(A, e1, e3_star),
                         section(3, covector=[(1, -1)]))

    def test_bracket_matches_dorfman(self):
        A = BnAlgebroid(heisenberg(), KForm(exact, 3, 3, {(0, 1, 2): 2}),
                        KForm(exact, 3, 2, {(0, 2): 1}))
        u = exact.vector([1, 0, 2, -1, 0, 1, 3])
        v = exact.vector([0, 1, -1, 2, 1, 0, -2])
        self.assertEqual(A.bracket(u, v), dorfman(A, u, v))
        self.assertEqual(A.rank, 7)
        self.assertEqual(A.labels()[3:], ["e1*", "e2*", "e3*", "1"])


class TestAxioms(BaseTest):
    def test_abelian_with_f(self):
        A = BnAlgebroid(LieAlgebra.abelian(exact, 2),
                        F=KForm(exact, 2, 2, {(0, 1): 1}))
        report = check_axioms(A)
        self.assertPasses(report)
        self.assertEqual(len(report), 5)

    def test_twisted(self):
        for L, H, F in [
                (so3(), KForm(exact, 3, 3, {(0, 1, 2): -1}), None),
                (heisenberg(), KForm(exact, 3, 3, {(0, 1, 2): 1}),
                 KForm(exact, 3, 2, {(0, 2): 1})),
                (solvable(), None, KForm(exact, 3, 2, {(0, 1): 2}))]:
            self.assertPasses(check_axioms(BnAlgebroid(L, H, F)))

    @settings(deadline=None, max_examples=10)
    @given(st.data())
    def test_random_heisenberg(self, data):
        L = heisenberg()
        H = data.draw(forms(exact, 3, 3))
        F = data.draw(forms(exact, 3, 2))
        self.assertPasses(check_axioms(BnAlgebroid(L, H, F)))

    @settings(deadline=None, max_examples=20)
    @given(st.data())
    def test_random_twists(self, data):
        # (H, F) = (-db - dA ^ A, dA) satisfies dF = 0 and dH = -F ^ F
        L = data.draw(lie_algebras())
        n = L.dim
        b = data.draw(forms(exact, n, 2))
        a_form = data.draw(forms(exact, n, 1))
        twist = twist_isomorphism(BnAlgebroid(L), b, a_form)
        self.assertPasses(verify_twist(BnAlgebroid(L), twist))
        self.assertEqual(twist.algebroid.F, ce_differential(L, a_form))
        self.assertPasses(check_axioms(twist.algebroid))

    def test_lie_derivative(self):
        A = BnAlgebroid(so3())
        u = section(3, [(0, 1)], [(1, 2)], 1)
        identity = Matrix.identity(exact, A.rank)
        self.assertTrue(dorfman_lie_derivative(A, u, identity).is_zero())


class TestTwist(BaseTest):
    def test_b_field(self):
        A = BnAlgebroid(solvable())
        b = KForm(exact, 3, 2, {(1, 2): 1})
        twist = twist_isomorphism(A, b)
        self.assertEqual(twist.algebroid.H,
                         KForm(exact, 3, 3, {(0, 1, 2): 1}))
        self.assertTrue(twist.algebroid.F.is_zero())
        self.assertPasses(verify_twist(A, twist))

    def test_one_form(self):
        A = BnAlgebroid(LieAlgebra.abelian(exact, 3),
                        F=KForm(exact, 3, 2, {(0, 1): 1}))
        a_form = KForm(exact, 3, 1, {(2,): 1})
        twist = twist_isomorphism(A, a_form=a_form)
        self.assertEqual(twist.algebroid.H,
                         KForm(exact, 3, 3, {(0, 1, 2): -2}))
        self.assertEqual(twist.algebroid.F, A.F)
        images = twist.isomorphism.columns()
        self.assertEqual(images[2], section(3, [(2, 1)], [(2, -1)], -1))
        self.assertEqual(images[6], section(3, covector=[(2, 2)], scalar=1))

    def test_wrong_target_fails(self):
        A = BnAlgebroid(solvable())
        twist = twist_isomorphism(A, KForm(exact, 3, 2, {(1, 2): 1}))
        wrong = twist._replace(algebroid=A)
        self.assertFails(verify_twist(A, wrong),
                         "I intertwines the Dorfman brackets")
        error = verify_twist(A, wrong).to_exception("twist")
        self.assertIsInstance(error, ReportError)
        self.assertTrue(str(error).startswith("twist: 1 of 2"))


if __name__ == "__main__":
    unittest.main()
