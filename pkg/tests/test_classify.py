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
from .utils import exact
from bnck.classify import AdaptedPoint, CLASSES, catalog, class_points
from bnck.classify import extend_point, extension_expected, get_entry
from bnck.classify import in_extended_family, parse_grid, point_class
from bnck.classify import point_report, random_adapted_point
from bnck.classify import search_dim3_nonunimodular
from bnck.classify import search_dim3_unimodular, solve_classes_dim4
from bnck.classify import specialized_vs_generic, unimodular_survey
from bnck.classify import verify_entry
from bnck.exactfield import get_field
from bnck.reports import Report, check
from bnck.utils import DimensionError, InadmissibleParameters
from fractions import Fraction
from hypothesis import given, settings
import hypothesis.strategies as st
import random
import unittest

F = Fraction
NAMES = ["DIM2-ABELIAN", "DIM2-ABELIAN-UNIT", "DIM3-ISO2", "DIM3-ISO11",
         "DIM3-ABELIAN", "DIM3-RxSOL2", "DIM3-NONUNIMOD-CASE2",
         "DIM4-ADAPTED"]


class TestGrid(BaseTest):
    def test_range(self):
        self.assertEqual(parse_grid("-1..1/1,2"), (
            F(-1), F(-1, 2), F(0), F(1, 2), F(1)))
        self.assertEqual(parse_grid(" 0..2 "), (F(0), F(1), F(2)))
        self.assertEqual(len(parse_grid("-3..3/1,2,3,5")), 21)

    def test_list(self):
        self.assertEqual(parse_grid("1/2,3,-1,3"), (F(-1), F(1, 2), F(3)))

    def test_malformed(self):
        for text in ["", "  ", "2..1", "0..1/0", "a..b", "0..1/-2", ","]:
            with self.assertRaises(ValueError, msg=text):
                parse_grid(text)


class TestCatalog(BaseTest):
    def test_names(self):
        self.assertEqual([e.name for e in catalog()], NAMES)
        with self.assertRaises(KeyError):
            get_entry("DIM5-NOTHING")
        entry = get_entry("DIM3-ISO2")
        self.assertEqual(entry.parity, "odd")
        document = entry.to_json()
        self.assertEqual(document["name"], "DIM3-ISO2")
        self.assertEqual([s["name"] for s in document["slots"]], [
            "lam", "eps", "sign", "orient_plus", "orient_minus"])

    def test_iso11_rejected(self):
        entry = get_entry("DIM3-ISO11")
        self.assertEqual(entry.points(), [])
        self.assertIsNotNone(entry.notes)
        with self.assertRaises(InadmissibleParameters):
            entry.generate(lam=1, eps1=1, sign=1, orient_plus=1,
                           orient_minus=1)

    def test_inadmissible_parameters(self):
        entry = get_entry("DIM3-ISO2")
        for parameters in [dict(lam=0), dict(eps=2), dict(sign=0)]:
            values = dict(lam=1, eps=1, sign=1, orient_plus=1,
                          orient_minus=1)
            values.update(parameters)
            with self.assertRaises(InadmissibleParameters):
                entry.generate(**values)
        with self.assertRaises(InadmissibleParameters):
            get_entry("DIM2-ABELIAN").generate(y=1, eps=1, eps0=1,
                                               eps_plus=1)

    def test_points_are_seeded(self):
        entry = get_entry("DIM3-RxSOL2")
        self.assertEqual(entry.points(limit=5, seed=3),
                         entry.points(limit=5, seed=3))
        self.assertEqual(len(entry.points(limit=5)), 5)
        # eps != eps' is rejected
        self.assertTrue(all(p["eps"] == p["eps_prime"]
                            for p in entry.points()))

    def test_verify(self):
        for entry in catalog():
            if entry.name == "DIM3-ISO11":
                continue
            points = entry.points(limit=2)
            self.assertTrue(points, entry.name)
            for parameters in points:
                report = verify_entry(entry, parameters)
                self.assertPasses(report)
                self.assertEqual(report.method, "catalog")

    def test_numeric_escape(self):
        entry = get_entry("DIM2-ABELIAN")
        parameters = dict(y=F(1, 2), eps=1, eps0=1, eps_plus=1)
        with self.assertRaises(InadmissibleParameters):
            entry.generate(**parameters)
        numeric = get_field("numeric")
        instance = entry.generate(numeric, **parameters)
        self.assertAlmostEqual(instance.components.c_plus.real,
                               3 ** 0.5 / 2)
        self.assertPasses(verify_entry(entry, parameters, numeric))
        parameters = dict(lam=2, eps=1, sign=1, orient_plus=1,
                          orient_minus=1)
        self.assertPasses(verify_entry(get_entry("DIM3-ISO2"), parameters,
                                       numeric))


class TestSearchDim3(BaseTest):
    def test_unimodular(self):
        solutions = search_dim3_unimodular((1, 0, 1), (1, 1, 1))
        self.assertTrue(solutions)
        for solution in solutions:
            self.assertPasses(solution.report)
            self.assertTrue(solution.report["the verdicts agree"].passed)
            self.assertGreaterEqual(solution.freedom, 0)

    def test_failing_candidates_are_dropped(self):
        failing = Report("kahler", [check("closed", False, (0, 1))])
        kahler = self.patch("bnck.classify.check_kahler",
                            return_value=failing)
        with self.assertLogs("bnck.classify", "INFO"):
            self.assertEqual(search_dim3_unimodular((1, 0, 1), (1, 1, 1)),
                             [])
        self.assertTrue(kahler.called)

    def test_nonunimodular(self):
        solutions = search_dim3_nonunimodular(1, 0, 0, 0, (1, 1, 1))
        self.assertTrue(any(s.report.passed for s in solutions))
        with self.assertRaises(InadmissibleParameters):
            search_dim3_nonunimodular(1, 0, 0, -1, (1, 1, 1))

    def test_survey(self):
        search = self.patch("bnck.classify.search_dim3_unimodular",
                            return_value=[])
        results = unimodular_survey("0,1", workers=2)
        self.assertEqual(len(results), 64)
        self.assertEqual(search.call_count, 64)
        lambdas, eps, solutions = results[0]
        self.assertEqual(lambdas, (F(0), F(0), F(0)))
        self.assertEqual(eps, (1, 1, 1))
        self.assertEqual(solutions, [])
        self.assertEqual(results[-1][:2], ((F(1), F(1), F(1)),
                                           (-1, -1, -1)))


class TestAdaptedPoints(BaseTest):
    grid = "-2..2/1"
    c_plus = F(4, 5)

    def points(self, cls, limit=3):
        return class_points(cls, (1, 1), self.c_plus, self.grid, limit)

    def test_invalid_points(self):
        rotation = [[0, 0, 0], [0, 0, 1], [0, -1, 0]]
        with self.assertRaises(InadmissibleParameters):
            AdaptedPoint((1, 1), (0, 1, 1), rotation, (1, 0, 0, 0), 0)
        with self.assertRaises(InadmissibleParameters):
            AdaptedPoint((1, 2), (0, 1, 1), rotation, (1, 0, 0, 0), 1)
        with self.assertRaises(DimensionError):
            AdaptedPoint((1, 1), (0, 1, 1), [[0, 1], [-1, 0]],
                         (1, 0, 0, 0), 1)
        with self.assertRaises(DimensionError):
            AdaptedPoint((1, 1), (0, 1, 1), rotation, (1, 0, 0), 1)

    def test_classes_are_recognized(self):
        for cls in CLASSES:
            for point in self.points(cls):
                self.assertTrue(point.norm_matches())
                self.assertEqual(point_class(point), cls, point)
        with self.assertRaises(ValueError):
            self.points(9)

    def test_class_4_extends(self):
        points = self.points(4)
        self.assertTrue(points)
        for point in points:
            extension = extend_point(point)
            self.assertIsNotNone(extension, point)
            self.assertTrue(extension_expected(point, 4))
            self.assertTrue(in_extended_family(point,
                                               extension.components))
            self.assertPasses(extension.report)
            self.assertPasses(point_report(point, 4, extension))

    def test_class_1_does_not_extend(self):
        points = self.points(1)
        self.assertTrue(points)
        for point in points:
            self.assertFalse(extension_expected(point, 1))
            self.assertIsNone(extend_point(point), point)
            self.assertPasses(point_report(point, 1, None))

    def test_class_8(self):
        for point in self.points(8, limit=4):
            extension = extend_point(point)
            expected = exact.is_zero(point.lambdas[0])
            self.assertEqual(extension is not None, expected, point)
            self.assertPasses(point_report(point, 8, extension))

    def test_solve_classes(self):
        results = solve_classes_dim4((1, 1), self.c_plus, "-1..1/1",
                                     classes=(4, 1), per_class=2)
        self.assertEqual([r.cls for r in results], [4, 4, 1, 1])
        self.assertEqual([r.extendable for r in results],
                         [True, True, False, False])
        for result in results:
            self.assertPasses(result.report)
            document = result.to_json()
            self.assertEqual(document["class"], result.cls)
            self.assertEqual(document["report"]["verdict"], "pass")
        for c_plus in [0, 1, -1]:
            with self.assertRaises(InadmissibleParameters):
                solve_classes_dim4((1, 1), c_plus)


class TestCrossCheck(BaseTest):
    @settings(deadline=None, max_examples=100)
    @given(st.integers(0, 2 ** 32 - 1), st.booleans())
    def test_specialized_vs_generic(self, seed, solved):
        point = random_adapted_point(random.Random(seed), solved=solved)
        self.assertPasses(specialized_vs_generic(point))

    def test_class_points(self):
        for cls in (3, 6):
            for point in class_points(cls, (1, 1), F(3, 5), "-1..1/1",
                                      limit=2):
                self.assertPasses(specialized_vs_generic(point))


if __name__ == "__main__":
    unittest.main()
