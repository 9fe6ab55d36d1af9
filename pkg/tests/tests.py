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

from bnck import Report, ReportError
from bnck.decorators import cached_attr
from bnck.reports import check, collects_checks
from bnck.utils import InvariantError, logger, run_grid, set_up_logging

from unittest import mock, TestCase
import logging
import unittest


class BaseTest(TestCase):
    def patch(self, *args, **kwargs):
        patch_obj = mock.patch(*args, **kwargs)
        result = patch_obj.start()
        self.addCleanup(patch_obj.stop)
        return result

    def assertPasses(self, report):
        self.assertTrue(report.passed, "\n" + report.format_table())

    def assertFails(self, report, *labels):
        self.assertFalse(report.passed, "\n" + report.format_table())
        failing = [c.label for c in report.failures()]
        for label in labels:
            self.assertIn(label, failing)

    def assertEqualVectors(self, field, u, v):
        self.assertTrue(field.equal_vectors(u, v), "{} != {}".format(
            field.format_vector(u), field.format_vector(v)))


@collects_checks("outer")
def outer_report(values):
    yield check("first", values[0] > 0, values[0])
    yield inner_report(values[1:])
    yield {"count": len(values)}


@collects_checks("inner")
def inner_report(values):
    for i, value in enumerate(values):
        yield check("value {}".format(i), value > 0, value)
    yield {"inner": True}


class TestReports(BaseTest):
    def test_empty_report_passes(self):
        report = Report("nothing")
        self.assertPasses(report)
        self.assertEqual(report.verdict, "pass")
        self.assertEqual(report.to_json(), {
            "verdict": "pass", "method": "nothing", "checks": []})

    def test_witness_dropped_on_pass(self):
        self.assertIsNone(check("ok", True, "residual").witness)
        self.assertEqual(check("bad", False, "residual").witness, "residual")

    def test_collects_checks(self):
        report = outer_report([1, 2, -3])
        self.assertEqual(report.method, "outer")
        self.assertEqual([c.label for c in report], [
            "first", "inner: value 0", "inner: value 1"])
        self.assertFails(report, "inner: value 1")
        self.assertEqual(report["inner: value 1"].witness, -3)
        self.assertIn("first", report)
        self.assertEqual(report.details, {"count": 3, "inner": True})
        self.assertPasses(outer_report([1, 1]))

    def test_to_json(self):
        data = outer_report([-1]).to_json()
        self.assertEqual(data["verdict"], "fail")
        self.assertEqual(data["checks"], [
            {"label": "first", "status": "fail", "witness": -1}])
        self.assertEqual(data["details"], {"count": 1, "inner": True})

    def test_format_table(self):
        table = outer_report([1, -2]).format_table()
        lines = table.splitlines()
        self.assertEqual(lines[0], "outer: FAIL")
        self.assertEqual(lines[1].split(), ["[PASS]", "first"])
        self.assertTrue(lines[2].startswith("  [FAIL] inner: value 0"))
        self.assertTrue(lines[2].endswith("-2"))

    def test_to_exception(self):
        with self.assertRaises(ValueError):
            outer_report([1]).to_exception()
        error = outer_report([1, -1, -1]).to_exception("demo")
        self.assertIsInstance(error, ReportError)
        self.assertEqual(str(error), "demo: 2 of 3 checks failed "
                         "(inner: value 0, inner: value 1)")
        error = outer_report([-1]).to_exception(message="custom")
        self.assertEqual(str(error), "custom")


class TestUtils(BaseTest):
    def test_invariant_error(self):
        error = InvariantError("structure.J_plus", "not g-skew")
        self.assertEqual(str(error), "structure.J_plus: not g-skew")
        self.assertEqual(error.path, "structure.J_plus")
        self.assertIsInstance(error, ValueError)
        self.assertEqual(str(InvariantError("", "bad")), "bad")

    def test_cached_attr(self):
        calls = []

        class Example:
            @cached_attr
            def value(self):
                calls.append(None)
                return 42

        example = Example()
        self.assertEqual(example.value, 42)
        self.assertEqual(example.value, 42)
        self.assertEqual(example._value, 42)
        self.assertEqual(len(calls), 1)

    def test_run_grid_order(self):
        self.assertEqual(run_grid(abs, [-3, 2, -1]), [3, 2, 1])
        def square(x):
            return x * x
        self.assertEqual(run_grid(square, range(30), workers=4),
                         [x * x for x in range(30)])
        self.assertEqual(run_grid(square, [], workers=4), [])

    def test_set_up_logging(self):
        basic_config = self.patch("logging.basicConfig")
        self.addCleanup(logger.setLevel, logger.level)
        set_up_logging()
        basic_config.assert_not_called()
        set_up_logging(log_debug=True)
        self.assertEqual(basic_config.call_count, 1)
        kwargs = basic_config.call_args[1]
        self.assertEqual(kwargs["format"],
                         "[%(levelname)s][%(name)s] %(message)s")
        self.assertEqual(logger.level, logging.DEBUG)
        set_up_logging(log_info=True)
        self.assertEqual(logger.level, logging.INFO)


if __name__ == "__main__":
    unittest.main()
