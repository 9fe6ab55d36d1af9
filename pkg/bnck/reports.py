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

from .decorators import decorator_with_args, document_attr
from collections import namedtuple
from functools import wraps

__all__ = ["Check", "Report", "ReportError", "collects_checks", "check",
           "witness_to_json"]

Check = namedtuple("Check", ["label", "passed", "witness"])
Check.__doc__ = """A single labelled check inside a `Report`.

``witness`` is ``None`` for passing checks; for failing checks it holds
whatever locates the failure (a residual, a pair of sections, a triple of
basis labels).
"""


def check(label, passed, witness=None):
    passed = bool(passed)
    return Check(label, passed, None if passed else witness)


def witness_to_json(value, field=None):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, dict):
        return {str(k): witness_to_json(v, field) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [witness_to_json(v, field) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    if field is not None and field.is_scalar(value):
        return field.to_json(value)
    return str(value)


class Report:
    """The outcome of a verification: a method name and a sequence of
    labelled checks. A report passes when every check passes.

    :param str method: What was checked, e.g. "axioms" or "components-odd".
    :param checks: The checks, in the order they were performed.
    :type checks: iterable of `Check`
    :param field: The scalar backend used, for serializing witnesses.
    :param dict details: Optional extra values (e.g. the solution set of a
      search) carried along for the caller.
    """
    def __init__(self, method, checks=(), field=None, details=None):
        self._method = method
        self._checks = tuple(checks)
        self._field = field
        self._details = dict(details or {})

    @document_attr
    def method(self):
        """The verification method.

        :type: `str`
        """

    @document_attr
    def checks(self):
        """The checks that make up this report.

        :type: `tuple` of `Check`
        """

    @document_attr
    def field(self):
        """The scalar backend the checks were computed in, or ``None``."""

    @document_attr
    def details(self):
        """Extra values attached by the producer of this report.

        :type: `dict`
        """

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, label):
        for c in self.checks:
            if c.label == label:
                return c
        raise KeyError(label)

    def __contains__(self, label):
        return any(c.label == label for c in self.checks)

    def __len__(self):
        return len(self.checks)

    def __iter__(self):
        return iter(self.checks)

    def __bool__(self):
        return self.passed

    def prefixed(self, prefix):
        """Returns the checks of this report with ``prefix`` prepended to
        every label.

        :rtype: `list` of `Check`
        """
        return [c._replace(label="{}: {}".format(prefix, c.label))
                for c in self.checks]

    def to_json(self):
        checks = [{
            "label": c.label,
            "status": "pass" if c.passed else "fail",
            "witness": witness_to_json(c.witness, self.field),
        } for c in self.checks]
        result = {
            "verdict": self.verdict,
            "method": self.method,
            "checks": checks,
        }
        if self.details:
            result["details"] = witness_to_json(self.details, self.field)
        return result

    def format_table(self):
        width = max((len(c.label) for c in self.checks), default=0)
        lines = ["{}: {}".format(self.method, self.verdict.upper())]
        for c in self.checks:
            line = "  [{}] {}".format(
                "PASS" if c.passed else "FAIL", c.label.ljust(width))
            if not c.passed and c.witness is not None:
                line += "  {}".format(
                    witness_to_json(c.witness, self.field))
            lines.append(line.rstrip())
        return "\n".join(lines)

    def to_exception(self, *args, **kwargs):
        """Returns a `ReportError` that represents this report. Arguments are
        forwarded to `ReportError`'s constructor.

        :rtype: `ReportError`
        """
        if self.passed:
            raise ValueError("This Report passed.")
        return ReportError(self, *args, **kwargs)

    def __repr__(self):
        return "<Report {} {} ({} checks)>".format(
            self.method, self.verdict, len(self.checks))


class ReportError(Exception):
    """Raised when a failing `Report` should become an exception, e.g. when
    a twist isomorphism is asked to verify itself.

    :param Report report: The failing report.
    :param str prefix: An optional prefix for the generated message.
    :param str message: Used instead of the generated message if provided.
    """
    def __init__(self, report, prefix=None, message=None):
        self.report = report
        exc_message = prefix + ": " if prefix else ""
        if message is not None:
            super().__init__(exc_message + str(message))
            return
        failures = report.failures()
        exc_message += "{} of {} checks failed ({})".format(
            len(failures), len(report.checks),
            ", ".join(c.label for c in failures))
        super().__init__(exc_message)


@decorator_with_args
def collects_checks(func, method):
    """Turns a generator of `Check` (or `Report`) objects into a function
    returning a `Report`. Yielded reports are flattened into the result with
    their method as a label prefix. The scalar backend is taken from the
    ``field`` attribute of the first argument.
    """
    @wraps(func)
    def result(*args, **kwargs):
        checks = []
        details = {}
        for item in func(*args, **kwargs):
            if isinstance(item, Report):
                checks.extend(item.prefixed(item.method))
                details.update(item.details)
            elif isinstance(item, dict):
                details.update(item)
            else:
                checks.append(item)
        field = getattr(args[0], "field", None) if args else None
        return Report(method, checks, field, details)
    return result
