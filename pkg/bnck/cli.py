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

"""The ``bnck`` command: loads JSON documents describing a Bn Courant
algebroid over a Lie algebra (and optionally a metric and the components
of a generalized structure), and runs the checkers and searches on them.

A document looks like::

    {
      "mode": "exact",
      "lie_algebra": {"dimension": 3,
                      "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1/2"}]},
      "H": [{"i": 1, "j": 2, "k": 3, "c": 0}],
      "F": [{"i": 1, "j": 2, "c": 0}],
      "metric": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
      "structure": {"parity": "odd", "J_plus": [...], "J_minus": [...],
                    "X_plus": [...], "X_minus": [...]}
    }

Indices are 1-based. Scalars are integers, decimal or ``"p/q"`` strings,
or ``{"re": ..., "im": ...}`` objects.
"""

from .classify import DEFAULT_DIM3_GRID, DEFAULT_GRID, catalog
from .classify import search_dim3_nonunimodular, solve_classes_dim4
from .classify import unimodular_survey, verify_entry
from .courant import BnAlgebroid, check_axioms
from .exactfield import EXACT_MODE, NUMERIC_MODE, get_field, parse_rational
from .integrability import VIA_BOTH, VIA_COMPONENTS, VIA_DIRECT
from .integrability import check_kahler, rescale
from .liealg import KForm, LieAlgebra, PseudoMetric, jacobi_check
from .liealg import levi_civita
from .reports import check, collects_checks
from .structures import components_for
from .utils import InvariantError, logger, run_grid, set_up_logging
import argparse
import json
import os
import sys

__all__ = ["EXIT_PASS", "EXIT_FAIL", "EXIT_INPUT", "DocumentError",
           "InputDocument", "resolve_field", "parse", "serialize",
           "build_parser", "main"]

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

MODE_ENV = "BNCK_MODE"
TOLERANCE_ENV = "BNCK_TOL"
KNOWN_KEYS = frozenset(["mode", "tolerance", "lie_algebra", "H", "F",
                        "metric", "structure", "catalog"])

# Options whose values may start with "-" ("-3..3/1,2", "-1/2", "-1,1").
SIGNED_OPTIONS = frozenset(["--grid", "--lambda", "--alpha", "--beta",
                            "--gamma", "--delta", "--eps", "--c-plus"])

log = logger.getChild("cli")


class DocumentError(InvariantError):
    """Raised when a document is not well-formed: invalid JSON, a missing
    or mistyped field, an index out of range or an unreadable scalar.
    """


class InputDocument:
    """A parsed and validated document.

    :param field: The field backend the document was loaded over.
    :param BnAlgebroid algebroid: The algebroid (with its Lie algebra and
      the forms H and F).
    :param PseudoMetric metric: The metric, or ``None``.
    :param components: The `ComponentsOdd` or `ComponentsEven`, or
      ``None``.
    :param dict catalog: Provenance of exported catalog instances.
    """
    def __init__(self, field, algebroid, metric=None, components=None,
                 catalog=None):
        self.field = field
        self.algebroid = algebroid
        self.metric = metric
        self.components = components
        self.catalog = catalog

    @property
    def lie_algebra(self):
        return self.algebroid.lie_algebra

    @property
    def H(self):
        return self.algebroid.H

    @property
    def F(self):
        return self.algebroid.F

    @property
    def mode(self):
        return self.field.mode

    @property
    def tolerance(self):
        return self.field.tolerance

    def require_metric(self):
        if self.metric is None:
            raise DocumentError("metric", "this command needs a metric")
        return self.metric

    def require_components(self):
        if self.components is None:
            raise DocumentError("structure",
                                "this command needs a structure block")
        return self.components

    def __repr__(self):
        return "<InputDocument n={} mode={}{}>".format(
            self.algebroid.dim, self.mode,
            "" if self.components is None else " " +
            self.components.parity)


def _magnitude(value):
    if isinstance(value, dict):
        return max((_magnitude(v) for v in value.values()), default=0.0)
    if isinstance(value, list):
        return max((_magnitude(v) for v in value), default=0.0)
    try:
        return abs(float(parse_rational(value)))
    except (TypeError, ValueError, ZeroDivisionError):
        return 0.0


def resolve_field(document=None, mode=None, tolerance=None, environ=None,
                  magnitude=1.0):
    """Chooses the field backend. Each setting comes from the first of:
    the explicit argument, the environment (``BNCK_MODE``, ``BNCK_TOL``),
    the document (``mode``, ``tolerance``) and the default (exact, 1e-9).
    """
    document = document or {}
    environ = os.environ if environ is None else environ
    for value in (mode, environ.get(MODE_ENV), document.get("mode")):
        if value:
            mode = value
            break
    else:
        mode = EXACT_MODE
    for value in (tolerance, environ.get(TOLERANCE_ENV),
                  document.get("tolerance")):
        if value is not None and value != "":
            tolerance = value
            break
    else:
        tolerance = None
    if tolerance is not None:
        try:
            tolerance = float(tolerance)
        except (TypeError, ValueError):
            raise DocumentError("tolerance", "not a number: {!r}".format(
                tolerance)) from None
    if mode == EXACT_MODE:
        return get_field(mode, tolerance)
    return get_field(mode, tolerance, magnitude)


def _scalar(field, value, path):
    try:
        return field.convert(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise DocumentError(path, "not a scalar: {!r}".format(
            value)) from None


def _index(record, name, n, path):
    value = record.get(name)
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(path, "{!r} must be an integer index".format(
            name))
    if not 1 <= value <= n:
        raise DocumentError(path, "index {}={} is outside 1..{}".format(
            name, value, n))
    return value - 1


def _sorted_with_sign(indices):
    indices = list(indices)
    sign = 1
    for a in range(len(indices)):
        for b in range(len(indices) - 1 - a):
            if indices[b] > indices[b + 1]:
                indices[b], indices[b + 1] = indices[b + 1], indices[b]
                sign = -sign
    if len(set(indices)) != len(indices):
        sign = 0
    return tuple(indices), sign


def _records(document, key, path):
    records = document.get(key, [])
    if records is None:
        return []
    if not isinstance(records, list):
        raise DocumentError(path, "must be a list of records")
    for idx, record in enumerate(records):
        if not isinstance(record, dict):
            raise DocumentError("{}[{}]".format(path, idx),
                                "must be an object")
    return records


def _antisymmetrize(field, entries, path, strict):
    """Merges ``entries``, a list of ``(key, sign, value, idx)``, into one
    value per key. Entries of the same key must agree up to the sign of
    their index permutation; otherwise they are averaged (with a warning),
    or rejected when ``strict``.
    """
    groups = {}
    for key, sign, value, idx in entries:
        if sign == 0:
            if not field.is_zero(value):
                raise InvariantError("{}[{}]".format(path, idx),
                                     "repeated index with nonzero value")
            continue
        groups.setdefault(key, []).append(
            (value if sign > 0 else -value, idx))
    result = {}
    for key, values in groups.items():
        first, first_idx = values[0]
        for value, idx in values[1:]:
            if field.equal(value, first):
                continue
            location = "{}[{}]".format(path, idx)
            if strict:
                raise InvariantError(location, (
                    "not antisymmetric: conflicts with {}[{}]".format(
                        path, first_idx)))
            log.warning("%s: antisymmetrizing inconsistent entries",
                        location)
            break
        total = field.zero
        for value, _ in values:
            total += value
        result[key] = field.div(total, field.convert(len(values)))
    return result


def _load_lie_algebra(field, document, strict):
    data = document.get("lie_algebra")
    if not isinstance(data, dict):
        raise DocumentError("lie_algebra", "a lie_algebra object is "
                            "required")
    n = data.get("dimension")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DocumentError("lie_algebra.dimension",
                            "must be a positive integer")
    path = "lie_algebra.brackets"
    entries = []
    for idx, record in enumerate(_records(data, "brackets", path)):
        location = "{}[{}]".format(path, idx)
        i = _index(record, "i", n, location)
        j = _index(record, "j", n, location)
        k = _index(record, "k", n, location)
        value = _scalar(field, record.get("c"), location + ".c")
        pair, sign = _sorted_with_sign((i, j))
        entries.append((pair + (k,), sign, value, idx))
    brackets = {}
    for (i, j, k), value in _antisymmetrize(
            field, entries, path, strict).items():
        brackets.setdefault((i, j), {})[k] = value
    L = LieAlgebra.from_brackets(field, n, brackets)
    jacobi = jacobi_check(L)
    if not jacobi.passed:
        raise InvariantError("lie_algebra", "the Jacobi identity fails: "
                             "{}".format(jacobi.failures()[0].label))
    return L


def _load_form(field, document, key, n, degree):
    names = "ijk"[:degree]
    entries = []
    for idx, record in enumerate(_records(document, key, key)):
        location = "{}[{}]".format(key, idx)
        indices = tuple(_index(record, name, n, location) for name in names)
        value = _scalar(field, record.get("c"), location + ".c")
        entries.append((indices, value, idx))
    return entries


def _make_form(field, entries, key, n, degree, strict):
    normalized = _antisymmetrize(field, [
        _sorted_with_sign(indices) + (value, idx)
        for indices, value, idx in entries], key, strict)
    return KForm(field, n, degree, normalized)


def _load_metric(field, document, n):
    rows = document.get("metric")
    if rows is None:
        return None
    if not isinstance(rows, list) or len(rows) != n or any(
            not isinstance(row, list) or len(row) != n for row in rows):
        raise DocumentError("metric", "must be a {0}x{0} matrix".format(n))
    return PseudoMetric(field, [
        [_scalar(field, value, "metric[{}][{}]".format(a, b))
         for b, value in enumerate(row)] for a, row in enumerate(rows)])


def _load_structure(field, document, metric):
    data = document.get("structure")
    if data is None:
        return None
    if not isinstance(data, dict):
        raise DocumentError("structure", "must be an object")
    if metric is None:
        raise DocumentError("metric", "a structure needs a metric")
    for name in ("J_plus", "J_minus", "X_plus", "X_minus"):
        if name not in data:
            raise DocumentError("structure." + name, "missing")
    expected = "odd" if metric.dim % 2 else "even"
    parity = data.get("parity", expected)
    if parity != expected:
        raise InvariantError("structure.parity", (
            "{!r} does not match the dimension {}".format(
                parity, metric.dim)))
    return components_for(metric, data["J_plus"], data["J_minus"],
                          data["X_plus"], data["X_minus"],
                          data.get("c_plus"))


def parse(text, strict=False, mode=None, tolerance=None, environ=None):
    """Parses and validates a document.

    :param str text: The JSON text.
    :param bool strict: Reject entries that are not antisymmetric instead
      of averaging them.
    :param str mode: Overrides the scalar mode (see `resolve_field`).
    :param tolerance: Overrides the numeric tolerance.
    :param dict environ: The environment; defaults to `os.environ`.
    :rtype: `InputDocument`
    :raises DocumentError: if the document is not well-formed.
    :raises InvariantError: if it violates an invariant (Jacobi, dF = 0,
      dH = -F^F, metric, component relations).
    """
    try:
        document = json.loads(text)
    except ValueError as e:
        raise DocumentError("", "not valid JSON: {}".format(e)) from None
    if not isinstance(document, dict):
        raise DocumentError("", "the document must be a JSON object")
    unknown = sorted(set(document) - KNOWN_KEYS)
    if unknown:
        if strict:
            raise DocumentError(unknown[0], "unknown field")
        log.warning("Ignoring unknown fields: %s", ", ".join(unknown))

    field = resolve_field(document, mode, tolerance, environ,
                          _magnitude(document))
    L = _load_lie_algebra(field, document, strict)
    n = L.dim
    H = _make_form(field, _load_form(field, document, "H", n, 3), "H", n, 3,
                   strict)
    F = _make_form(field, _load_form(field, document, "F", n, 2), "F", n, 2,
                   strict)
    algebroid = BnAlgebroid(L, H, F)
    metric = _load_metric(field, document, n)
    components = _load_structure(field, document, metric)
    log.debug("Loaded %r", algebroid)
    return InputDocument(field, algebroid, metric, components,
                         document.get("catalog"))


def serialize(algebroid, metric=None, components=None, catalog=None):
    """The document describing ``algebroid`` (and ``metric`` and
    ``components`` when given), such that `parse` gives them back.

    :rtype: `dict`
    """
    field = algebroid.field
    document = {"mode": field.mode}
    if field.tolerance is not None:
        document["tolerance"] = field.tolerance
    document.update(algebroid.to_json())
    if components is not None:
        metric = components.metric
    if metric is not None:
        document["metric"] = metric.to_json()
    if components is not None:
        structure = components.to_json()
        del structure["metric"]
        document["structure"] = structure
    if catalog is not None:
        document["catalog"] = catalog
    return document


def _dump(value, stream=None):
    stream = stream or sys.stdout
    json.dump(value, stream, indent=2, sort_keys=False)
    stream.write("\n")


def _status(passed):
    return EXIT_PASS if passed else EXIT_FAIL


def _emit_report(args, report):
    if args.json:
        _dump(report.to_json())
    else:
        print(report.format_table())
    return _status(report.passed)


def _load(args, environ):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as f:
            text = f.read()
    return parse(text, strict=args.strict, mode=args.mode,
                 tolerance=args.tol, environ=environ)


def _field(args, environ):
    return resolve_field(None, args.mode, args.tol, environ)


def cmd_check_axioms(args, environ):
    document = _load(args, environ)
    return _emit_report(args, check_axioms(document.algebroid))


def cmd_check_kahler(args, environ):
    document = _load(args, environ)
    report = check_kahler(document.algebroid,
                          document.require_components(), via=args.via,
                          reduced=args.reduced)
    return _emit_report(args, report)


@collects_checks("levi-civita")
def _connection_report(lie_algebra, metric, connection):
    yield check("torsion free", connection.torsion_free(lie_algebra))
    yield check("metric compatible", connection.metric_compatible(metric))


def cmd_levi_civita(args, environ):
    document = _load(args, environ)
    L = document.lie_algebra
    metric = document.require_metric()
    connection = levi_civita(L, metric)
    report = _connection_report(L, metric, connection)
    if args.json:
        _dump({"connection": connection.to_json(),
               "report": report.to_json()})
        return _status(report.passed)
    field = document.field
    for i in range(L.dim):
        for j in range(L.dim):
            value = connection.covariant(field.unit(L.dim, i),
                                         field.unit(L.dim, j))
            if not field.is_zero_vector(value):
                print("nabla_e{} e{} = {}".format(
                    i + 1, j + 1, field.format_vector(value)))
    print(report.format_table())
    return _status(report.passed)


def cmd_rescale(args, environ):
    document = _load(args, environ)
    components = document.require_components()
    factor = None if args.factor is None else parse_rational(args.factor)
    algebroid, rescaled = rescale(document.algebroid, components,
                                  factor=factor, to_unit=args.to_unit)
    _dump(serialize(algebroid, components=rescaled))
    if not args.verify:
        return EXIT_PASS
    before = check_kahler(document.algebroid, components)
    after = check_kahler(algebroid, rescaled)
    same = before.passed == after.passed
    print("rescale: verdict {} -> {}{}".format(
        before.verdict, after.verdict, "" if same else " (CHANGED)"),
        file=sys.stderr)
    return _status(same)


def cmd_catalog(args, environ):
    field = _field(args, environ)
    entries = catalog()
    if args.export:
        _export(entries, args.export, args.seed, field)
    if not args.verify:
        if args.json:
            _dump([entry.to_json() for entry in entries])
        else:
            for entry in entries:
                print("{:<22} {:<5} {}".format(
                    entry.name, entry.parity,
                    ", ".join(slot.name for slot in entry.slots)))
        return EXIT_PASS

    passed = True
    results = []
    for entry in entries:
        points = entry.points(args.limit, args.seed, field)
        reports = run_grid(
            lambda parameters, entry=entry: verify_entry(
                entry, parameters, field),
            points, args.workers)
        failures = [r for r in reports if not r.passed]
        passed = passed and not failures
        results.append((entry, points, reports))
        if not args.json:
            print("{:<22} {:>3} points  {}".format(
                entry.name, len(points),
                "no admissible points" if not points else
                "FAIL ({} failing)".format(len(failures)) if failures
                else "PASS"))
            for report in failures:
                print(report.format_table())
    if args.json:
        _dump([{
            "entry": entry.name,
            "results": [{"parameters": _parameters_json(p),
                         "report": r.to_json()}
                        for p, r in zip(points, reports)],
        } for entry, points, reports in results])
    return _status(passed)


def _parameters_json(parameters):
    return {key: str(value) for key, value in parameters.items()}


def _export(entries, directory, seed, field):
    os.makedirs(directory, exist_ok=True)
    for entry in entries:
        points = entry.points(1, seed, field)
        if not points:
            log.warning("%s has no admissible points; not exported",
                        entry.name)
            continue
        instance = entry.generate(field, **points[0])
        document = serialize(instance.algebroid,
                             components=instance.components,
                             catalog={"entry": entry.name, "parameters":
                                      _parameters_json(points[0])})
        path = os.path.join(directory, entry.name + ".json")
        with open(path, "w", encoding="utf-8") as f:
            _dump(document, f)
        log.info("Exported %s", path)


def _signs(text, count):
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise DocumentError("--eps", "not a list of signs: {!r}".format(
            text)) from None
    if len(values) != count or any(v not in (1, -1) for v in values):
        raise DocumentError("--eps", "expected {} signs, each 1 or -1".format(
            count))
    return values


def _solution_json(solution):
    return {
        "document": serialize(solution.algebroid,
                              components=solution.components),
        "freedom": solution.freedom,
        "report": solution.report.to_json(),
    }


def cmd_search_dim3_unimodular(args, environ):
    field = _field(args, environ)
    survey = unimodular_survey(args.grid or DEFAULT_DIM3_GRID, args.workers,
                               field)
    passed = all(s.report.passed for _, _, found in survey for s in found)
    if args.json:
        _dump([{"lambdas": [str(v) for v in lambdas], "eps": list(eps),
                "solutions": [_solution_json(s) for s in found]}
               for lambdas, eps, found in survey])
        return _status(passed)
    for lambdas, eps, found in survey:
        if not found:
            continue
        print("lambda = ({}), eps = ({}): {} solution(s), {}".format(
            ", ".join(str(v) for v in lambdas),
            ", ".join(str(v) for v in eps), len(found),
            "all pass" if all(s.report.passed for s in found)
            else "FAILURES"))
    return _status(passed)


def cmd_search_dim3_nonunimodular(args, environ):
    field = _field(args, environ)
    values = [parse_rational(v) for v in (args.alpha, args.beta, args.gamma,
                                           args.delta)]
    found = search_dim3_nonunimodular(*values, _signs(args.eps, 3),
                                      field=field)
    passed = all(s.report.passed for s in found)
    if args.json:
        _dump([_solution_json(s) for s in found])
        return _status(passed)
    print("{} solution(s)".format(len(found)))
    for solution in found:
        print(solution.report.format_table())
    return _status(passed)


def cmd_search_dim4_adapted(args, environ):
    field = _field(args, environ)
    classes = tuple(int(c) for c in args.classes.split(","))
    results = solve_classes_dim4(
        _signs(args.eps, 2), parse_rational(args.c_plus),
        args.grid or DEFAULT_GRID, classes, args.per_class, args.workers,
        field)
    passed = all(r.report.passed for r in results)
    if args.json:
        _dump([r.to_json() for r in results])
        return _status(passed)
    for cls in classes:
        found = [r for r in results if r.cls == cls]
        print("class {}: {} point(s), {} extendable, {}".format(
            cls, len(found), sum(1 for r in found if r.extendable),
            "all checks pass" if all(r.report.passed for r in found)
            else "FAILURES"))
    for result in results:
        if not result.report.passed:
            print(result.report.format_table())
    return _status(passed)


def _add_document(parser):
    parser.add_argument("file", help="the JSON document ('-' for stdin)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bnck", description=(
            "Verify Bn Courant algebroids and generalized pseudo-Kahler "
            "structures on Lie groups."))
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    parser.add_argument("--strict", action="store_true",
                        help="reject entries that are not antisymmetric")
    parser.add_argument("--mode", choices=[EXACT_MODE, NUMERIC_MODE],
                        help="scalar backend (default: exact)")
    parser.add_argument("--tol", type=float,
                        help="tolerance in numeric mode (default: 1e-9)")
    parser.add_argument("--verbose", action="store_true",
                        help="log progress")
    parser.add_argument("--debug", action="store_true",
                        help="log debugging output")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    sub = commands.add_parser("check-axioms",
                              help="check the Courant algebroid axioms")
    _add_document(sub)
    sub.set_defaults(func=cmd_check_axioms)

    sub = commands.add_parser("check-kahler",
                              help="decide whether a structure is "
                                   "pseudo-Kahler")
    _add_document(sub)
    sub.add_argument("--via", default=VIA_BOTH,
                     choices=[VIA_DIRECT, VIA_COMPONENTS, VIA_BOTH])
    sub.add_argument("--reduced", action="store_true",
                     help="also run the reduced test (dimensions 2-4)")
    sub.set_defaults(func=cmd_check_kahler)

    sub = commands.add_parser("levi-civita",
                              help="print the Levi-Civita connection")
    _add_document(sub)
    sub.set_defaults(func=cmd_levi_civita)

    sub = commands.add_parser("rescale", help="rescale a structure")
    _add_document(sub)
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--lambda", dest="factor", metavar="P/Q",
                       help="rescale an odd structure by this factor")
    group.add_argument("--to-unit", action="store_true",
                       help="rescale an even structure to c+ = 0")
    sub.add_argument("--verify", action="store_true",
                     help="check that the verdict is preserved")
    sub.set_defaults(func=cmd_rescale)

    sub = commands.add_parser("catalog", help="list or verify the catalog")
    sub.add_argument("--verify", action="store_true")
    sub.add_argument("--export", metavar="DIR",
                     help="write one document per family to DIR")
    sub.add_argument("--limit", type=int, default=20,
                     help="points per family (default: 20)")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--workers", type=int, default=1)
    sub.set_defaults(func=cmd_catalog)

    search = commands.add_parser("search", help="run a classification")
    kinds = search.add_subparsers(dest="kind", metavar="kind")
    kinds.required = True

    sub = kinds.add_parser("dim3-unimodular")
    sub.add_argument("--grid", help="values of each lambda (default: "
                                    "{})".format(DEFAULT_DIM3_GRID))
    sub.add_argument("--workers", type=int, default=1)
    sub.set_defaults(func=cmd_search_dim3_unimodular)

    sub = kinds.add_parser("dim3-nonunimodular")
    for name in ("alpha", "beta", "gamma", "delta"):
        sub.add_argument("--" + name, required=True, metavar="P/Q")
    sub.add_argument("--eps", default="1,1,1")
    sub.set_defaults(func=cmd_search_dim3_nonunimodular)

    sub = kinds.add_parser("dim4-adapted")
    sub.add_argument("--grid", help="parameter values (default: "
                                    "{})".format(DEFAULT_GRID))
    sub.add_argument("--c-plus", default="4/5", metavar="P/Q")
    sub.add_argument("--eps", default="1,1", help="eps1,eps2")
    sub.add_argument("--classes", default="1,2,3,4,5,6,7,8")
    sub.add_argument("--per-class", type=int, default=10)
    sub.add_argument("--workers", type=int, default=1)
    sub.set_defaults(func=cmd_search_dim4_adapted)
    return parser


def _join_signed_values(argv):
    """Rewrites ``--grid -1..1`` as ``--grid=-1..1`` so that argparse does
    not take a negative value for an option.
    """
    argv = list(argv)
    result = []
    k = 0
    while k < len(argv):
        arg = argv[k]
        value = argv[k + 1] if k + 1 < len(argv) else None
        if (arg in SIGNED_OPTIONS and value is not None and
                value[:1] == "-" and
                (value[1:2].isdigit() or value[1:2] == ".")):
            result.append("{}={}".format(arg, value))
            k += 2
            continue
        result.append(arg)
        k += 1
    return result


def main(argv=None, environ=None):
    """Runs the command line and returns the exit status: 0 when the
    verdict passes, 1 when it fails and 2 for input errors.
    """
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_join_signed_values(argv))
    set_up_logging(log_info=args.verbose, log_debug=args.debug)
    try:
        return args.func(args, environ)
    except (ValueError, OSError) as e:
        print("bnck: error: {}".format(e), file=sys.stderr)
        return EXIT_INPUT
