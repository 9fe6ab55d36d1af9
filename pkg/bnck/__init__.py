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

from .classify import CatalogEntry, catalog, get_entry, verify_entry
from .classify import search_dim3_unimodular, solve_classes_dim4
from .classify import specialized_vs_generic
from .cli import parse, serialize
from .courant import BnAlgebroid, check_axioms, dorfman
from .exactfield import Matrix, ComplexSubspace, get_field
from .integrability import check_direct, check_odd, check_even
from .integrability import check_kahler, check_reduced, rescale
from .liealg import LieAlgebra, KForm, PseudoMetric, Connection
from .liealg import ce_differential, levi_civita, killing_fields
from .reports import Check, Report, ReportError
from .structures import GenMetric, ComponentsOdd, ComponentsEven, BnACS
from .structures import assemble, extract
from .utils import InvariantError, DimensionError, InadmissibleParameters
from . import classify
from . import cli
from . import courant
from . import exactfield
from . import integrability
from . import liealg
from . import structures
from . import utils

__version__ = "0.1.0-dev"

# Silence Pyflakes warnings about unused imports.
assert [CatalogEntry, catalog, get_entry, verify_entry]
assert [search_dim3_unimodular, solve_classes_dim4, specialized_vs_generic]
assert [parse, serialize]
assert [BnAlgebroid, check_axioms, dorfman]
assert [Matrix, ComplexSubspace, get_field]
assert [check_direct, check_odd, check_even]
assert [check_kahler, check_reduced, rescale]
assert [LieAlgebra, KForm, PseudoMetric, Connection]
assert [ce_differential, levi_civita, killing_fields]
assert [Check, Report, ReportError]
assert [GenMetric, ComponentsOdd, ComponentsEven, BnACS]
assert [assemble, extract]
assert [InvariantError, DimensionError, InadmissibleParameters]
assert [classify, courant, exactfield, integrability, liealg, structures]
assert [cli, utils]
