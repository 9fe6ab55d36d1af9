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

from functools import wraps

__all__ = ["decorator_with_args", "document_attr", "cached_attr"]


def decorator_with_args(dec):
    @wraps(dec)
    def get_decorator(*args, **kwargs):
        def decorator(func):
            return dec(func, *args, **kwargs)
        if not kwargs and len(args) == 1 and callable(args[0]):
            func, *args = args
            return decorator(func)
        return decorator
    return get_decorator


def document_attr(func):
    # Read-only: the value lives in "_" + name and is set in __init__.
    attr = func.__name__
    real_attr = "_" + attr

    def prop(self):
        return getattr(self, real_attr)

    prop.__doc__ = func.__doc__
    return property(prop)


def cached_attr(func):
    """Like `document_attr`, but the value is computed by ``func`` on first
    access and stored in ``"_" + name``.
    """
    attr = func.__name__
    real_attr = "_" + attr

    @wraps(func)
    def prop(self):
        value = getattr(self, real_attr, None)
        if value is None:
            value = func(self)
            setattr(self, real_attr, value)
        return value
    return property(prop)
