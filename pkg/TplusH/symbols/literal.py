# coding=utf-8
# Copyright (c) 2026, The TplusH Authors.  All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Symbol literals shared by pair files and the command line::

    {"laurent": [[k, re, im], ...]}
    {"rational": {"num": [[k, re, im], ...], "den": [[k, re, im], ...]}}
"""

import numbers

from .laurent import LaurentPoly
from .rational import RationalSymbol, as_symbol
from ..runtime.config_utils import loads_strict
from ..utils.errors import InvalidSymbol


def _parse_triples(triples, what):
    if not isinstance(triples, list):
        raise InvalidSymbol(f"{what} must be a list of [k, re, im] triples")
    coeffs = {}
    for entry in triples:
        if (not isinstance(entry, list) or len(entry) != 3
                or not isinstance(entry[0], int) or isinstance(entry[0], bool)
                or not all(isinstance(v, numbers.Real) for v in entry[1:])):
            raise InvalidSymbol(f"malformed coefficient {entry!r} in {what}")
        k, re, im = entry
        if k in coeffs:
            raise InvalidSymbol(f"exponent {k} repeated in {what}")
        coeffs[k] = complex(re, im)
    return LaurentPoly.from_dict(coeffs)


def parse_symbol(obj) -> RationalSymbol:
    """Build a symbol from a literal given as JSON text or as the decoded object."""
    if isinstance(obj, str):
        try:
            obj = loads_strict(obj)
        except ValueError as err:
            raise InvalidSymbol(f"symbol literal is not valid JSON: {err}")
    if not isinstance(obj, dict) or len(obj) != 1:
        raise InvalidSymbol('symbol literal must be {"laurent": ...} or {"rational": ...}')
    if "laurent" in obj:
        return RationalSymbol(_parse_triples(obj["laurent"], "laurent"))
    if "rational" in obj:
        body = obj["rational"]
        if not isinstance(body, dict) or set(body) != {"num", "den"}:
            raise InvalidSymbol('rational literal needs exactly "num" and "den"')
        den = _parse_triples(body["den"], "den")
        if den.is_zero():
            raise InvalidSymbol("rational literal has a zero denominator")
        return RationalSymbol(_parse_triples(body["num"], "num"), den)
    raise InvalidSymbol(f"unknown symbol literal kind {next(iter(obj))!r}")


def _triples(poly: LaurentPoly):
    return [[k, v.real, v.imag] for k, v in sorted(poly.coeffs.items())]


def symbol_literal(x) -> dict:
    x = as_symbol(x)
    if x.is_laurent():
        return {"laurent": _triples(x.num * (1.0 / complex(x.den.coef[0])))}
    return {"rational": {"num": _triples(x.num), "den": _triples(x.den)}}
