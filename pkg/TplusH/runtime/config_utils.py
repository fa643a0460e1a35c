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
Collection of report and input JSON utilities
"""
# Adapted from DeepSpeed's runtime/config_utils.py

import json
import math
import numbers
import collections
import collections.abc


class CanonicalReportEncoder(json.JSONEncoder):
    """
    This class overrides ``json.dumps`` default formatter.

    Keys are emitted sorted, floats with ``%.17g`` and complex numbers as
    ``[re, im]``, so that a report parsed back and dumped again is byte
    identical.

    Just pass ``cls=CanonicalReportEncoder`` to ``json.dumps`` to activate it

    """
    def iterencode(self, o, _one_shot=False, level=0):
        indent = self.indent if self.indent is not None else 2
        prefix_close = " " * level * indent
        level += 1
        prefix = " " * level * indent
        if o is None:
            return "null"
        elif isinstance(o, bool):
            return "true" if o else "false"
        elif isinstance(o, numbers.Integral):
            return f"{int(o)}"
        elif isinstance(o, numbers.Real):
            return _format_float(float(o))
        elif isinstance(o, numbers.Complex):
            return self.iterencode([o.real, o.imag], level=level - 1)
        elif isinstance(o, str):
            return json.dumps(o)
        elif isinstance(o, collections.abc.Mapping):
            if not o:
                return "{}"
            x = [
                f'\n{prefix}{json.dumps(str(k))}: {self.iterencode(v, level=level)}'
                for k, v in sorted(o.items(), key=lambda kv: str(kv[0]))
            ]
            return "{" + ','.join(x) + f"\n{prefix_close}" + "}"
        elif isinstance(o, collections.abc.Sequence):
            if not o:
                return "[]"
            return "[" + ", ".join(self.iterencode(v, level=level - 1) for v in o) + "]"
        raise TypeError(f"Object of type {type(o).__name__} is not report serializable")


def _format_float(value):
    if not math.isfinite(value):
        raise ValueError(f"non-finite number {value} in report")
    if value == 0.0:
        # -0.0 would come back as the integer 0
        value = 0.0
    return "%.17g" % value


def dumps_report(report):
    return json.dumps(report, cls=CanonicalReportEncoder)


def get_scalar_param(param_dict, param_name, param_default_value):
    return param_dict.get(param_name, param_default_value)


def dict_raise_error_on_duplicate_keys(ordered_pairs):
    """Reject duplicate keys."""
    d = dict((k, v) for k, v in ordered_pairs)
    if len(d) != len(ordered_pairs):
        counter = collections.Counter([pair[0] for pair in ordered_pairs])
        keys = [key for key, value in counter.items() if value > 1]
        raise ValueError("Duplicate keys in input JSON: {}".format(keys))
    return d


def loads_strict(text):
    return json.loads(text, object_pairs_hook=dict_raise_error_on_duplicate_keys)
