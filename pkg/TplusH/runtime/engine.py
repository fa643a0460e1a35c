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

# Adapted from the layout of DeepSpeed's runtime/engine.py: an engine object
# configured from parsed arguments, owning timers and dispatching the work.

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

from ..factorization.matching import analyze
from ..factorization.wiener_hopf import factorize, factorize_matching, signature_point_check
from ..kernels.coburn import coburn_classify
from ..kernels.kernel_struct import kernel_cokernel
from ..oracle.finite_section import run_oracle
from ..pc.pc_fredholm import PCSymbol, pc_fredholm_test, pc_p_sweep
from ..symbols.calculus import sign_label
from ..symbols.literal import parse_symbol, symbol_literal
from .config import (
    ANALYSIS_SIGN,
    PC_P,
    REPORT_TAYLOR_JSON,
    TRUNCATION_N,
)
from .config_utils import get_scalar_param, loads_strict
from ..utils.errors import InvalidSymbol, OracleDisagreement, SignatureGuardFailed
from ..utils.logging import logger
from ..utils.timer import StageTimers

version = "0.1.0"

EXIT_OK = 0

_SIGNS = {"plus": (1,), "minus": (-1,), "both": (1, -1), "+": (1,), "-": (-1,)}


def _read_json_literal(text):
    if not isinstance(text, str):
        return text
    try:
        return loads_strict(text)
    except ValueError as err:
        raise InvalidSymbol(f"literal is not valid JSON: {err}")


@dataclass
class AnalysisRequest:
    mode: str
    a: object
    b: object
    signs: Tuple[int, ...]
    n: int
    p: float
    p_sweep: Optional[Tuple[float, ...]] = None
    grid_size: int = 257

    @classmethod
    def from_args(cls, args):
        a_literal, b_literal = args.a, args.b
        sign, n, p = args.sign, args.n, args.p
        if args.pair is not None:
            with open(args.pair) as fd:
                body = _read_json_literal(fd.read())
            if not isinstance(body, dict) or "a" not in body or "b" not in body:
                raise InvalidSymbol(f'pair file {args.pair} needs keys "a" and "b"')
            a_literal, b_literal = body["a"], body["b"]
            sign = get_scalar_param(body, ANALYSIS_SIGN, sign)
            n = get_scalar_param(body, TRUNCATION_N, n)
            p = get_scalar_param(body, PC_P, p)
        if sign not in _SIGNS:
            raise ValueError(f"sign must be plus, minus or both; got {sign!r}")
        if args.mode == "pc-check":
            a = PCSymbol.from_json(_read_json_literal(a_literal))
            b = PCSymbol.from_json(_read_json_literal(b_literal))
        else:
            a, b = parse_symbol(a_literal), parse_symbol(b_literal)
        p_sweep = tuple(args.p_sweep) if args.p_sweep is not None else None
        return cls(mode=args.mode, a=a, b=b, signs=_SIGNS[sign], n=int(n), p=float(p),
                   p_sweep=p_sweep, grid_size=args.grid_size)

    def echo(self):
        if self.mode == "pc-check":
            a, b = self.a.to_json(), self.b.to_json()
        else:
            a, b = symbol_literal(self.a), symbol_literal(self.b)
        signs = "both" if len(self.signs) == 2 else ("plus" if self.signs[0] > 0 else "minus")
        return {"mode": self.mode, "a": a, "b": b, "sign": signs, "n": self.n, "p": self.p}


def hardy_entry(f, taylor=REPORT_TAYLOR_JSON):
    entry = symbol_literal(f)
    entry["taylor"] = [complex(v) for v in f.taylor(taylor)]
    return entry


def factorization_entry(fac):
    entry = {
        "g_minus": symbol_literal(fac.g_minus),
        "index_n": fac.index_n,
        "g_plus": symbol_literal(fac.g_plus),
        "toeplitz_index": fac.toeplitz_index,
    }
    if fac.signature is not None:
        entry["signature"] = fac.signature
    return entry


def description_entry(description):
    return {
        "branch": description.branch.value,
        "cokernel_branch": description.cokernel_branch.value,
        "kernel": [hardy_entry(f) for f in description.kernel_basis],
        "cokernel": [hardy_entry(f) for f in description.cokernel_basis],
        "dim_ker": description.dim_ker,
        "dim_coker": description.dim_coker,
        "index": description.index,
        "contributions": {"from_c": description.contributions.from_c,
                          "from_d": description.contributions.from_d},
    }


def oracle_entry(report):
    return {
        "numeric_kernel_dim": report.numeric_kernel_dim,
        "numeric_cokernel_dim": report.numeric_cokernel_dim,
        "singular_values": list(report.singular_values),
        "residuals": [[i, r] for i, r in report.residuals],
        "agrees_with_analytic": report.agrees_with_analytic,
        "truncation_n": report.truncation_n,
        "warnings": list(report.warnings),
    }


def coburn_entry(verdict):
    return {
        "class_match": verdict.class_match.value,
        "guaranteed_onesided": verdict.guaranteed_onesided,
        "corollary_case": verdict.corollary_case.value if verdict.corollary_case else None,
    }


def _y_value(y):
    return y if math.isfinite(y) else ("inf" if y > 0 else "-inf")


def pc_entry(report):
    return {
        "p": report.p,
        "is_fredholm": report.is_fredholm,
        "min_matrix_det_modulus": report.min_matrix_det_modulus,
        "min_scalar_modulus": report.min_scalar_modulus,
        "witnesses": [[angle, _y_value(y)] for angle, y in report.witnesses],
        "critical_candidate": report.critical_candidate,
    }


class AnalysisEngine:
    r"""Runs one request: matching analysis, kernels, oracle or PC test."""
    def __init__(self, args, request: AnalysisRequest):
        self.args = args
        self.request = request
        self.warnings = []
        self.timers = StageTimers(monitor_memory=True) if self.wall_clock_breakdown() else None

    def wall_clock_breakdown(self):
        return bool(getattr(self.args, "wall_clock_breakdown", False))

    def _start(self, name):
        if self.timers is not None:
            self.timers(name).start()

    def _stop(self, name):
        if self.timers is not None:
            self.timers(name).stop()

    def _per_sign(self, fn):
        signs = self.request.signs
        if len(signs) == 1:
            return [fn(signs[0])]
        with ThreadPoolExecutor(max_workers=len(signs)) as pool:
            return list(pool.map(fn, signs))

    def _base_report(self):
        return {"request": self.request.echo(), "version": version}

    def _matching_section(self):
        self._start("matching")
        analysis = analyze(self.request.a, self.request.b)
        section = {
            "matching": True,
            "subordinated": {"c": symbol_literal(analysis.c), "d": symbol_literal(analysis.d)},
            "kappa1": analysis.kappa1,
            "kappa2": analysis.kappa2,
            "quadrant": analysis.quadrant.value,
        }
        for name, g in (("sigma_c", analysis.c), ("sigma_d", analysis.d)):
            try:
                section[name] = factorize_matching(g).signature
            except SignatureGuardFailed as err:
                section[name] = None
                self.warnings.append(f"{name}: {err}")
        self._stop("matching")
        return analysis, section

    def _descriptions(self):
        self._start("kernels")
        descriptions = self._per_sign(lambda s: kernel_cokernel(self.request.a, self.request.b, s))
        self._stop("kernels")
        return descriptions

    def _oracles(self, descriptions):
        self._start("oracle")
        reports = self._per_sign(
            lambda s: run_oracle(self.request.a, self.request.b, s,
                                 descriptions[self.request.signs.index(s)], self.request.n))
        self._stop("oracle")
        for s, r in zip(self.request.signs, reports):
            if not r.agrees_with_analytic:
                self.warnings.append(f"sign {sign_label(s)}: oracle disagrees up to N={r.truncation_n}")
        return reports

    def _finish(self, report, code=EXIT_OK):
        report["warnings"] = list(self.warnings)
        if self.timers is not None:
            self.timers.log(["matching", "kernels", "oracle", "pc"])
        return report, code

    def run_factorize(self):
        report = self._base_report()
        analysis, section = self._matching_section()
        report.update(section)
        report["factorizations"] = {
            "a": factorization_entry(factorize(analysis.a)),
            "b": factorization_entry(factorize(analysis.b)),
            "c": factorization_entry(factorize_matching(analysis.c)),
            "d": factorization_entry(factorize_matching(analysis.d)),
        }
        return self._finish(report)

    def run_signature(self):
        report = self._base_report()
        analysis, section = self._matching_section()
        report.update(section)
        report["point_check"] = {"c": signature_point_check(analysis.c),
                                 "d": signature_point_check(analysis.d)}
        return self._finish(report)

    def _operators(self, with_oracle, with_coburn):
        descriptions = self._descriptions()
        oracles = self._oracles(descriptions) if with_oracle else [None] * len(descriptions)
        operators = {}
        for s, description, oracle in zip(self.request.signs, descriptions, oracles):
            entry = description_entry(description)
            if with_coburn:
                entry["coburn"] = coburn_entry(coburn_classify(self.request.a, self.request.b, s))
            if oracle is not None:
                entry["oracle"] = oracle_entry(oracle)
            operators[sign_label(s)] = entry
        return operators, oracles

    def run_kernel(self):
        report = self._base_report()
        _, section = self._matching_section()
        report.update(section)
        report["operators"], _ = self._operators(with_oracle=False, with_coburn=False)
        return self._finish(report)

    def run_oracle(self):
        report = self._base_report()
        _, section = self._matching_section()
        report.update(section)
        report["operators"], oracles = self._operators(with_oracle=True, with_coburn=False)
        report, code = self._finish(report)
        disagreeing = [sign_label(s) for s, o in zip(self.request.signs, oracles) if not o.agrees_with_analytic]
        if disagreeing:
            largest = max(o.truncation_n for o in oracles)
            raise OracleDisagreement(f"finite sections disagree for sign {', '.join(disagreeing)} "
                                     f"up to N={largest}", report=report)
        return report, code

    def run_analyze(self):
        report = self._base_report()
        _, section = self._matching_section()
        report.update(section)
        report["operators"], _ = self._operators(with_oracle=True, with_coburn=True)
        return self._finish(report)

    def run_pc_check(self):
        report = self._base_report()
        request = self.request
        self._start("pc")
        sections = {}
        for s in request.signs:
            b = request.b if s > 0 else request.b.negated()
            if request.p_sweep is not None:
                results = pc_p_sweep(request.a, b, request.p_sweep, request.grid_size)
            else:
                results = [pc_fredholm_test(request.a, b, request.p, request.grid_size)]
            sections[sign_label(s)] = [pc_entry(r) for r in results]
        self._stop("pc")
        report["pc"] = sections
        return self._finish(report)

    def run(self):
        runner = {
            "analyze": self.run_analyze,
            "factorize": self.run_factorize,
            "signature": self.run_signature,
            "kernel": self.run_kernel,
            "oracle": self.run_oracle,
            "pc-check": self.run_pc_check,
        }[self.request.mode]
        logger.info(f"running {self.request.mode}")
        return runner()
