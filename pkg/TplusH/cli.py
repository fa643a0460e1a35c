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


"""``tplush`` command line: parse a pair, run one mode, print the report."""

import sys

from transformers import HfArgumentParser

from .runtime.config import REPORT_TAYLOR_TEXT
from .runtime.config_utils import dumps_report
from .runtime.engine import AnalysisEngine, AnalysisRequest
from .utils.errors import (
    DegenerateOnCircle,
    InvalidSymbol,
    NotFredholmPair,
    NotMatchingPair,
    OracleDisagreement,
    TplusHError,
)
from .utils.logging import logger, set_log_level
from .utils.tplush_args import TplusHArguments, print_args


def exit_code_for(err, mode=None) -> int:
    if isinstance(err, NotMatchingPair):
        return 2
    if isinstance(err, (DegenerateOnCircle, NotFredholmPair)):
        return 3
    if isinstance(err, OracleDisagreement):
        return 4
    if isinstance(err, InvalidSymbol):
        return 2 if mode == "pc-check" else 1
    return 1


def _literal_text(literal):
    if "laurent" in literal:
        terms = literal["laurent"]
        return "laurent " + " ".join(f"{k}:({re:.6g}{im:+.6g}j)" for k, re, im in terms)
    body = literal["rational"]
    return "rational num " + " ".join(f"{k}:({re:.6g}{im:+.6g}j)" for k, re, im in body["num"]) \
        + " / den " + " ".join(f"{k}:({re:.6g}{im:+.6g}j)" for k, re, im in body["den"])


def _basis_lines(name, basis):
    lines = [f"    {name} basis ({len(basis)}):"]
    for i, entry in enumerate(basis):
        literal = {k: v for k, v in entry.items() if k != "taylor"}
        taylor = ", ".join(f"{complex(v):.6g}" for v in entry["taylor"][:REPORT_TAYLOR_TEXT])
        lines.append(f"      [{i}] {_literal_text(literal)}")
        lines.append(f"          taylor: {taylor}")
    return lines


def format_text(report) -> str:
    """Human-readable rendering of a report dictionary."""
    lines = [f"mode: {report['request']['mode']}"]
    if "error" in report:
        lines.append(f"error ({report['error_type']}): {report['error']}")
        return "\n".join(lines)
    if "kappa1" in report:
        lines.append(f"subordinated c: {_literal_text(report['subordinated']['c'])}")
        lines.append(f"subordinated d: {_literal_text(report['subordinated']['d'])}")
        lines.append(f"kappa1 = {report['kappa1']}, kappa2 = {report['kappa2']}, "
                     f"quadrant {report['quadrant']}")
        lines.append(f"sigma(c) = {report['sigma_c']}, sigma(d) = {report['sigma_d']}")
    for name, fac in report.get("factorizations", {}).items():
        lines.append(f"{name}: n = {fac['index_n']}, ind T = {fac['toeplitz_index']}"
                     + (f", sigma = {fac['signature']}" if "signature" in fac else ""))
        lines.append(f"  g_minus: {_literal_text(fac['g_minus'])}")
        lines.append(f"  g_plus:  {_literal_text(fac['g_plus'])}")
    if "point_check" in report:
        lines.append(f"point check: c -> {report['point_check']['c']}, d -> {report['point_check']['d']}")
    for sign, op in report.get("operators", {}).items():
        lines.append(f"T(a) {sign} H(b): branch {op['branch']}, dim ker {op['dim_ker']}, "
                     f"dim coker {op['dim_coker']}, index {op['index']}")
        lines.extend(_basis_lines("kernel", op["kernel"]))
        lines.extend(_basis_lines("cokernel", op["cokernel"]))
        if "coburn" in op:
            lines.append(f"    one-sided: {op['coburn']['guaranteed_onesided']} "
                         f"(class {op['coburn']['class_match']}, case {op['coburn']['corollary_case']})")
        if "oracle" in op:
            oracle = op["oracle"]
            lines.append(f"    oracle N={oracle['truncation_n']}: ker {oracle['numeric_kernel_dim']}, "
                         f"coker {oracle['numeric_cokernel_dim']}, agrees {oracle['agrees_with_analytic']}")
    for sign, results in report.get("pc", {}).items():
        for r in results:
            flag = " (critical candidate)" if r["critical_candidate"] else ""
            lines.append(f"T(a) {sign} H(b) on H^{r['p']:g}: fredholm {r['is_fredholm']}, "
                         f"min |det| {r['min_matrix_det_modulus']:.3e}, "
                         f"min |scalar| {r['min_scalar_modulus']:.3e}{flag}")
    for warning in report.get("warnings", []):
        lines.append(f"warning: {warning}")
    return "\n".join(lines)


def _emit(report, as_json, path):
    text = dumps_report(report)
    if path is not None:
        with open(path, "w") as fd:
            fd.write(text + "\n")
    if as_json:
        print(text)
    else:
        print(format_text(report))


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = HfArgumentParser(TplusHArguments)
    try:
        args, = parser.parse_args_into_dataclasses(args=argv)
    except ValueError as err:
        report = {"request": {"mode": None}, "error": str(err), "error_type": type(err).__name__}
        _emit(report, "--json" in argv, None)
        return 1

    set_log_level(args.log_level)
    if args.wall_clock_breakdown:
        print_args(args)

    try:
        request = AnalysisRequest.from_args(args)
        report, code = AnalysisEngine(args, request).run()
    except Exception as err:
        if not isinstance(err, TplusHError):
            logger.exception("internal error")
        report = getattr(err, "report", None) or {"request": {"mode": args.mode}}
        report = dict(report, error=str(err), error_type=type(err).__name__)
        code = exit_code_for(err, args.mode)
    _emit(report, args.json, args.report)
    return code


if __name__ == "__main__":
    sys.exit(main())
