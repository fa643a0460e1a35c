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


class TplusHError(Exception):
    """Base class of every error raised by the analysis library."""


class InvalidSymbol(TplusHError, ValueError):
    pass


class DegenerateSymbol(TplusHError, ValueError):
    """A zero symbol where an invertible one is required."""


class PoleAtEvaluationPoint(TplusHError, ValueError):
    pass


class NonConvergence(TplusHError, ArithmeticError):
    pass


class DegenerateOnCircle(TplusHError, ArithmeticError):
    """A root, pole or zero of a symbol lies on the unit circle."""


class RootOnCircle(DegenerateOnCircle):
    pass


class PoleOnCircle(DegenerateOnCircle):
    pass


class SymbolDegenerateOnCircle(DegenerateOnCircle):
    pass


class NotMatchingFunction(TplusHError, ValueError):
    pass


class SignatureGuardFailed(TplusHError, ArithmeticError):
    pass


class NotMatchingPair(TplusHError, ValueError):
    pass


class NotInKernel(TplusHError, ValueError):
    pass


class NotRightInvertible(TplusHError, ValueError):
    pass


class NotFredholmPair(TplusHError, ArithmeticError):
    pass


class ZeroVector(TplusHError, ValueError):
    pass


class OracleDisagreement(TplusHError, ArithmeticError):
    """Finite-section dimensions differ from the analytic ones at every retry."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
