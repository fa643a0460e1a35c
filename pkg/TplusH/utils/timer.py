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

# Stage timing in the manner of DeepSpeed's SynchronizedWallClockTimer,
# without device synchronisation.

import time

from .logging import logger

try:
    import psutil
    PSUTIL_AVAILABLE = True
except ImportError:
    PSUTIL_AVAILABLE = False


class StageTimers:
    """Named wall-clock timers, one per analysis stage (matching, kernels, oracle, pc)."""

    class Timer:
        def __init__(self, name):
            self.name = name
            self.total = 0.0
            self.calls = 0
            self._since = None

        @property
        def running(self):
            return self._since is not None

        def start(self):
            if self.running:
                raise RuntimeError(f"timer {self.name} is already running")
            self._since = time.perf_counter()

        def stop(self):
            if not self.running:
                raise RuntimeError(f"timer {self.name} was not started")
            self.total += time.perf_counter() - self._since
            self.calls += 1
            self._since = None

        def __enter__(self):
            self.start()
            return self

        def __exit__(self, *exc):
            self.stop()
            return False

        def elapsed_ms(self, reset=True):
            """Accumulated time in milliseconds, including a run in progress."""
            total = self.total
            if self.running:
                total += time.perf_counter() - self._since
            if reset:
                self.total, self.calls = 0.0, 0
                if self.running:
                    self._since = time.perf_counter()
            return total * 1000.0

    def __init__(self, monitor_memory=False):
        self.timers = {}
        self.monitor_memory = monitor_memory and PSUTIL_AVAILABLE

    def __call__(self, name):
        return self.timers.setdefault(name, self.Timer(name))

    @staticmethod
    def resident_mb():
        if not PSUTIL_AVAILABLE:
            return None
        return psutil.Process().memory_info().rss / 2 ** 20

    def log(self, names, reset=True):
        """Log the stages in ``names`` that ran, in order; returns the logged line."""
        parts = [f"{name}: {self.timers[name].elapsed_ms(reset):.2f}"
                 for name in names if name in self.timers]
        line = "stage time (ms) | " + " | ".join(parts) if parts else "stage time (ms) | none"
        if self.monitor_memory:
            line += f" | rss: {self.resident_mb():.1f} MB"
        logger.info(line)
        return line
