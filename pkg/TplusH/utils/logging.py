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

# Logger setup following DeepSpeed's utils/logging.py

import logging
import sys

log_levels = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL,
}

LOG_FORMAT = "[%(asctime)s] [%(levelname)s] [%(filename)s:%(lineno)d:%(funcName)s] %(message)s"


class LoggerFactory:
    @staticmethod
    def create_logger(name, level=logging.WARNING, stream=None):
        """
        Create a non-propagating logger with one stream handler.

        Reports go to stdout, so the handler writes to stderr unless another
        ``stream`` is given.
        """
        if not name:
            raise ValueError("name for logger cannot be empty")
        logger_ = logging.getLogger(name)
        logger_.setLevel(level)
        logger_.propagate = False
        if not logger_.handlers:
            handler = logging.StreamHandler(stream=sys.stderr if stream is None else stream)
            handler.setLevel(level)
            handler.setFormatter(logging.Formatter(LOG_FORMAT))
            logger_.addHandler(handler)
        return logger_


logger = LoggerFactory.create_logger("TplusH")


def _check_level_str(level_str):
    if not isinstance(level_str, str) or level_str.lower() not in log_levels:
        raise ValueError(f"{level_str!r} is not one of {sorted(log_levels)}")
    return level_str.lower()


def set_log_level(level_str):
    level = log_levels[_check_level_str(level_str)]
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.setLevel(level)


def should_log_le(max_log_level_str):
    """True when messages at ``max_log_level_str`` would be emitted."""
    return logger.getEffectiveLevel() <= log_levels[_check_level_str(max_log_level_str)]


def log_pair(message, tag=None, level=logging.INFO):
    """
    Log ``message`` prefixed with the analysis tag, e.g. ``[sign=+]``, so that
    the two operators analysed side by side stay apart in the log.
    """
    logger.log(level, f"[{tag}] {message}" if tag else message)
