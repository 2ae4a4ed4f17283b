#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   monitoring.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Runtime and memory measurement of mining runs."""
from __future__ import print_function, division, absolute_import

import os
from timeit import default_timer

import psutil

from .logging_color import get_logger

logger = get_logger('mdlsubgroups.utils.monitoring')


def memory_usage():
    """Resident memory of the current process in MiB.

    Return:
        float

    """
    return psutil.Process(os.getpid()).memory_info().rss / float(2 ** 20)


# pylint: disable=too-few-public-methods
class Timer(object):
    """Measure the code placed inside its context.

    Attributes:
        label (str): Name used in the log message, `None` for no message.
        elapsed (float): Wall time in seconds, 0 if not run.
        memory (float): Resident memory in MiB at context exit, 0 if not run.
        memory_growth (float): Resident memory change in MiB during the run.

    Arguments:
        label (str, optional): Log the measurement at DEBUG level under this name.

    """

    def __init__(self, label=None):
        self.label = label
        self._start = 0.0
        self._start_memory = 0.0
        self.elapsed = 0.0
        self.memory = 0.0
        self.memory_growth = 0.0

    def __enter__(self):
        self._start_memory = memory_usage()
        self._start = default_timer()
        return self

    def __exit__(self, *args):
        self.elapsed = default_timer() - self._start
        self.memory = memory_usage()
        self.memory_growth = self.memory - self._start_memory
        if self.label:
            logger.debug("%s took %.3f s, resident memory %.1f MiB (%+.1f MiB)", self.label,
                         self.elapsed, self.memory, self.memory_growth)

# EOF
