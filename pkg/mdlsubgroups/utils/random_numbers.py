#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   random_numbers.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Seeds for synthetic data generation."""
from __future__ import print_function, division, absolute_import

import os
import sys

from mdlsubgroups.utils.logging_color import get_logger

logger = get_logger('mdlsubgroups.utils.random_numbers')


def get_urandom_int(length):
    """Generate a truly random number from `os.urandom`.

    Arguments:
        length (int): Length of the number in bytes.

    Return:
        int

    """
    return int.from_bytes(os.urandom(length), sys.byteorder)


def resolve_seed(*candidates):
    """Take the first seed that is not `None`, or draw a random one.

    A drawn seed is logged so the run can be repeated.

    Arguments:
        *candidates (int): Seeds by priority, `None` meaning not given.

    Return:
        int

    """
    for seed in candidates:
        if seed is not None:
            return int(seed)
    seed = get_urandom_int(4)
    logger.warning("No seed given, using random seed %s", seed)
    return seed

# EOF
