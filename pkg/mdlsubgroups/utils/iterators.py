#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   iterators.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Iteration helpers over sorted values and work lists."""
from __future__ import print_function, division, absolute_import

import itertools


def pairwise(iterable):
    """Consecutive pairs of a sequence: s -> (s0, s1), (s1, s2), ...

    Return:
        iterator

    """
    # pylint: disable=C0103
    a, b = itertools.tee(iterable)
    next(b, None)
    return zip(a, b)


def split_even(sequence, n_parts):
    """Split a sequence into at most `n_parts` contiguous parts of similar size.

    The split depends only on the length of the sequence and `n_parts`, so
    concatenating the results of the parts keeps the original order.

    Arguments:
        sequence (sequence): Work items.
        n_parts (int): Maximum number of parts, at least 1.

    Return:
        list[sequence]: Non-empty parts.

    """
    n_parts = max(min(int(n_parts), len(sequence)), 1)
    size, remainder = divmod(len(sequence), n_parts)
    parts, start = [], 0
    for index in range(n_parts):
        stop = start + size + (1 if index < remainder else 0)
        if stop > start:
            parts.append(sequence[start:stop])
        start = stop
    return parts

# EOF
