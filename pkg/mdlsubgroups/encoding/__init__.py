#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   __init__.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Code lengths, in bits, of subgroup lists and of the data they describe."""
from __future__ import print_function, division, absolute_import

from mdlsubgroups.encoding.config import EncodingConfig, CodeLengths
from mdlsubgroups.encoding.model_code import (universal_int_code, condition_code,
                                              description_code, model_code)
from mdlsubgroups.encoding.data_code import (gaussian_fixed_code, bayes_gaussian_code,
                                             select_prior_points, subgroup_data_code)
from mdlsubgroups.encoding.total import total_code, normalized_gain, candidate_gain

# EOF
