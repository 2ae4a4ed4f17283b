#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   __init__.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Ambient utilities: logging, configuration, files, timing."""
from __future__ import print_function, division, absolute_import

# EOF
