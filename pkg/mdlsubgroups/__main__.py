#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   __main__.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Run the command line interface with `python -m mdlsubgroups`."""
from __future__ import print_function, division, absolute_import

from mdlsubgroups.cli import main

main()

# EOF
