#!/usr/bin/env python
# -*- coding: utf-8 -*-
# =============================================================================
# @file   setup.py
# @author mdlsubgroups developers
# @date   18.10.2026
# =============================================================================
"""Subgroup list discovery with the minimum description length principle."""
from __future__ import print_function, division, absolute_import

import os
from setuptools import setup, find_packages


here = os.path.abspath(os.path.dirname(__file__))

with open(os.path.join(here, 'README.md')) as f:
    readme = f.read()

setup(name='mdlsubgroups',
      version='1.0',
      description='Robust subgroup discovery of numeric targets with MDL subgroup lists',
      long_description=readme,
      long_description_content_type='text/markdown',
      classifiers=[
          'Development Status :: 4 - Beta',
          'Intended Audience :: Science/Research',
          'Natural Language :: English',
          'Operating System :: MacOS',
          'Operating System :: Unix',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Information Analysis',
          ],
      keywords='subgroup discovery MDL pattern mining beam search',
      author='mdlsubgroups developers',
      license='GPLv3',
      python_requires='>=3.8',
      install_requires=['pandas>=1.5',
                        'colorlog',
                        'fasteners',
                        'PyYAML',
                        'yamlloader>=0.5.1',
                        'numpy>=1.22',
                        'scipy',
                        'psutil'],
      extras_require={'tests': ['pytest', 'hypothesis', 'coverage']},
      tests_require=['pytest', 'hypothesis'],
      entry_points={'console_scripts': ['mdlsubgroups=mdlsubgroups.cli:main']},
      packages=find_packages(include=['mdlsubgroups', 'mdlsubgroups.*']),
      data_files=['README.md'],
      zip_safe=False)

# EOF
