#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Setup script for hyperflow

    :license: GNU AGPL, see LICENSE for more details.
"""

from setuptools import (
    setup,
    find_packages
)
from hyperflow import get_version


with open('README.rst') as readme:
    long_description = readme.read()

with open('requirements.txt') as requirements_production:
    install_requires = [line for line in requirements_production.read().splitlines()
                        if line and not line.startswith('#')]

setup(
    name='hyperflow',
    description='Hyper-distribution semantics, refinement checking and attack '
                'synthesis for probabilistic programs with hidden state',
    long_description=long_description,
    version=get_version(),
    license='AGPL3+',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    python_requires='>=3.8',
    classifiers=[
        # http://pypi.python.org/pypi?%3Aaction=list_classifiers
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Framework :: Django',
        'License :: OSI Approved :: GNU Affero General Public License v3 or later (AGPLv3+)',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Security',
    ],
    install_requires=install_requires,
    entry_points={
        'console_scripts': [
            'hyperflow = hyperflow.__main__:main',
        ],
    },
)
