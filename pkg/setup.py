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

"""A setuptools based setup module."""

from setuptools import setup, find_packages
from codecs import open
from os import path

here = path.abspath(path.dirname(__file__))

with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

install_requires = [
    'torch>=1.10.0',
    'numpy',
    'scipy>=1.7',
    'transformers>=4.30.0',
    'psutil',
]

setup(
    name='TplusH',

    version="0.1.0",

    description='Kernels and cokernels of Toeplitz plus Hankel operators with matching symbols',

    long_description=long_description,
    long_description_content_type='text/markdown',

    author='The TplusH Authors',

    keywords='Toeplitz Hankel Wiener-Hopf factorization Fredholm operators kernel',

    packages=find_packages(exclude=['tests']),

    install_requires=install_requires,

    extras_require={
        'test': ['pytest'],
    },

    entry_points={
        'console_scripts': [
            'tplush=TplusH.cli:main',
        ],
    },

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3',
    ],
    python_requires='>=3.8',
)
