#!/usr/bin/env python

import os

from glob import glob

if os.environ.get('USE_SETUPTOOLS'):
  from setuptools import setup
  setup_kwargs = dict(zip_safe=0)

else:
  from distutils.core import setup
  setup_kwargs = dict()


storage_dirs = []

for subdir in ('reports', 'log'):
  storage_dirs.append( ('storage/%s' % subdir, []) )

setup(
  name='parafock',
  version='0.3.0',
  license='Apache Software License 2.0',
  description='Exact Fock representations of A-statistics and A-superstatistics, '
              'with relation checks for the 3D A-superoscillator',
  package_dir={'' : 'webapp'},
  packages=[
    'parafock',
    'parafock.algebra',
    'parafock.fock',
    'parafock.limits',
    'parafock.oscillator',
    'parafock.report',
    'parafock.report.management',
    'parafock.report.management.commands',
    'parafock.verify',
    'parafock.worker_pool',
  ],
  package_data={'parafock' : ['local_settings.py.example']},
  scripts=glob('bin/*'),
  data_files=storage_dirs,
  install_requires=['Django>=3.2', 'pyparsing', 'numpy'],
  classifiers=[
      'Intended Audience :: Science/Research',
      'Natural Language :: English',
      'License :: OSI Approved :: Apache Software License',
      'Programming Language :: Python',
      'Programming Language :: Python :: 3',
      'Programming Language :: Python :: 3.8',
      'Programming Language :: Python :: 3.9',
      'Programming Language :: Python :: 3.10',
      'Topic :: Scientific/Engineering :: Physics',
      ],
  **setup_kwargs
)
