"""Settings for the parafock project.

DO NOT MODIFY THIS FILE DIRECTLY - use local_settings.py instead.
"""
from __future__ import print_function
import os
import sys
from os.path import abspath, dirname, join


PARAFOCK_APP_SETTINGS_LOADED = False
PARAFOCK_VERSION = '0.3.0'
DEBUG = False

# Filesystem layout
WEB_DIR = dirname( abspath(__file__) )
WEBAPP_DIR = dirname(WEB_DIR)
PARAFOCK_ROOT = os.environ.get('PARAFOCK_ROOT', dirname(WEBAPP_DIR))
# Defaults for these are set after local_settings is imported
STORAGE_DIR = ''
REPORT_DIR = ''
LOG_DIR = ''

# Worker Pool
# Identity instances are independent, so a suite can fan them out.
USE_WORKER_POOL = True
POOL_MAX_WORKERS = 4
VERIFY_TIMEOUT = 600.0

# Representation settings
DEFAULT_PHASE_CONVENTION = 'standard'
MAX_BASIS_DIMENSION = 100000
LIMIT_MAX_ORDER = 64
# Modules, operator sets and observables kept per process
FOCK_CACHE_SIZE = 16

# Report settings
REPORT_FLOAT_DIGITS = 12
URL_PREFIX = ''

# Logging
LOG_VERIFY_PERFORMANCE = False
LOG_ROTATION = True
LOG_ROTATION_COUNT = 1

LOG_FILE_INFO = 'info.log'
LOG_FILE_EXCEPTION = 'exception.log'
LOG_FILE_VERIFY = 'verify.log'

SECRET_KEY = 'UNSAFE_DEFAULT'
ALLOWED_HOSTS = [ '*' ]
TIME_ZONE = 'UTC'
USE_TZ = True

DATABASES = None

## Load our local_settings
try:
  from parafock.local_settings import *  # noqa
except ImportError:
  pass

## Load Django settings if they werent picked up in local_settings
if not PARAFOCK_APP_SETTINGS_LOADED:
  from parafock.app_settings import *  # noqa

## Set config dependent on flags set in local_settings
if not STORAGE_DIR:
  STORAGE_DIR = os.environ.get('PARAFOCK_STORAGE_DIR', join(PARAFOCK_ROOT, 'storage'))
if not REPORT_DIR:
  REPORT_DIR = join(STORAGE_DIR, 'reports')
if not LOG_DIR:
  LOG_DIR = join(STORAGE_DIR, 'log')

if DATABASES is None:
  DATABASES = {
    'default': {
      'NAME': join(STORAGE_DIR, 'parafock.db'),
      'ENGINE': 'django.db.backends.sqlite3',
    },
  }

if DEFAULT_PHASE_CONVENTION not in ('standard', 'as-printed'):
  print("WARNING: unknown DEFAULT_PHASE_CONVENTION %r, using 'standard'" % DEFAULT_PHASE_CONVENTION, file=sys.stderr)
  DEFAULT_PHASE_CONVENTION = 'standard'
