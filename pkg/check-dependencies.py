#!/usr/bin/env python

import sys

if sys.version_info < (3, 8):
  # SystemExit defaults to returning 1 when printing a string to stderr
  raise SystemExit("You are using python %s.%s, but version 3.8 or greater is "
                   "required" % sys.version_info[:2])

required = 0
optional = 0


# Test for django
try:
  import django
except ImportError:
  sys.stderr.write("[REQUIRED] Unable to import the 'django' module, do you have Django installed for python %s?\n" % sys.version_info.major)
  django = None
  required += 1

if django and django.VERSION[:2] < (3, 2):
  sys.stderr.write("[REQUIRED] You have django version %s installed, but version 3.2 or greater is required\n" % django.get_version())
  required += 1


# Test for pyparsing
try:
  import pyparsing
except ImportError:
  sys.stderr.write("[REQUIRED] Unable to import the 'pyparsing' module, do you have pyparsing installed for python %s? It parses the --state, --t and --p arguments.\n" % sys.version_info.major)
  required += 1


# Test for numpy
try:
  import numpy
except ImportError:
  sys.stderr.write("[REQUIRED] Unable to import the 'numpy' module, do you have numpy installed for python %s? The evolve command needs it.\n" % sys.version_info.major)
  required += 1


# Test for gunicorn
try:
  import gunicorn
except ImportError:
  sys.stderr.write("[OPTIONAL] Unable to import the 'gunicorn' module. It is only needed to serve the report views.\n")
  optional += 1


if optional:
  sys.stderr.write("%d optional dependencies not met. Please consider the optional items before proceeding.\n" % optional)
else:
  print("All optional dependencies are met.")

if required:
  sys.stderr.write("%d necessary dependencies not met. parafock will not function until these dependencies are fulfilled.\n" % required)
  sys.exit(1)
else:
  print("All necessary dependencies are met.")
