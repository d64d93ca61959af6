#!/usr/bin/env python

import argparse
import os

from django.core import management

parser = argparse.ArgumentParser(description='Serve the parafock report views under the django development server')
parser.add_argument('root', metavar='PARAFOCK_ROOT')
parser.add_argument('--port', default=8080, type=int, help='Port to listen on')
parser.add_argument('--interface', default='127.0.0.1', help='Interface to listen on')
parser.add_argument('--noreload', action='store_true', help='Disable monitoring for changes')
options = parser.parse_args()

os.environ.setdefault('PARAFOCK_ROOT', options.root)

print("Running parafock from %s under django development server\n" % options.root)

command = [
  'django-admin',
  'runserver',
  '--pythonpath', os.path.join(options.root, 'webapp'),
  '--settings', 'parafock.settings',
  '%s:%d' % (options.interface, options.port)
]

if options.noreload:
  command.append('--noreload')

print(' '.join(command))

management.execute_from_command_line(command)
