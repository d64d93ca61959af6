"""Run manifests and atomic emission of report files."""
import os
import tempfile

from datetime import datetime, timezone

from django.conf import settings

from parafock.logger import log
from parafock.util import canonical_dumps

FORMATS = ('json', 'csv', 'text')


class RunManifest(object):
  __slots__ = ('command', 'parameters', 'timestamp', 'artifact_version', 'outputs')

  def __init__(self, command, parameters, timestamp=None, outputs=None):
    self.command = command
    self.parameters = dict(parameters)
    self.timestamp = timestamp or datetime.now(timezone.utc).strftime('%Y-%m-%dT%H:%M:%SZ')
    self.artifact_version = settings.PARAFOCK_VERSION
    self.outputs = list(outputs or [])

  def toJSON(self):
    return {
      'command': self.command,
      'parameters': self.parameters,
      'timestamp': self.timestamp,
      'artifact_version': self.artifact_version,
      'outputs': self.outputs,
    }


def _atomic_write(path, body):
  directory = os.path.dirname(path)
  fd, tmp = tempfile.mkstemp(dir=directory, prefix='.tmp-')
  try:
    with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
      f.write(body)
    os.replace(tmp, path)
  except Exception:
    if os.path.exists(tmp):
      os.unlink(tmp)
    raise


def output_names(document, fmt):
  name = document.command
  if fmt == 'json':
    return ['%s.json' % name]
  if fmt == 'csv':
    names = ['%s-%s.csv' % (name, table.name.replace(' ', '-')) for table in document.tables]
    return names + ['%s-manifest.json' % name]
  if fmt == 'text':
    return ['%s.txt' % name, '%s-manifest.json' % name]
  raise ValueError('unknown report format %r' % (fmt,))


def render(document, fmt):
  "File bodies in output_names order; nothing is written here"
  if fmt == 'json':
    return [canonical_dumps(document.toJSON())]
  manifest = canonical_dumps(document.manifest.toJSON())
  if fmt == 'csv':
    return [table.to_csv() for table in document.tables] + [manifest]
  return [document.to_text(), manifest]


def write_document(document, out_dir=None, fmt='json'):
  """Write every report file of the document and return their paths.

  Bodies are rendered before the first file is opened and each file goes
  to a temporary name that is renamed into place, so a failed run leaves
  no partial file behind.
  """
  out_dir = out_dir or settings.REPORT_DIR
  paths = [os.path.join(out_dir, filename) for filename in output_names(document, fmt)]
  document.manifest.outputs = paths
  bodies = render(document, fmt)
  if not os.path.isdir(out_dir):
    os.makedirs(out_dir)
  for path, body in zip(paths, bodies):
    _atomic_write(path, body)
  log.info('%s: wrote %s' % (document.command, ', '.join(paths)))
  return paths
