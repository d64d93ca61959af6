from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from parafock.errors import ParafockError
from parafock.grammar import parse_state
from parafock.logger import log
from parafock.oscillator.config import OscillatorConfig
from parafock.report.manifest import FORMATS, write_document
from parafock.util import Timer

INVALID_ARGUMENTS = 2
RELATION_FAILURE = 1


class ParafockCommand(BaseCommand):
  """Shared flags and exit codes of the report commands.

  Subclasses implement ``build(options)`` returning a Document. Invalid
  arguments exit with status 2, failed relation instances with status 1.
  """
  physics = False

  def add_arguments(self, parser):
    parser.add_argument('--format', choices=FORMATS, default='json')
    parser.add_argument('--out', default=None, help='report directory (default: REPORT_DIR)')
    parser.add_argument('--workers', type=int, default=None,
                        help='thread count for independent instances, 0 runs them inline')
    if self.physics:
      parser.add_argument('--p', type=int, required=True, help='order of statistics')
      parser.add_argument('--hbar', type=float, default=1.0)
      parser.add_argument('--mass', type=float, default=1.0)
      parser.add_argument('--omega', type=float, default=1.0)

  def config(self, options):
    return OscillatorConfig(options['p'], options['hbar'], options['mass'], options['omega'])

  def state(self, options):
    return parse_state(options['state'])

  def build(self, options):
    raise NotImplementedError

  def handle(self, *args, **options):
    workers = options['workers']
    if workers is None:
      return self.run(options)
    if workers < 0:
      raise CommandError('--workers must be >= 0', returncode=INVALID_ARGUMENTS)
    saved = settings.USE_WORKER_POOL, settings.POOL_MAX_WORKERS
    settings.USE_WORKER_POOL, settings.POOL_MAX_WORKERS = workers > 0, workers
    try:
      return self.run(options)
    finally:
      settings.USE_WORKER_POOL, settings.POOL_MAX_WORKERS = saved

  def run(self, options):
    timer = Timer('command.%s' % self.__module__.rsplit('.', 1)[-1])
    try:
      document = self.build(options)
    except ParafockError as err:
      timer.set_msg('rejected in')
      timer.stop()
      raise CommandError(str(err), returncode=INVALID_ARGUMENTS)
    paths = write_document(document, options['out'], options['format'])
    timer.stop()
    for line in document.summary_lines():
      self.stdout.write(line)
    for path in paths:
      self.stdout.write('wrote %s' % path)
    failed = document.failures()
    if failed:
      log.info('%s: %d relation instances failed' % (document.command, len(failed)))
      raise CommandError('%d relation instances failed' % len(failed), returncode=RELATION_FAILURE)
