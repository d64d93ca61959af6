from django.conf import settings

from parafock.fock.cao import PHASE_CONVENTIONS
from parafock.fock.module import FAMILY_ALIASES
from parafock.report.documents import verify_document
from parafock.report.management.commands._base import ParafockCommand


class Command(ParafockCommand):
  help = 'Verify every relation of a statistics family on its Fock module'

  def add_arguments(self, parser):
    super(Command, self).add_arguments(parser)
    parser.add_argument('--family', choices=sorted(FAMILY_ALIASES), required=True)
    parser.add_argument('--n', type=int, required=True, help='number of modes')
    parser.add_argument('--p', type=int, default=1, help='order of statistics (cutoff for bose)')
    parser.add_argument('--phase', choices=PHASE_CONVENTIONS, default=None)

  def build(self, options):
    phase = options['phase'] or settings.DEFAULT_PHASE_CONVENTION
    return verify_document(options['family'], options['n'], options['p'], phase)
