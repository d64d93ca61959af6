from parafock.report.documents import uncertainty_document
from parafock.report.management.commands._base import ParafockCommand


class Command(ParafockCommand):
  help = 'Position and momentum uncertainties on an occupation basis state'
  physics = True

  def add_arguments(self, parser):
    super(Command, self).add_arguments(parser)
    parser.add_argument('--state', required=True, help='occupations, e.g. 1,0,0')

  def build(self, options):
    return uncertainty_document(self.config(options), self.state(options))
