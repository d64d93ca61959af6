from parafock.report.documents import measure_document
from parafock.report.management.commands._base import ParafockCommand


class Command(ParafockCommand):
  help = 'Possible outcomes of a position measurement on a basis state (p > 2)'
  physics = True

  def add_arguments(self, parser):
    super(Command, self).add_arguments(parser)
    parser.add_argument('--state', required=True, help='occupations, e.g. 1,1,0')

  def build(self, options):
    return measure_document(self.config(options), self.state(options))
