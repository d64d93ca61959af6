from parafock.grammar import parse_time_grid
from parafock.report.documents import evolve_document
from parafock.report.management.commands._base import ParafockCommand


class Command(ParafockCommand):
  help = 'Expectation values of R(t) and P(t) on a basis state over a time grid'
  physics = True

  def add_arguments(self, parser):
    super(Command, self).add_arguments(parser)
    parser.add_argument('--state', required=True, help='occupations, e.g. 0,0,0')
    parser.add_argument('--t', required=True, help='time grid start:stop:step')
    parser.add_argument('--literal-momentum', action='store_true',
                        help='build P(t) with a plus sign between the ladder terms')

  def build(self, options):
    return evolve_document(
      self.config(options), self.state(options), parse_time_grid(options['t']), options['literal_momentum'])
