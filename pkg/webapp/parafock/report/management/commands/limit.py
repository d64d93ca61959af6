from parafock.grammar import parse_orders
from parafock.report.documents import limit_document
from parafock.report.management.commands._base import ParafockCommand


class Command(ParafockCommand):
  help = 'Deviation of scaled A-statistics operators from Bose relations as p grows'

  def add_arguments(self, parser):
    super(Command, self).add_arguments(parser)
    parser.add_argument('--n', type=int, required=True, help='number of modes')
    parser.add_argument('--p', required=True, help='increasing orders, e.g. 8,16,32,64')
    parser.add_argument('--cutoff', type=int, required=True, help='largest total occupation probed')

  def build(self, options):
    return limit_document(options['n'], parse_orders(options['p']), options['cutoff'])
