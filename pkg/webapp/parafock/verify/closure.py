"""Closure of the CAO span under the (super)commutator.

The generators are the CAOs together with the brackets of every pair of
CAOs. The span is closed when the bracket of any two generators lies in it
again, which identifies the Lie (super)algebra the CAOs generate: sl(n+1)
for A-statistics, sl(1|n) for A-superstatistics and so(2n+1) for Fermi
operators.
"""
from parafock.algebra.linalg import SpanSolver
from parafock.errors import InvalidFamilyError
from parafock.fock.cao import cao_set
from parafock.fock.module import A, ASUPER, FERMI
from parafock.verify.brackets import bracket, commutator
from parafock.verify.suites import run_suite


def expected_rank(family):
  n = family.n
  if family.tag == FERMI:
    return n * (2 * n + 1)
  return (n + 1) ** 2 - 1


class ClosureResult(object):
  __slots__ = ('family', 'rank', 'expected_rank', 'reports')

  def __init__(self, family, rank, reports):
    self.family = family
    self.rank = rank
    self.expected_rank = expected_rank(family)
    self.reports = reports

  @property
  def closed(self):
    return all(report.exact_pass for report in self.reports)

  def toJSON(self):
    return {
      'family': self.family.tag,
      'n': self.family.n,
      'p': self.family.p,
      'span_dimension': self.rank,
      'algebra_dimension': self.expected_rank,
      'closed': self.closed,
      'brackets': len(self.reports),
    }


def _labelled_generators(caos, product):
  labelled = []
  for i in range(caos.n):
    labelled.append(('a%d+' % (i + 1), caos.plus[i]))
  for i in range(caos.n):
    labelled.append(('a%d-' % (i + 1), caos.minus[i]))
  cao_count = len(labelled)
  for x in range(cao_count):
    for y in range(x, cao_count):
      name_x, op_x = labelled[x]
      name_y, op_y = labelled[y]
      value = product(op_x, op_y)
      if not value.is_zero():
        labelled.append(('[%s,%s]' % (name_x, name_y), value))
  return labelled


def _bracket_remainder(solver, product, x, y):
  return solver.remainder(product(x, y).entries)


def verify_closure(module, phase='standard'):
  """Check that every bracket of two generators lies in their span.

  A and Fermi CAOs close under commutators; A-superstatistics CAOs under
  the supercommutator. Returns a ClosureResult whose reports carry the
  out-of-span remainder of each bracket.
  """
  family = module.family
  if family.tag in (A, FERMI):
    product = commutator
  elif family.tag == ASUPER:
    product = bracket
  else:
    raise InvalidFamilyError('closure is checked for A, ASuper and Fermi modules, not %s' % family.tag)
  generators = _labelled_generators(cao_set(module, phase), product)
  solver = SpanSolver([op.entries for _, op in generators])
  instances = []
  for x in range(len(generators)):
    for y in range(x, len(generators)):
      name_x, op_x = generators[x]
      name_y, op_y = generators[y]
      instances.append(('bracket in span', (name_x, name_y), _bracket_remainder, (solver, product, op_x, op_y)))
  reports = run_suite('closure', family, instances)
  return ClosureResult(family, solver.rank, reports)
