from parafock.fock.operators import Operator


class RelationReport(object):
  """Verdict for one instance of an identity.

  ``exact_pass`` is True exactly when the residual has no entries; the float
  ``residual_max_abs`` is informational.
  """
  __slots__ = ('identity_name', 'index_tuple', 'residual_max_abs', 'exact_pass', 'family', 'n', 'p', 'suite')

  def __init__(self, identity_name, index_tuple, residual, family, suite=''):
    entries = residual.entries if isinstance(residual, Operator) else residual
    self.identity_name = identity_name
    self.index_tuple = tuple(index_tuple)
    self.exact_pass = not entries
    self.residual_max_abs = max(abs(v) for v in entries.values()) if entries else 0.0
    self.family = family.tag
    self.n = family.n
    self.p = family.p
    self.suite = suite

  def toJSON(self):
    return {
      'suite': self.suite,
      'identity_name': self.identity_name,
      'index_tuple': list(self.index_tuple),
      'residual_max_abs': self.residual_max_abs,
      'exact_pass': self.exact_pass,
      'family': self.family,
      'n': self.n,
      'p': self.p,
    }

  def __repr__(self):
    return '<RelationReport %s %s %s>' % (
      self.identity_name, self.index_tuple, 'pass' if self.exact_pass else 'FAIL residual=%g' % self.residual_max_abs)


class SuiteSummary(object):
  __slots__ = ('suite', 'instances', 'failures')

  def __init__(self, suite, instances, failures):
    self.suite = suite
    self.instances = instances
    self.failures = failures

  @property
  def passed(self):
    return self.failures == 0

  def line(self):
    return '%s: %d instances, %d failures' % (self.suite, self.instances, self.failures)

  def toJSON(self):
    return {'suite': self.suite, 'instances': self.instances, 'failures': self.failures}


def summarize(reports):
  "One SuiteSummary per suite name, in first-seen order"
  order = []
  counts = {}
  for report in reports:
    if report.suite not in counts:
      order.append(report.suite)
      counts[report.suite] = [0, 0]
    counts[report.suite][0] += 1
    if not report.exact_pass:
      counts[report.suite][1] += 1
  return [SuiteSummary(suite, counts[suite][0], counts[suite][1]) for suite in order]


def all_pass(reports):
  return all(report.exact_pass for report in reports)


def failures(reports):
  return [report for report in reports if not report.exact_pass]
