"""The p -> infinity limit of A-statistics.

With b_k = a_k / sqrt(p) the commutator [b_i^-, b_j^+] approaches d_ij on
any fixed subspace of at most L quanta. On a state with occupations l its
diagonal is 1 - (sum(l) + l_i)/p, so the deviation decays like 1/p.
"""
from fractions import Fraction

from django.conf import settings

from parafock.algebra.scalar import ONE, ZERO
from parafock.errors import InvalidProbeError
from parafock.fock.cao import annihilation, creation
from parafock.fock.module import A, build_module
from parafock.fock.operators import Operator
from parafock.util import Timer
from parafock.logger import log
from parafock.verify.brackets import commutator
from parafock.verify.suites import verify_pool
from parafock.worker_pool.pool import Job, ordered_results


class LimitProbe(object):
  __slots__ = ('n', 'p_list', 'cutoff')

  def __init__(self, n, p_list, cutoff):
    p_list = list(p_list)
    if not isinstance(n, int) or n < 1:
      raise InvalidProbeError('number of modes must be a positive integer, got %r' % (n,))
    if not p_list:
      raise InvalidProbeError('at least one order of statistics is needed')
    if any(b <= a for a, b in zip(p_list, p_list[1:])):
      raise InvalidProbeError('orders must be strictly increasing, got %r' % (p_list,))
    if p_list[-1] > settings.LIMIT_MAX_ORDER:
      raise InvalidProbeError('order %d is above LIMIT_MAX_ORDER=%d' % (p_list[-1], settings.LIMIT_MAX_ORDER))
    if not isinstance(cutoff, int) or cutoff < 0 or cutoff >= p_list[0]:
      raise InvalidProbeError('cutoff must satisfy 0 <= L < min(p), got L=%r' % (cutoff,))
    self.n = n
    self.p_list = p_list
    self.cutoff = cutoff

  def toJSON(self):
    return {'n': self.n, 'p_list': self.p_list, 'cutoff': self.cutoff}


class LimitRow(object):
  __slots__ = ('p', 'dim', 'deviation', 'closed_form', 'bound', 'creation_vanish')

  def __init__(self, p, dim, deviation, closed_form, bound, creation_vanish):
    self.p = p
    self.dim = dim
    self.deviation = deviation
    self.closed_form = closed_form
    self.bound = bound
    self.creation_vanish = creation_vanish

  @property
  def deviation_max(self):
    return abs(self.deviation)

  def toJSON(self):
    return {
      'p': self.p,
      'dim': self.dim,
      'deviation_max': self.deviation_max,
      'deviation_exact': self.deviation,
      'closed_form': [self.closed_form.numerator, self.closed_form.denominator],
      'bound_2L_over_p': float(self.bound),
      'creation_commutators_vanish': self.creation_vanish,
    }


def closed_form(module, cutoff):
  "max over probed states and modes of (sum(l) + l_i)/p"
  p = module.family.p
  best = 0
  for state in module.basis:
    if state.total <= cutoff:
      best = max(best, state.total + max(state.occ))
  return Fraction(best, p)


def _block_caos(module, cutoff):
  """a_i^+ and a_i^- filled in on the columns with at most cutoff + 1 quanta.

  Every product in a commutator taken on the states with at most cutoff
  quanta passes only through those columns, so the rest of the module is
  never touched.
  """
  n = module.family.n
  columns = module.below(cutoff + 1)
  plus = [creation(module, i, columns=columns) for i in range(1, n + 1)]
  minus = [annihilation(module, i, columns=columns) for i in range(1, n + 1)]
  return plus, minus


def _deviation(module, plus, minus, cutoff):
  "The largest entry of [b_i^-, b_j^+] - d_ij on the probed block, exact"
  n = module.family.n
  block = module.below(cutoff)
  one = Operator(module, dict(((c, c), ONE) for c in block))
  scale = Fraction(1, module.family.p)
  best = ZERO
  best_abs = 0.0
  for i in range(n):
    for j in range(n):
      residual = commutator(minus[i], plus[j]).restrict(block).scale(scale)
      if i == j:
        residual = residual.sub(one)
      for value in residual.entries.values():
        magnitude = abs(value)
        if magnitude > best_abs:
          best, best_abs = value, magnitude
  return best


def boson_limit_deviation(probe):
  "[(p, float deviation)] for every order of the probe"
  return [(row.p, row.deviation_max) for row in boson_limit_table(probe)]


def _limit_row(n, p, cutoff):
  module = build_module(A, n, p)
  plus, minus = _block_caos(module, cutoff)
  return LimitRow(
    p, module.dim,
    _deviation(module, plus, minus, cutoff),
    closed_form(module, cutoff),
    Fraction(2 * cutoff, p),
    _creation_commutators_vanish(module, plus, cutoff),
  )


def boson_limit_table(probe):
  timer = Timer('limits.boson')
  jobs = [Job(_limit_row, 'boson limit p=%d' % p, probe.n, p, probe.cutoff) for p in probe.p_list]
  rows = ordered_results(verify_pool(), jobs, settings.VERIFY_TIMEOUT)
  log.verify('boson limit n=%d L=%d over %d orders in %.6fs' % (probe.n, probe.cutoff, len(rows), timer.elapsed()))
  return rows


def _creation_commutators_vanish(module, plus, cutoff):
  block = module.below(cutoff)
  scale = Fraction(1, module.family.p)
  n = module.family.n
  return all(
    commutator(plus[i], plus[j]).restrict_columns(block).scale(scale).is_zero()
    for i in range(n) for j in range(n)
  )


def creation_commutators_vanish(probe):
  "[(p, True iff every [b_i^+, b_j^+] is exactly zero on the probed block)]"
  rows = []
  for p in probe.p_list:
    module = build_module(A, probe.n, p)
    plus, _ = _block_caos(module, probe.cutoff)
    rows.append((p, _creation_commutators_vanish(module, plus, probe.cutoff)))
  return rows
