"""Position, momentum and energy of the 3D A-superoscillator.

All operators act on the ASuper n=3 module of order p and are exact, in
natural units:

  R_k = (a_k^+ + a_k^-)/sqrt2
  P_k = -i (a_k^+ - a_k^-)/sqrt2
  H   = 1/2 sum_i {a_i^+, a_i^-}
"""
from fractions import Fraction
from functools import lru_cache

from django.conf import settings

from parafock.algebra.scalar import I, sqrt
from parafock.fock.cao import cao_set
from parafock.fock.module import ASUPER, build_module
from parafock.oscillator.config import MODES
from parafock.verify.brackets import anticommutator
from parafock.verify.suites import linear_combination

_HALF = Fraction(1, 2)
_HALF_ROOT2 = sqrt(_HALF)


class ObservableSet(object):
  __slots__ = ('module', 'caos', 'H', 'R', 'P', 'R2', 'P2', 'R_sq', 'P_sq')

  def __init__(self, caos):
    self.module = caos.module
    self.caos = caos
    self.R = [x.add(y).scale(_HALF_ROOT2) for x, y in zip(caos.plus, caos.minus)]
    self.P = [x.sub(y).scale(-I * _HALF_ROOT2) for x, y in zip(caos.plus, caos.minus)]
    self.H = linear_combination(
      self.module, [(_HALF, anticommutator(x, y)) for x, y in zip(caos.plus, caos.minus)])
    self.R_sq = [r.compose(r) for r in self.R]
    self.P_sq = [p.compose(p) for p in self.P]
    self.R2 = linear_combination(self.module, [(1, r) for r in self.R_sq])
    self.P2 = linear_combination(self.module, [(1, p) for p in self.P_sq])

  def commuting_family(self):
    "The operators that are simultaneously diagonal in the occupation basis"
    family = [('H', self.H), ('R^2', self.R2), ('P^2', self.P2)]
    family.extend(('R%d^2' % (k + 1), op) for k, op in enumerate(self.R_sq))
    family.extend(('P%d^2' % (k + 1), op) for k, op in enumerate(self.P_sq))
    return family

  def named(self):
    named = [('H', self.H)]
    named.extend(('R%d' % (k + 1), op) for k, op in enumerate(self.R))
    named.extend(('P%d' % (k + 1), op) for k, op in enumerate(self.P))
    named.extend([('R^2', self.R2), ('P^2', self.P2)])
    return named


def build_observables(cfg, caos=None):
  """Exact observables for order cfg.p.

  ``caos`` replaces the ASuper operators, e.g. with A-statistics operators
  of the same size when a relation is expected to break.
  """
  if caos is not None:
    return ObservableSet(caos)
  return _observables(cfg.p, cfg.phase)


@lru_cache(maxsize=settings.FOCK_CACHE_SIZE)
def _observables(p, phase):
  module = build_module(ASUPER, MODES, p)
  return ObservableSet(cao_set(module, phase))
