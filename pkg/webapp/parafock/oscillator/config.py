from math import sqrt

from django.conf import settings

from parafock.errors import InvalidFamilyError, PhysicalConditionError
from parafock.fock.cao import PHASE_CONVENTIONS

MODES = 3


class OscillatorConfig(object):
  """Order of statistics plus the physical constants of the oscillator.

  Exact checks always run in natural units (hbar = m = omega = 1); the
  constants only scale the float values of reports.
  """
  __slots__ = ('p', 'hbar', 'mass', 'omega', 'phase')

  def __init__(self, p, hbar=1.0, mass=1.0, omega=1.0, phase=None):
    if not isinstance(p, int) or p < 1:
      raise InvalidFamilyError('order of statistics must be a positive integer, got %r' % (p,))
    for name, value in (('hbar', hbar), ('mass', mass), ('omega', omega)):
      if not value > 0:
        raise PhysicalConditionError('%s must be positive, got %r' % (name, value))
    if phase is None:
      phase = settings.DEFAULT_PHASE_CONVENTION
    if phase not in PHASE_CONVENTIONS:
      raise InvalidFamilyError('unknown phase convention %r' % (phase,))
    self.p = p
    self.hbar = float(hbar)
    self.mass = float(mass)
    self.omega = float(omega)
    self.phase = phase

  @property
  def length_unit(self):
    "sqrt(hbar / m omega); natural positions are measured in it"
    return sqrt(self.hbar / (self.mass * self.omega))

  @property
  def momentum_unit(self):
    return sqrt(self.mass * self.omega * self.hbar)

  @property
  def energy_unit(self):
    return self.hbar * self.omega

  def toJSON(self):
    return {'p': self.p, 'hbar': self.hbar, 'mass': self.mass, 'omega': self.omega, 'phase': self.phase}

  def __repr__(self):
    return 'OscillatorConfig(p=%d, hbar=%g, mass=%g, omega=%g)' % (self.p, self.hbar, self.mass, self.omega)
