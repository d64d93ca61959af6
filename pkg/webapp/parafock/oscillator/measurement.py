"""Spectrum, position support and uncertainties on basis states."""
import itertools
import math

from fractions import Fraction

from parafock.algebra.scalar import ZERO, sqrt
from parafock.errors import PhysicalConditionError
from parafock.fock.states import basis_vector, expectation
from parafock.oscillator.observables import build_observables


class SpectrumLevel(object):
  "One energy level; ``exact`` is E / (hbar omega), a Fraction"
  __slots__ = ('q', 'exact', 'energy', 'multiplicity')

  def __init__(self, q, exact, energy, multiplicity):
    self.q = q
    self.exact = exact
    self.energy = energy
    self.multiplicity = multiplicity

  def toJSON(self):
    return {
      'q': self.q,
      'energy': self.energy,
      'energy_exact': [self.exact.numerator, self.exact.denominator],
      'multiplicity': self.multiplicity,
    }


def spectrum(cfg):
  """Levels of H, read off its exact diagonal and grouped by q.

  E_q = (hbar omega / 2)(3p - 2q) for q = 0..min(p, 3), multiplicity C(3, q).
  """
  obs = build_observables(cfg)
  module = obs.module
  if not obs.H.is_diagonal():
    raise PhysicalConditionError('Hamiltonian is not diagonal in the occupation basis')
  values = {}
  counts = {}
  for position, value in enumerate(obs.H.diagonal()):
    q = module.basis[position].total
    value = value.as_fraction()
    if values.setdefault(q, value) != value:
      raise PhysicalConditionError('energy on level q=%d is not unique' % q)
    counts[q] = counts.get(q, 0) + 1
  return [
    SpectrumLevel(q, values[q], float(values[q]) * cfg.energy_unit, counts[q])
    for q in sorted(values)
  ]


def expected_multiplicity(q, modes=3):
  return math.comb(modes, q)


def measurement_support(cfg, state):
  """Points a position measurement can return on a basis state.

  Coordinates are +/-sqrt(p - q + theta_k) in units sqrt(hbar / 2 m omega),
  obtained from the exact eigenvalues of R_k^2; at most 8 distinct points.
  Only defined for p > 2.
  """
  if cfg.p <= 2:
    raise PhysicalConditionError('the position support is defined for p > 2, got p=%d' % cfg.p)
  obs = build_observables(cfg)
  position = obs.module.position(state)
  coordinates = []
  for r_sq in obs.R_sq:
    # R_k^2 = (hbar/2m omega) x^2, i.e. x^2 = 2 R_k^2 in natural units
    x_sq = (r_sq.entry(position, position) * 2).as_fraction()
    x = sqrt(x_sq)
    coordinates.append((x, -x) if x else (ZERO,))
  points = []
  for point in itertools.product(*coordinates):
    if point not in points:
      points.append(point)
  return points


def support_unit(cfg):
  "sqrt(hbar / 2 m omega), the unit of the support coordinates"
  return cfg.length_unit * math.sqrt(0.5)


class UncertaintyRecord(object):
  """Means and standard deviations of R_k, P_k on one basis state.

  The exact fields are in natural units; the float fields carry hbar, m
  and omega.
  """
  __slots__ = ('cfg', 'occ', 'mean_R', 'mean_P', 'dR', 'dP', 'product', 'window')

  def __init__(self, cfg, occ, mean_R, mean_P, dR, dP, product, window):
    self.cfg = cfg
    self.occ = occ
    self.mean_R = mean_R
    self.mean_P = mean_P
    self.dR = dR
    self.dP = dP
    self.product = product
    self.window = window

  def in_window(self):
    low, high = self.window
    return [low <= value.as_fraction() <= high for value in self.product]

  def physical(self):
    cfg = self.cfg
    return {
      'mean_R': [complex(x).real * cfg.length_unit for x in self.mean_R],
      'mean_P': [complex(x).real * cfg.momentum_unit for x in self.mean_P],
      'dR': [abs(x) * cfg.length_unit for x in self.dR],
      'dP': [abs(x) * cfg.momentum_unit for x in self.dP],
      'product': [abs(x) * cfg.hbar for x in self.product],
      'window': [float(self.window[0]) * cfg.hbar, float(self.window[1]) * cfg.hbar],
    }

  def toJSON(self):
    data = self.physical()
    data.update({
      'state': list(self.occ),
      'p': self.cfg.p,
      'in_window': self.in_window(),
      'exact': {
        'dR': self.dR,
        'dP': self.dP,
        'product': self.product,
      },
    })
    return data


def _standard_deviation(op, vector):
  mean = expectation(op, vector)
  variance = expectation(op.compose(op), vector) - mean * mean
  return mean, sqrt(variance.as_fraction())


def uncertainty_report(cfg, state):
  """Exact means and deviations on a basis state.

  dR_k dP_k = (p - q + theta_k)/2, inside [(p-2)/2, p/2] (units of hbar).
  """
  obs = build_observables(cfg)
  module = obs.module
  occ = module.state(state).occ
  vector = basis_vector(module, occ)
  mean_R, mean_P, dR, dP = [], [], [], []
  for r, p in zip(obs.R, obs.P):
    m, d = _standard_deviation(r, vector)
    mean_R.append(m)
    dR.append(d)
    m, d = _standard_deviation(p, vector)
    mean_P.append(m)
    dP.append(d)
  product = [x * y for x, y in zip(dR, dP)]
  window = (Fraction(cfg.p - 2, 2), Fraction(cfg.p, 2))
  return UncertaintyRecord(cfg, occ, mean_R, mean_P, dR, dP, product, window)


class BoundTension(object):
  """Basis states whose uncertainty product exceeds hbar/2.

  The single-product bound dR dP <= hbar/2 holds only for p = 1; the
  window [(p-2)/2, p/2] reaches p/2 for larger p.
  """
  __slots__ = ('p', 'exceeding')

  def __init__(self, p, exceeding):
    self.p = p
    self.exceeding = exceeding

  @property
  def bound_holds(self):
    return not self.exceeding

  def toJSON(self):
    return {
      'p': self.p,
      'bound': 'dR dP <= hbar/2',
      'bound_holds': self.bound_holds,
      'exceeding': [{'state': list(occ), 'mode': k, 'product': float(value)} for occ, k, value in self.exceeding],
    }


def bound_tension(cfg):
  obs = build_observables(cfg)
  half = Fraction(1, 2)
  exceeding = []
  for state in obs.module.basis:
    record = uncertainty_report(cfg, state.occ)
    for k, value in enumerate(record.product):
      value = value.as_fraction()
      if value > half:
        exceeding.append((state.occ, k + 1, value))
  return BoundTension(cfg.p, exceeding)
