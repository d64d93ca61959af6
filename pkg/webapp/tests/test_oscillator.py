from fractions import Fraction

from django.conf import settings

from parafock.algebra.scalar import sqrt
from parafock.errors import InvalidFamilyError, InvalidStateError, PhysicalConditionError
from parafock.fock.cao import AS_PRINTED, cao_set
from parafock.fock.module import A, build_module
from parafock.oscillator.checks import (
  check_commuting_family, check_compatibility, check_heisenberg, check_hermiticity, check_noncanonical,
  check_spectral, check_support, run_oscillator_checks)
from parafock.oscillator.config import OscillatorConfig
from parafock.oscillator.measurement import (
  bound_tension, expected_multiplicity, measurement_support, spectrum, uncertainty_report)
from parafock.oscillator.observables import _observables, build_observables
from parafock.verify.reports import all_pass

from .base import TestCase


class ConfigTest(TestCase):

  def test_defaults(self):
    cfg = OscillatorConfig(3)
    self.assertEqual((cfg.hbar, cfg.mass, cfg.omega), (1.0, 1.0, 1.0))
    self.assertEqual(cfg.phase, 'standard')
    self.assertEqual(cfg.energy_unit, 1.0)

  def test_invalid(self):
    with self.assertRaises(InvalidFamilyError):
      OscillatorConfig(0)
    with self.assertRaises(PhysicalConditionError):
      OscillatorConfig(2, hbar=0)
    with self.assertRaises(PhysicalConditionError):
      OscillatorConfig(2, mass=-1.0)


class ObservablesTest(TestCase):

  def test_hamiltonian_diagonal(self):
    obs = build_observables(OscillatorConfig(3))
    self.assertTrue(obs.H.is_diagonal())
    for value, state in zip(obs.H.diagonal(), obs.module.basis):
      self.assertEqual(value, Fraction(9 - 2 * state.total, 2))

  def test_coordinate_squares(self):
    obs = build_observables(OscillatorConfig(4))
    for k in range(3):
      for value, state in zip(obs.R_sq[k].diagonal(), obs.module.basis):
        self.assertEqual(value, Fraction(4 - state.total + state.occ[k], 2))
    self.assertEqual(obs.R2, obs.H)
    self.assertEqual(obs.P2, obs.H)

  def test_cached_per_order(self):
    self.assertIs(build_observables(OscillatorConfig(2)), build_observables(OscillatorConfig(2, hbar=3.0)))
    self.assertLessEqual(_observables.cache_info().currsize, settings.FOCK_CACHE_SIZE)


class OscillatorChecksTest(TestCase):

  def test_all_suites_pass(self):
    for p in range(1, 7):
      reports = run_oscillator_checks(OscillatorConfig(p))
      self.assertTrue(all_pass(reports), 'p=%d' % p)

  def test_compatibility(self):
    reports = check_compatibility(OscillatorConfig(5))
    self.assertEqual(len(reports), 12)
    self.assertTrue(all_pass(reports))

  def test_compatibility_breaks_for_statistics_operators(self):
    caos = cao_set(build_module(A, 3, 2))
    self.assertFalse(all_pass(check_compatibility(OscillatorConfig(2), caos)))

  def test_heisenberg(self):
    self.assertTrue(all_pass(check_heisenberg(OscillatorConfig(3))))

  def test_hermiticity_needs_standard_phase(self):
    self.assertTrue(all_pass(check_hermiticity(OscillatorConfig(3))))
    self.assertFalse(all_pass(check_hermiticity(OscillatorConfig(3, phase=AS_PRINTED))))

  def test_commuting_family(self):
    reports = check_commuting_family(OscillatorConfig(3))
    self.assertEqual(len(reports), 36)
    self.assertTrue(all_pass(reports))

  def test_noncanonical(self):
    reports = check_noncanonical(OscillatorConfig(3))
    diagonal = [r for r in reports if r.index_tuple[0] == r.index_tuple[1]]
    self.assertEqual(len(reports), 9)
    self.assertTrue(all(not r.exact_pass for r in diagonal))

  def test_spectral_and_support(self):
    self.assertTrue(all_pass(check_spectral(OscillatorConfig(4))))
    self.assertTrue(all_pass(check_support(OscillatorConfig(4))))


class SpectrumTest(TestCase):

  def test_p3(self):
    levels = spectrum(OscillatorConfig(3))
    self.assertEqual([level.q for level in levels], [0, 1, 2, 3])
    self.assertEqual([level.energy for level in levels], [4.5, 3.5, 2.5, 1.5])
    self.assertEqual([level.multiplicity for level in levels], [1, 3, 3, 1])

  def test_p1(self):
    levels = spectrum(OscillatorConfig(1))
    self.assertEqual([(level.energy, level.multiplicity) for level in levels], [(1.5, 1), (0.5, 3)])

  def test_equal_spacing(self):
    for p in range(1, 7):
      levels = spectrum(OscillatorConfig(p))
      self.assertEqual(len(levels), min(p, 3) + 1)
      for a, b in zip(levels, levels[1:]):
        self.assertEqual(a.exact - b.exact, 1)
      for level in levels:
        self.assertEqual(level.multiplicity, expected_multiplicity(level.q))

  def test_omega_scales_energies(self):
    levels = spectrum(OscillatorConfig(3, omega=2.0))
    self.assertEqual([level.energy for level in levels], [9.0, 7.0, 5.0, 3.0])


class MeasurementTest(TestCase):

  def test_eight_points(self):
    points = measurement_support(OscillatorConfig(3), (1, 1, 0))
    self.assertEqual(len(points), 8)
    expected = set(
      (x, y, z) for x in (sqrt(2), -sqrt(2)) for y in (sqrt(2), -sqrt(2)) for z in (sqrt(1), -sqrt(1)))
    self.assertEqual(set(points), expected)

  def test_vacuum_and_top(self):
    cfg = OscillatorConfig(3)
    self.assertEqual(set(c for point in measurement_support(cfg, (0, 0, 0)) for c in point), set([sqrt(3), -sqrt(3)]))
    self.assertEqual(set(c for point in measurement_support(cfg, (1, 1, 1)) for c in point), set([sqrt(1), -sqrt(1)]))

  def test_requires_p_above_two(self):
    with self.assertRaises(PhysicalConditionError):
      measurement_support(OscillatorConfig(2), (0, 0, 0))

  def test_invalid_state(self):
    with self.assertRaises(InvalidStateError):
      measurement_support(OscillatorConfig(3), (2, 0, 0))


class UncertaintyTest(TestCase):

  def test_p1(self):
    record = uncertainty_report(OscillatorConfig(1), (1, 0, 0))
    self.assertEqual(record.product, [Fraction(1, 2), 0, 0])
    self.assertEqual(record.mean_R, [0, 0, 0])
    self.assertEqual(record.mean_P, [0, 0, 0])
    self.assertEqual(record.in_window(), [True, True, True])

  def test_deviations(self):
    record = uncertainty_report(OscillatorConfig(4), (0, 1, 0))
    # p - q + theta = (3, 4, 3)
    self.assertEqual(record.dR, [sqrt(Fraction(3, 2)), sqrt(2), sqrt(Fraction(3, 2))])
    self.assertEqual(record.dP, record.dR)

  def test_window(self):
    for p in range(1, 7):
      cfg = OscillatorConfig(p)
      products = set()
      for state in build_observables(cfg).module.basis:
        record = uncertainty_report(cfg, state.occ)
        self.assertTrue(all(record.in_window()))
        products.update(value.as_fraction() for value in record.product)
      if p >= 3:
        self.assertIn(Fraction(p - 2, 2), products)
        self.assertIn(Fraction(p, 2), products)

  def test_physical_units(self):
    record = uncertainty_report(OscillatorConfig(3, hbar=2.0, mass=0.5, omega=4.0), (0, 0, 0))
    physical = record.physical()
    self.assertAlmostEqual(physical['product'][0], 3.0)
    self.assertAlmostEqual(physical['dR'][0], (1.5 * 2.0 / (0.5 * 4.0)) ** 0.5)
    self.assertEqual(physical['window'], [1.0, 3.0])

  def test_bound_tension(self):
    self.assertTrue(bound_tension(OscillatorConfig(1)).bound_holds)
    tension = bound_tension(OscillatorConfig(3))
    self.assertFalse(tension.bound_holds)
    self.assertIn(((0, 0, 0), 1, Fraction(3, 2)), tension.exceeding)
