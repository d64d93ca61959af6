import math

import numpy as np

from parafock.oscillator.config import OscillatorConfig
from parafock.oscillator.dynamics import evolve, expectation_trajectory, is_hermitian
from parafock.oscillator.observables import build_observables

from .base import TestCase


class EvolveTest(TestCase):

  def test_initial_value(self):
    cfg = OscillatorConfig(3)
    obs = build_observables(cfg)
    R, P = evolve(cfg, 0.0)
    for k in range(3):
      np.testing.assert_allclose(R[k], obs.R[k].to_dense(), atol=1e-12)
      np.testing.assert_allclose(P[k], obs.P[k].to_dense(), atol=1e-12)

  def test_period(self):
    cfg = OscillatorConfig(4, omega=2.0)
    R0, P0 = evolve(cfg, 0.0)
    R1, P1 = evolve(cfg, 2 * math.pi / cfg.omega)
    for k in range(3):
      np.testing.assert_allclose(R1[k], R0[k], atol=1e-10)
      np.testing.assert_allclose(P1[k], P0[k], atol=1e-10)

  def test_hermitian(self):
    cfg = OscillatorConfig(3)
    R, P = evolve(cfg, 0.7)
    self.assertTrue(all(is_hermitian(x) for x in R + P))

  def test_literal_momentum_is_not_hermitian(self):
    cfg = OscillatorConfig(3)
    _, P = evolve(cfg, 0.7, literal_momentum=True)
    self.assertFalse(any(is_hermitian(x) for x in P))

  def test_hamilton_equations(self):
    cfg = OscillatorConfig(3, hbar=1.0, mass=2.0, omega=1.5)
    step = 1e-5
    for t in (0.0, 0.4, 2.1):
      R_before, _ = evolve(cfg, t - step)
      R_after, _ = evolve(cfg, t + step)
      _, P = evolve(cfg, t)
      for k in range(3):
        derivative = (R_after[k] - R_before[k]) / (2 * step)
        np.testing.assert_allclose(derivative, P[k] / cfg.mass, rtol=1e-6, atol=1e-8)

  def test_literal_momentum_breaks_hamilton_equations(self):
    cfg = OscillatorConfig(3)
    step = 1e-5
    R_before, _ = evolve(cfg, 0.3 - step)
    R_after, _ = evolve(cfg, 0.3 + step)
    _, P = evolve(cfg, 0.3, literal_momentum=True)
    derivative = (R_after[0] - R_before[0]) / (2 * step)
    self.assertFalse(np.allclose(derivative, P[0] / cfg.mass, atol=1e-6))


class TrajectoryTest(TestCase):

  def test_means_vanish(self):
    rows = expectation_trajectory(OscillatorConfig(3), (0, 0, 0), [0.1 * k for k in range(63)])
    self.assertEqual(len(rows), 63)
    for row in rows:
      for k in (1, 2, 3):
        self.assertAlmostEqual(row['R%d' % k], 0.0)
        self.assertAlmostEqual(row['P%d' % k], 0.0)
        self.assertAlmostEqual(row['R%d^2' % k], 1.5)
