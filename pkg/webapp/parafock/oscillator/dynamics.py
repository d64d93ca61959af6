"""Heisenberg-picture time evolution, in floating point.

Since [H, a_k^+] = -a_k^+, the ladder operators evolve as
a_k^+(t) = a_k^+ exp(-i omega t) and a_k^-(t) = a_k^- exp(i omega t).
"""
import numpy as np

from parafock.oscillator.observables import build_observables


def _ladders(cfg):
  obs = build_observables(cfg)
  plus = [op.to_dense() for op in obs.caos.plus]
  minus = [op.to_dense() for op in obs.caos.minus]
  return plus, minus


def evolve(cfg, t, literal_momentum=False):
  """R_k(t) and P_k(t) as dense complex matrices in physical units.

  With ``literal_momentum`` P_k(t) is built with a plus sign between the
  two ladder terms, which gives an operator that is not hermitian.
  """
  plus, minus = _ladders(cfg)
  phase = np.exp(-1j * cfg.omega * t)
  r_scale = np.sqrt(cfg.hbar / (2.0 * cfg.mass * cfg.omega))
  p_scale = np.sqrt(cfg.mass * cfg.omega * cfg.hbar / 2.0)
  sign = 1.0 if literal_momentum else -1.0
  R = [r_scale * (a * phase + b * np.conj(phase)) for a, b in zip(plus, minus)]
  P = [-1j * p_scale * (a * phase + sign * b * np.conj(phase)) for a, b in zip(plus, minus)]
  return R, P


def is_hermitian(matrix, atol=1e-12):
  return np.allclose(matrix, matrix.conj().T, atol=atol)


def expectation_trajectory(cfg, state, times, literal_momentum=False):
  """<R_k(t)>, <P_k(t)> and <R_k(t)^2> on a basis state, one row per t."""
  obs = build_observables(cfg)
  position = obs.module.position(state)
  psi = np.zeros(obs.module.dim, dtype=complex)
  psi[position] = 1.0
  rows = []
  for t in times:
    R, P = evolve(cfg, t, literal_momentum)
    row = {'t': float(t)}
    for k, (r, p) in enumerate(zip(R, P)):
      row['R%d' % (k + 1)] = np.vdot(psi, r @ psi).real
      row['P%d' % (k + 1)] = np.vdot(psi, p @ psi).real
      row['R%d^2' % (k + 1)] = np.vdot(psi, r @ r @ psi).real
    rows.append(row)
  return rows


TRAJECTORY_COLUMNS = ['t', 'R1', 'R2', 'R3', 'P1', 'P2', 'P3', 'R1^2', 'R2^2', 'R3^2']
