"""Exact matrix identities of the oscillator, as RelationReport suites.

Every check runs in natural units on the exact ObservableSet.
"""
from fractions import Fraction

from parafock.algebra.scalar import I
from parafock.fock.operators import diagonal, identity, zero
from parafock.verify.brackets import anticommutator, commutator
from parafock.verify.suites import delta, linear_combination, run_suite
from parafock.oscillator.observables import build_observables


def _difference(x, y):
  return x.sub(y)


def _commutator_residual(x, y, expected):
  return commutator(x, y).sub(expected)


def _scaled_commutator_residual(c, x, y, expected):
  return commutator(x, y).scale(c).sub(expected)


def check_compatibility(cfg, caos=None):
  """[H, P_k] = i R_k, [H, R_k] = -i P_k and
  sum_i [{a_i^+, a_i^-}, a_k^(+/-)] = -/+ 2 a_k^(+/-)."""
  obs = build_observables(cfg, caos)
  module = obs.module
  caos = obs.caos
  instances = []
  for k in range(len(obs.R)):
    instances.append(('[H,P] = iR', (k + 1,), _commutator_residual, (obs.H, obs.P[k], obs.R[k].scale(I))))
    instances.append(('[H,R] = -iP', (k + 1,), _commutator_residual, (obs.H, obs.R[k], obs.P[k].scale(-I))))
  number_sum = linear_combination(module, [(1, anticommutator(x, y)) for x, y in zip(caos.plus, caos.minus)])
  for k in range(caos.n):
    instances.append(('sum[{a+,a-},a+] = -2a+', (k + 1,), _commutator_residual,
                      (number_sum, caos.plus[k], caos.plus[k].scale(-2))))
    instances.append(('sum[{a+,a-},a-] = 2a-', (k + 1,), _commutator_residual,
                      (number_sum, caos.minus[k], caos.minus[k].scale(2))))
  return run_suite('compatibility', module.family, instances)


def check_heisenberg(cfg, caos=None):
  "i[H, R_k] = P_k and i[H, P_k] = -R_k, the Hamilton equations"
  obs = build_observables(cfg, caos)
  instances = []
  for k in range(len(obs.R)):
    instances.append(('i[H,R] = P', (k + 1,), _scaled_commutator_residual, (I, obs.H, obs.R[k], obs.P[k])))
    instances.append(('i[H,P] = -R', (k + 1,), _scaled_commutator_residual, (I, obs.H, obs.P[k], obs.R[k].neg())))
  return run_suite('heisenberg', obs.module.family, instances)


def check_hermiticity(cfg, caos=None):
  obs = build_observables(cfg, caos)
  instances = [
    ('X = X^dagger', (name,), _difference, (op, op.adjoint()))
    for name, op in obs.named()
  ]
  return run_suite('hermiticity', obs.module.family, instances)


def check_commuting_family(cfg, caos=None):
  "Every pair of H, R^2, P^2, R_i^2, P_i^2 commutes"
  obs = build_observables(cfg, caos)
  family = obs.commuting_family()
  module = obs.module
  instances = []
  for x in range(len(family)):
    for y in range(x + 1, len(family)):
      instances.append(('[X,Y] = 0', (family[x][0], family[y][0]), _commutator_residual,
                        (family[x][1], family[y][1], zero(module))))
  return run_suite('commuting family', module.family, instances)


def check_noncanonical(cfg, caos=None):
  """[R_j, P_k] - i d_jk as reports; a failing diagonal instance witnesses
  that the representation is noncanonical."""
  obs = build_observables(cfg, caos)
  one = identity(obs.module)
  instances = []
  for j in range(len(obs.R)):
    for k in range(len(obs.P)):
      instances.append(('[R,P] = i delta', (j + 1, k + 1), _commutator_residual,
                        (obs.R[j], obs.P[k], one.scale(I * delta(j, k)))))
  return run_suite('canonical', obs.module.family, instances)


def energy_levels(module):
  "Diagonal of 2H on the basis: 3p - 2q"
  p = module.family.p
  return [3 * p - 2 * state.total for state in module.basis]


def check_spectral(cfg, caos=None):
  """2R^2, 2P^2 and 2H all equal sum_i {a_i^+, a_i^-}, which is diagonal
  with entries 3p - 2q."""
  obs = build_observables(cfg, caos)
  module = obs.module
  caos = obs.caos
  number_sum = linear_combination(module, [(1, anticommutator(x, y)) for x, y in zip(caos.plus, caos.minus)])
  instances = [
    ('2R^2 = sum{a+,a-}', (), _difference, (obs.R2.scale(2), number_sum)),
    ('2P^2 = sum{a+,a-}', (), _difference, (obs.P2.scale(2), number_sum)),
    ('2H = sum{a+,a-}', (), _difference, (obs.H.scale(2), number_sum)),
    ('sum{a+,a-} = 3p - 2q', (), _difference, (number_sum, diagonal(module, energy_levels(module)))),
  ]
  return run_suite('spectral', module.family, instances)


def support_diagonal(module, k):
  "Diagonal of R_k^2 in natural units: (p - q + theta_k)/2"
  p = module.family.p
  return [Fraction(p - state.total + state.occ[k], 2) for state in module.basis]


def check_support(cfg, caos=None):
  "R_k^2 is diagonal with entries (p - q + theta_k)/2"
  obs = build_observables(cfg, caos)
  module = obs.module
  instances = [
    ('R^2 = (p-q+theta)/2', (k + 1,), _difference, (obs.R_sq[k], diagonal(module, support_diagonal(module, k))))
    for k in range(len(obs.R_sq))
  ]
  return run_suite('support', module.family, instances)


OSCILLATOR_CHECKS = (
  check_compatibility,
  check_heisenberg,
  check_hermiticity,
  check_commuting_family,
  check_spectral,
  check_support,
)


def run_oscillator_checks(cfg, caos=None):
  "Every pass/fail oscillator suite; the noncanonical witness is separate"
  reports = []
  for check in OSCILLATOR_CHECKS:
    reports.extend(check(cfg, caos))
  return reports
