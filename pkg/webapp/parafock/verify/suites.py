"""Exhaustive verification suites for the triple relations of each family.

Every suite enumerates its index set lexicographically, evaluates each
instance as an independent job and returns RelationReports in enumeration
order. Failures are reported, never raised.
"""
from django.conf import settings

from parafock.algebra.scalar import I, ONE, RadicalScalar
from parafock.fock.cao import cao_set, gl_generators, position_momentum
from parafock.fock.module import A, ASUPER, FERMI, build_module
from parafock.fock.operators import identity, zero
from parafock.fock.states import monomial_state, normalized_basis_state, vacuum_vector, _compositions
from parafock.logger import log
from parafock.util import Timer
from parafock.verify.brackets import anticommutator, commutator
from parafock.verify.reports import RelationReport
from parafock.worker_pool.pool import Job, get_pool, ordered_results


def delta(i, j):
  return 1 if i == j else 0


def linear_combination(module, terms, grade=None):
  "sum(c * op) over (c, op) pairs with c != 0"
  total = None
  for c, op in terms:
    if not c:
      continue
    term = op.scale(c)
    total = term if total is None else total.add(term)
  if total is None:
    return zero(module, grade)
  return total


def _vector_difference(u, v):
  out = dict(u)
  for k, value in v.items():
    new = out.get(k, RadicalScalar()) - value
    if new:
      out[k] = new
    else:
      out.pop(k, None)
  return out


def verify_pool():
  thread_count = settings.POOL_MAX_WORKERS if settings.USE_WORKER_POOL else 0
  return get_pool(name='verify-%d' % thread_count, thread_count=thread_count)


def _evaluate(suite, family, name, index, residual, args, columns):
  value = residual(*args)
  if columns is not None:
    value = value.restrict_columns(columns)
  return RelationReport(name, index, value, family, suite)


def run_suite(suite, family, instances, columns=None):
  """Evaluate (identity_name, index_tuple, residual_fn, args) instances.

  ``columns`` restricts every operator residual to those basis columns.
  """
  timer = Timer('verify.%s' % suite)
  jobs = [
    Job(_evaluate, '%s %s %r' % (suite, name, index), suite, family, name, index, residual, args, columns)
    for name, index, residual, args in instances
  ]
  try:
    reports = ordered_results(verify_pool(), jobs, settings.VERIFY_TIMEOUT)
  except Exception:
    log.exception('suite %s on %r aborted' % (suite, family))
    timer.set_msg('aborted in')
    timer.stop()
    raise
  failed = sum(1 for report in reports if not report.exact_pass)
  log.info('%s [%s n=%d p=%d]: %d instances, %d failures' % (
    suite, family.tag, family.n, family.p, len(reports), failed))
  log.verify('%s [%s n=%d p=%d] evaluated in %.6fs' % (suite, family.tag, family.n, family.p, timer.elapsed()))
  return reports


def _triple(outer, inner, x, expected):
  return outer(inner, x).sub(expected)


def _pair(outer, x, y, expected):
  return outer(x, y).sub(expected)


def _difference(x, y):
  return x.sub(y)


#
# A-statistics
#

def check_A_relations(caos, suite='A-statistics'):
  """[[a_i^+,a_j^-],a_k^+] = d_jk a_i^+ + d_ij a_k^+,
  [[a_i^+,a_j^-],a_k^-] = -d_ik a_j^- - d_ij a_k^-,
  [a_i^+,a_j^+] = [a_i^-,a_j^-] = 0 for i != j."""
  module, plus, minus = caos.module, caos.plus, caos.minus
  n = caos.n
  inner = dict(((i, j), commutator(plus[i], minus[j])) for i in range(n) for j in range(n))
  instances = []
  for i in range(n):
    for j in range(n):
      for k in range(n):
        expected = linear_combination(module, [(delta(j, k), plus[i]), (delta(i, j), plus[k])])
        instances.append(('[[a+,a-],a+]', (i + 1, j + 1, k + 1), _triple, (commutator, inner[i, j], plus[k], expected)))
  for i in range(n):
    for j in range(n):
      for k in range(n):
        expected = linear_combination(module, [(-delta(i, k), minus[j]), (-delta(i, j), minus[k])])
        instances.append(('[[a+,a-],a-]', (i + 1, j + 1, k + 1), _triple, (commutator, inner[i, j], minus[k], expected)))
  for ops, name in ((plus, '[a+,a+]'), (minus, '[a-,a-]')):
    for i in range(n):
      for j in range(n):
        if i != j:
          instances.append((name, (i + 1, j + 1), _pair, (commutator, ops[i], ops[j], zero(module))))
  return run_suite(suite, module.family, instances)


def verify_A_relations(n, p):
  return check_A_relations(cao_set(build_module(A, n, p)))


#
# A-superstatistics
#

def check_ASuper_relations(caos, suite='A-superstatistics'):
  """[{a_i^+,a_j^-},a_k^+] = d_jk a_i^+ - d_ij a_k^+,
  [{a_i^+,a_j^-},a_k^-] = -d_ik a_j^- + d_ij a_k^-,
  {a_i^+,a_j^+} = {a_i^-,a_j^-} = 0 for all i, j."""
  module, plus, minus = caos.module, caos.plus, caos.minus
  n = caos.n
  inner = dict(((i, j), anticommutator(plus[i], minus[j])) for i in range(n) for j in range(n))
  instances = []
  for i in range(n):
    for j in range(n):
      for k in range(n):
        expected = linear_combination(module, [(delta(j, k), plus[i]), (-delta(i, j), plus[k])])
        instances.append(('[{a+,a-},a+]', (i + 1, j + 1, k + 1), _triple, (commutator, inner[i, j], plus[k], expected)))
  for i in range(n):
    for j in range(n):
      for k in range(n):
        expected = linear_combination(module, [(-delta(i, k), minus[j]), (delta(i, j), minus[k])])
        instances.append(('[{a+,a-},a-]', (i + 1, j + 1, k + 1), _triple, (commutator, inner[i, j], minus[k], expected)))
  for ops, name in ((plus, '{a+,a+}'), (minus, '{a-,a-}')):
    for i in range(n):
      for j in range(n):
        instances.append((name, (i + 1, j + 1), _pair, (anticommutator, ops[i], ops[j], zero(module))))
  return run_suite(suite, module.family, instances)


def verify_ASuper_relations(n, p, phase='standard'):
  return check_ASuper_relations(cao_set(build_module(ASUPER, n, p), phase))


#
# paraFermi and paraBose
#

def verify_paraFermi_relations(caos, p_expected, suite='paraFermi'):
  """Green's triple relations with plain commutators, then the Fock
  condition f_i^- f_j^+ |0> = d_ij p |0>."""
  module, plus, minus = caos.module, caos.plus, caos.minus
  n = caos.n
  inner = dict(((i, j), commutator(plus[i], minus[j])) for i in range(n) for j in range(n))
  instances = []
  for i in range(n):
    for j in range(n):
      for k in range(n):
        expected = linear_combination(module, [(2 * delta(j, k), plus[i])])
        instances.append(('[[f+,f-],f+]', (i + 1, j + 1, k + 1), _triple, (commutator, inner[i, j], plus[k], expected)))
  for i in range(n):
    for j in range(n):
      for k in range(n):
        expected = linear_combination(module, [(-2 * delta(i, k), minus[j])])
        instances.append(('[[f+,f-],f-]', (i + 1, j + 1, k + 1), _triple, (commutator, inner[i, j], minus[k], expected)))
  for ops, name in ((plus, '[[f+,f+],f+]'), (minus, '[[f-,f-],f-]')):
    for i in range(n):
      for j in range(n):
        for k in range(n):
          instances.append((name, (i + 1, j + 1, k + 1), _triple,
                            (commutator, commutator(ops[i], ops[j]), ops[k], zero(module))))
  reports = run_suite(suite, module.family, instances)
  return reports + verify_vacuum_condition(caos, p_expected, suite=suite)


def verify_paraBose_relations(caos, interior=None, suite='paraBose'):
  """Green's paraBose relations and the Bose relations, checked on the
  columns selected by ``interior`` (default: two quanta below the cutoff)."""
  module, plus, minus = caos.module, caos.plus, caos.minus
  n = caos.n
  if interior is None:
    interior = module.interior()
  inner = dict(((i, j), anticommutator(plus[i], minus[j])) for i in range(n) for j in range(n))
  one = identity(module)
  instances = []
  for i in range(n):
    for j in range(n):
      for k in range(n):
        expected = linear_combination(module, [(2 * delta(j, k), plus[i])])
        instances.append(('[{b+,b-},b+]', (i + 1, j + 1, k + 1), _triple, (commutator, inner[i, j], plus[k], expected)))
  for i in range(n):
    for j in range(n):
      for k in range(n):
        expected = linear_combination(module, [(-2 * delta(i, k), minus[j])])
        instances.append(('[{b+,b-},b-]', (i + 1, j + 1, k + 1), _triple, (commutator, inner[i, j], minus[k], expected)))
  for ops, name in ((plus, '[{b+,b+},b+]'), (minus, '[{b-,b-},b-]')):
    for i in range(n):
      for j in range(n):
        for k in range(n):
          instances.append((name, (i + 1, j + 1, k + 1), _triple,
                            (commutator, anticommutator(ops[i], ops[j]), ops[k], zero(module))))
  for i in range(n):
    for j in range(n):
      expected = linear_combination(module, [(delta(i, j), one)])
      instances.append(('[b-,b+]', (i + 1, j + 1), _pair, (commutator, minus[i], plus[j], expected)))
  for ops, name in ((plus, '[b+,b+]'), (minus, '[b-,b-]')):
    for i in range(n):
      for j in range(n):
        if i != j:
          instances.append((name, (i + 1, j + 1), _pair, (commutator, ops[i], ops[j], zero(module))))
  return run_suite(suite, module.family, instances, columns=interior)


def verify_canonical_relations(module, interior=None, suite='canonical'):
  "[q_j, p_k] = i d_jk, [q_j, q_k] = [p_j, p_k] = 0 on the interior"
  if interior is None:
    interior = module.interior()
  q, p = position_momentum(module)
  one = identity(module)
  n = module.family.n
  instances = []
  for j in range(n):
    for k in range(n):
      expected = linear_combination(module, [(I * delta(j, k), one)])
      instances.append(('[q,p]', (j + 1, k + 1), _pair, (commutator, q[j], p[k], expected)))
  for ops, name in ((q, '[q,q]'), (p, '[p,p]')):
    for j in range(n):
      for k in range(n):
        if j != k:
          instances.append((name, (j + 1, k + 1), _pair, (commutator, ops[j], ops[k], zero(module))))
  return run_suite(suite, module.family, instances, columns=interior)


#
# gl(n+1)
#

def verify_gl_relations(n, p, suite='gl(n+1)'):
  "[e_ab, e_cd] = d_cb e_ad - d_ad e_cb for all a,b,c,d, and sum(e_aa) = p"
  module = build_module(A, n, p)
  e = gl_generators(module)
  indices = range(n + 1)
  instances = []
  for a in indices:
    for b in indices:
      for c in indices:
        for d in indices:
          expected = linear_combination(module, [(delta(c, b), e[a, d]), (-delta(a, d), e[c, b])])
          instances.append(('[e_ab,e_cd]', (a, b, c, d), _pair, (commutator, e[a, b], e[c, d], expected)))
  trace = linear_combination(module, [(1, e[a, a]) for a in indices])
  instances.append(('sum e_aa = p', (), _difference, (trace, identity(module).scale(p))))
  return run_suite(suite, module.family, instances)


#
# Fock-space conditions shared by all families
#

def verify_adjointness(caos, suite='adjoint'):
  "a_i^- equals the hermitian conjugate of a_i^+, entrywise"
  instances = [
    ('a- = (a+)^dagger', (i + 1,), _difference, (caos.minus[i], caos.plus[i].adjoint()))
    for i in range(caos.n)
  ]
  return run_suite(suite, caos.module.family, instances)


def _vacuum_residual(minus_i, plus_j, expected):
  return _vector_difference(minus_i.apply(plus_j.apply(expected[0])), expected[1])


def _annihilates(op, vector):
  return op.apply(vector)


def verify_vacuum_condition(caos, p_expected, suite='vacuum'):
  "a_i^- |0> = 0 and a_i^- a_j^+ |0> = d_ij p |0>"
  module = caos.module
  vacuum = vacuum_vector(module)
  n = caos.n
  instances = [('a-|0> = 0', (i + 1,), _annihilates, (caos.minus[i], vacuum)) for i in range(n)]
  for i in range(n):
    for j in range(n):
      target = dict((k, v * (p_expected * delta(i, j))) for k, v in vacuum.items() if delta(i, j))
      instances.append(('a-a+|0> = d p|0>', (i + 1, j + 1), _vacuum_residual,
                        (caos.minus[i], caos.plus[j], (vacuum, target))))
  return run_suite(suite, module.family, instances)


def _pauli_residual(module, exponents, phase):
  return monomial_state(module, exponents, phase)


def _pauli_monomials(module, degree):
  n = module.family.n
  if degree is None and module.family.tag == FERMI:
    # per-mode exclusion: (f_i^+)^2 |0> = 0
    return [tuple(2 * delta(i, k) for k in range(n)) for i in range(n)]
  if degree is None:
    degree = module.family.p + 1
  return list(_compositions(degree, n))


def verify_pauli_principle(module, degree=None, phase='standard', suite='pauli'):
  """Every creation monomial of total degree ``degree`` (default p + 1)
  annihilates the vacuum. For Fermi the default is the per-mode exclusion,
  since products of distinct f_i^+ are nonzero."""
  instances = [
    ('monomial|0> = 0', exponents, _pauli_residual, (module, exponents, phase))
    for exponents in _pauli_monomials(module, degree)
  ]
  return run_suite(suite, module.family, instances)


def _orthonormal_residual(module, position, phase):
  return _vector_difference(normalized_basis_state(module, module.basis[position], phase), {position: ONE})


def verify_orthonormality(module, phase='standard', suite='orthonormal'):
  """Normalized creation monomials are exactly the unit basis vectors, so
  their Gram matrix is the identity."""
  instances = [
    ('normalized monomial = basis vector', state.occ, _orthonormal_residual, (module, position, phase))
    for position, state in enumerate(module.basis)
  ]
  return run_suite(suite, module.family, instances)
