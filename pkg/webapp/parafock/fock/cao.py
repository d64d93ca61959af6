"""Creation/annihilation operators and derived generators on Fock modules."""
from fractions import Fraction
from functools import lru_cache

from django.conf import settings

from parafock.algebra.scalar import I, RadicalScalar, sqrt
from parafock.errors import InvalidFamilyError, ModeIndexError
from parafock.fock.module import A, ASUPER, BOSE, FERMI
from parafock.fock.operators import EVEN, ODD, Operator, identity


STANDARD = 'standard'
AS_PRINTED = 'as-printed'
PHASE_CONVENTIONS = (STANDARD, AS_PRINTED)

_HALF_ROOT2 = sqrt(Fraction(1, 2))


def _check_mode(module, i):
  if not 1 <= i <= module.family.n:
    raise ModeIndexError('mode %r out of range 1..%d' % (i, module.family.n))


def _check_phase(phase):
  if phase not in PHASE_CONVENTIONS:
    raise InvalidFamilyError('unknown phase convention %r' % (phase,))


def _sign(occ, i, phase):
  """Jordan-Wigner sign for mode i (0-based).

  The standard exponent counts the occupied modes before i; the as-printed
  variant also counts mode i itself.
  """
  exponent = sum(occ[:i])
  if phase == AS_PRINTED:
    exponent += occ[i]
  return -1 if exponent % 2 else 1


def _raise_amplitude(family, occ, i, phase):
  l = occ[i]
  p = family.p
  if family.tag == A:
    return sqrt((l + 1) * (p - sum(occ)))
  if family.tag == ASUPER:
    if l:
      return None
    return sqrt(p - sum(occ)) * _sign(occ, i, phase)
  if family.tag == FERMI:
    if l:
      return None
    return RadicalScalar.rational(_sign(occ, i, phase))
  # truncated bosons stop at the cutoff
  if l >= p:
    return None
  return sqrt(l + 1)


def _lower_amplitude(family, occ, i, phase):
  l = occ[i]
  p = family.p
  if not l:
    return None
  if family.tag == A:
    return sqrt(l * (p - sum(occ) + 1))
  if family.tag == ASUPER:
    return sqrt(p - sum(occ) + 1) * _sign(occ, i, phase)
  if family.tag == FERMI:
    return RadicalScalar.rational(_sign(occ, i, phase))
  return sqrt(l)


def _ladder(module, i, amplitude, step, phase, columns):
  family = module.family
  entries = {}
  for col in (range(module.dim) if columns is None else columns):
    state = module.basis[col]
    value = amplitude(family, state.occ, i - 1, phase)
    if not value:
      continue
    target = list(state.occ)
    target[i - 1] += step
    row = module.index.get(tuple(target))
    if row is None:
      # amplitude vanishes on the module boundary (Pauli principle)
      continue
    entries[(row, col)] = value
  return Operator(module, entries, ODD if family.graded else EVEN)


def creation(module, i, phase=STANDARD, columns=None):
  """a_i^+ on module (i is 1-based).

  With ``columns`` only those basis columns are filled in, which is all a
  product restricted to a low-occupation block needs.
  """
  _check_mode(module, i)
  _check_phase(phase)
  return _ladder(module, i, _raise_amplitude, 1, phase, columns)


def annihilation(module, i, phase=STANDARD, columns=None):
  _check_mode(module, i)
  _check_phase(phase)
  return _ladder(module, i, _lower_amplitude, -1, phase, columns)


class CaoSet(object):
  "The operators a_1^+..a_n^+ and a_1^-..a_n^- of one module (lists are 0-based)"
  __slots__ = ('module', 'plus', 'minus', 'phase')

  def __init__(self, module, plus, minus, phase=STANDARD):
    self.module = module
    self.plus = list(plus)
    self.minus = list(minus)
    self.phase = phase

  @property
  def n(self):
    return len(self.plus)

  def scaled(self, c):
    return CaoSet(self.module, [x.scale(c) for x in self.plus], [x.scale(c) for x in self.minus], self.phase)


def cao_set(module, phase=STANDARD):
  return _cao_set(module, phase)


@lru_cache(maxsize=settings.FOCK_CACHE_SIZE)
def _cao_set(module, phase):
  n = module.family.n
  return CaoSet(
    module,
    [creation(module, i, phase) for i in range(1, n + 1)],
    [annihilation(module, i, phase) for i in range(1, n + 1)],
    phase,
  )


def number_operator(module, i):
  "Diagonal operator counting the quanta in mode i"
  _check_mode(module, i)
  return Operator(module, dict(
    ((k, k), RadicalScalar.rational(state.occ[i - 1]))
    for k, state in enumerate(module.basis)), EVEN)


def gl_generator(module, a, b):
  """gl(n+1) generator e_ab on an A-statistics module, a, b in 0..n.

  Off-diagonal generators come from the CAOs and their commutators. The
  diagonal ones are fixed by e_ii - e_00 = [a_i^+, a_i^-] together with the
  central element sum(e_aa) = p.
  """
  family = module.family
  if family.tag != A:
    raise InvalidFamilyError('gl(n+1) generators are defined on A-statistics modules, not %s' % family.tag)
  n = family.n
  for index in (a, b):
    if not 0 <= index <= n:
      raise ModeIndexError('generator index %r out of range 0..%d' % (index, n))
  caos = cao_set(module)
  if a != 0 and b == 0:
    return caos.plus[a - 1]
  if a == 0 and b != 0:
    return caos.minus[b - 1]
  if a != b:
    x, y = caos.plus[a - 1], caos.minus[b - 1]
    return x.compose(y).sub(y.compose(x))
  differences = [
    caos.plus[i].compose(caos.minus[i]).sub(caos.minus[i].compose(caos.plus[i]))
    for i in range(n)
  ]
  e00 = identity(module).scale(family.p)
  for d in differences:
    e00 = e00.sub(d)
  e00 = e00.scale(Fraction(1, n + 1))
  if a == 0:
    return e00
  return differences[a - 1].add(e00)


def gl_generators(module):
  n = module.family.n
  return dict(((a, b), gl_generator(module, a, b)) for a in range(n + 1) for b in range(n + 1))


def position_momentum(module):
  """q_i = (b_i^+ + b_i^-)/sqrt2 and p_i = i(b_i^+ - b_i^-)/sqrt2 for bosons."""
  if module.family.tag != BOSE:
    raise InvalidFamilyError('canonical pairs are built from TruncatedBose modules, not %s' % module.family.tag)
  caos = cao_set(module)
  q = [x.add(y).scale(_HALF_ROOT2) for x, y in zip(caos.plus, caos.minus)]
  p = [x.sub(y).scale(I * _HALF_ROOT2) for x, y in zip(caos.plus, caos.minus)]
  return q, p
