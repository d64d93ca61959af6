"""Sparse state vectors: vacuum, creation monomials and their Gram matrices."""
import itertools

from fractions import Fraction
from math import factorial

from parafock.algebra.scalar import ONE, ZERO, sqrt
from parafock.errors import InvalidStateError
from parafock.fock.cao import cao_set
from parafock.fock.module import A, ASUPER, BOSE


def vacuum_vector(module):
  return {module.vacuum_index(): ONE}


def basis_vector(module, state):
  return {module.position(state): ONE}


def apply(op, vector):
  return op.apply(vector)


def inner(u, v):
  "<u|v>, antilinear in u"
  total = ZERO
  for k, x in u.items():
    y = v.get(k)
    if y is not None:
      total = total + x.conjugate() * y
  return total


def expectation(op, vector):
  return inner(vector, op.apply(vector))


def monomial_state(module, exponents, phase='standard'):
  """(a_1^+)^l_1 ... (a_n^+)^l_n |0>, the rightmost factor applied first."""
  if len(exponents) != module.family.n:
    raise InvalidStateError('expected %d exponents, got %d' % (module.family.n, len(exponents)))
  caos = cao_set(module, phase)
  vector = vacuum_vector(module)
  for i in reversed(range(module.family.n)):
    for _ in range(exponents[i]):
      vector = caos.plus[i].apply(vector)
      if not vector:
        return vector
  return vector


def normalization(module, occ):
  "Prefactor turning the creation monomial of `occ` into a unit basis vector"
  family = module.family
  p = family.p
  total = sum(occ)
  if family.tag == A:
    denominator = factorial(p)
    for l in occ:
      denominator *= factorial(l)
    return sqrt(Fraction(factorial(p - total), denominator))
  if family.tag == ASUPER:
    return sqrt(Fraction(factorial(p - total), factorial(p)))
  if family.tag == BOSE:
    denominator = 1
    for l in occ:
      denominator *= factorial(l)
    return sqrt(Fraction(1, denominator))
  return ONE


def normalized_basis_state(module, state, phase='standard'):
  occ = module.state(state).occ
  c = normalization(module, occ)
  return dict((k, c * v) for k, v in monomial_state(module, occ, phase).items())


def gram_matrix(vectors):
  return [[inner(u, v) for v in vectors] for u in vectors]


def _compositions(total, parts):
  "All tuples of `parts` non-negative integers summing to `total`"
  for cut in itertools.combinations(range(total + parts - 1), parts - 1):
    edges = (-1,) + cut + (total + parts - 1,)
    yield tuple(edges[k + 1] - edges[k] - 1 for k in range(parts))
