import itertools

from functools import lru_cache
from math import comb

from django.conf import settings

from parafock.errors import DimensionLimitError, InvalidFamilyError, InvalidStateError


A = 'A'
ASUPER = 'ASuper'
FERMI = 'Fermi'
BOSE = 'TruncatedBose'

FAMILY_TAGS = (A, ASUPER, FERMI, BOSE)

# command line / query string spellings
FAMILY_ALIASES = {
  'a': A,
  'asuper': ASUPER,
  'fermi': FERMI,
  'bose': BOSE,
}


class StatisticsFamily(object):
  """Statistics family tag plus the number of modes n and the order p.

  For TruncatedBose p is the per-mode occupation cutoff; Fermi always has
  p = 1.
  """
  __slots__ = ('tag', 'n', 'p')

  def __init__(self, tag, n, p=1):
    tag = FAMILY_ALIASES.get(tag, tag)
    if tag not in FAMILY_TAGS:
      raise InvalidFamilyError('unknown statistics family %r' % (tag,))
    if not isinstance(n, int) or n < 1:
      raise InvalidFamilyError('number of modes must be a positive integer, got %r' % (n,))
    if not isinstance(p, int) or p < 1:
      raise InvalidFamilyError('order of statistics must be a positive integer, got %r' % (p,))
    if tag == FERMI and p != 1:
      raise InvalidFamilyError('Fermi family has order of statistics 1, got %r' % (p,))
    self.tag = tag
    self.n = n
    self.p = p

  @property
  def graded(self):
    "True when single CAOs are odd elements"
    return self.tag in (ASUPER, FERMI)

  def max_occupation(self):
    if self.tag in (ASUPER, FERMI):
      return 1
    return self.p

  def admits(self, occ):
    if len(occ) != self.n:
      return False
    top = self.max_occupation()
    if any(l < 0 or l > top for l in occ):
      return False
    if self.tag == A:
      return sum(occ) <= self.p
    if self.tag == ASUPER:
      return sum(occ) <= min(self.p, self.n)
    return True

  def expected_dimension(self):
    n, p = self.n, self.p
    if self.tag == A:
      return comb(n + p, n)
    if self.tag == ASUPER:
      return sum(comb(n, q) for q in range(min(p, n) + 1))
    if self.tag == FERMI:
      return 2 ** n
    return (p + 1) ** n

  def key(self):
    return (self.tag, self.n, self.p)

  def __eq__(self, other):
    return isinstance(other, StatisticsFamily) and self.key() == other.key()

  def __ne__(self, other):
    return not self.__eq__(other)

  def __hash__(self):
    return hash(self.key())

  def __repr__(self):
    return 'StatisticsFamily(%s, n=%d, p=%d)' % self.key()

  def toJSON(self):
    return {'family': self.tag, 'n': self.n, 'p': self.p}


class OccupationState(object):
  "One Fock basis vector |p; l_1, ..., l_n)"
  __slots__ = ('occ', 'family')

  def __init__(self, occ, family):
    occ = tuple(int(l) for l in occ)
    if not family.admits(occ):
      raise InvalidStateError('occupations %s are not admitted by %r' % (','.join(map(str, occ)), family))
    self.occ = occ
    self.family = family

  @property
  def total(self):
    return sum(self.occ)

  def __eq__(self, other):
    return isinstance(other, OccupationState) and self.occ == other.occ and self.family == other.family

  def __ne__(self, other):
    return not self.__eq__(other)

  def __hash__(self):
    return hash((self.occ, self.family))

  def __repr__(self):
    return '|%d; %s)' % (self.family.p, ','.join(map(str, self.occ)))

  def toJSON(self):
    return list(self.occ)


class FockModule(object):
  "Enumerated orthonormal basis of one Fock module"
  __slots__ = ('family', 'basis', 'index', 'dim')

  def __init__(self, family, basis):
    self.family = family
    self.basis = tuple(basis)
    self.index = dict((state.occ, i) for i, state in enumerate(self.basis))
    self.dim = len(self.basis)

  def position(self, state):
    "Basis position of an OccupationState or a plain occupation tuple"
    occ = state.occ if isinstance(state, OccupationState) else tuple(state)
    try:
      return self.index[occ]
    except KeyError:
      raise InvalidStateError('occupations %s are not in %r' % (','.join(map(str, occ)), self.family))

  def state(self, occ):
    return self.basis[self.position(occ)]

  def vacuum_index(self):
    return 0

  def interior(self):
    """Basis positions at least two quanta below the cutoff in every mode.

    Only meaningful for TruncatedBose, where the truncation corrupts the
    boundary states; every position is interior for the other families.
    """
    if self.family.tag != BOSE:
      return list(range(self.dim))
    limit = self.family.p - 2
    return [i for i, state in enumerate(self.basis) if all(l <= limit for l in state.occ)]

  def below(self, total):
    "Basis positions with at most `total` quanta"
    return [i for i, state in enumerate(self.basis) if state.total <= total]

  def __eq__(self, other):
    return isinstance(other, FockModule) and self.family == other.family

  def __ne__(self, other):
    return not self.__eq__(other)

  def __hash__(self):
    return hash(self.family)

  def __repr__(self):
    return 'FockModule(%s, n=%d, p=%d, dim=%d)' % (self.family.tag, self.family.n, self.family.p, self.dim)


def build_module(family, n=None, p=None):
  """Enumerate the Fock basis of a family in lexicographic occupation order.

  Accepts a StatisticsFamily or a (tag, n, p) triple; the vacuum is always
  at position 0.
  """
  if not isinstance(family, StatisticsFamily):
    family = StatisticsFamily(family, n, 1 if p is None else p)
  expected = family.expected_dimension()
  if expected > settings.MAX_BASIS_DIMENSION:
    raise DimensionLimitError('%r has %d basis states, above MAX_BASIS_DIMENSION=%d' % (
      family, expected, settings.MAX_BASIS_DIMENSION))
  return _enumerate(family)


@lru_cache(maxsize=settings.FOCK_CACHE_SIZE)
def _enumerate(family):
  top = family.max_occupation()
  basis = [
    OccupationState(occ, family)
    for occ in itertools.product(range(top + 1), repeat=family.n)
    if family.admits(occ)
  ]
  return FockModule(family, basis)
