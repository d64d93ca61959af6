from parafock.fock.module import (  # noqa
  A, ASUPER, BOSE, FERMI, FAMILY_ALIASES, FAMILY_TAGS,
  FockModule, OccupationState, StatisticsFamily, build_module,
)
from parafock.fock.operators import EVEN, ODD, Operator, diagonal, identity, zero  # noqa
from parafock.fock.cao import (  # noqa
  AS_PRINTED, PHASE_CONVENTIONS, STANDARD, CaoSet, annihilation, cao_set,
  creation, gl_generator, gl_generators, number_operator, position_momentum,
)
