from parafock.algebra.scalar import RadicalScalar
from parafock.errors import ModuleMismatchError
from parafock.fock.operators import Operator


GRADE_NAMES = {0: 'even', 1: 'odd', None: 'mixed'}
GRADE_VALUES = dict((v, k) for k, v in GRADE_NAMES.items())


def module_to_json(module):
  data = module.family.toJSON()
  data['dim'] = module.dim
  data['basis'] = [list(state.occ) for state in module.basis]
  return data


def operator_to_json(op):
  "Sparse entries sorted by (row, col), scalars as exact tuples"
  data = module_to_json(op.module)
  data['grade'] = GRADE_NAMES[op.grade]
  data['entries'] = [
    [r, c, value.to_tuples()] for (r, c), value in sorted(op.entries.items())
  ]
  return data


def operator_from_json(data, module):
  if (data['family'], data['n'], data['p']) != module.family.key():
    raise ModuleMismatchError('operator was serialized for %s n=%s p=%s, not %r' % (
      data['family'], data['n'], data['p'], module.family))
  entries = dict(
    ((int(r), int(c)), RadicalScalar.from_tuples(value)) for r, c, value in data['entries']
  )
  return Operator(module, entries, GRADE_VALUES[data['grade']])
