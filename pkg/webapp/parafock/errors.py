class ParafockError(ValueError):
  # ValueError so the json views answer with a 400
  pass


class InvalidFamilyError(ParafockError):
  pass


class ModeIndexError(ParafockError, IndexError):
  pass


class ModuleMismatchError(ParafockError):
  pass


class InvalidStateError(ParafockError):
  pass


class PhysicalConditionError(ParafockError):
  pass


class InvalidProbeError(ParafockError):
  pass


class DimensionLimitError(ParafockError):
  pass
