from parafock.algebra.scalar import I, ONE, ZERO, RadicalScalar, sqrt  # noqa
