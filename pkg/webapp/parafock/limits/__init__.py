from parafock.limits.boson import LimitProbe, boson_limit_deviation, boson_limit_table  # noqa
from parafock.limits.fermi import fermi_witness  # noqa
