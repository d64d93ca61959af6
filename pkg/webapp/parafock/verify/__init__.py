from parafock.verify.brackets import anticommutator, bracket, commutator  # noqa
from parafock.verify.reports import RelationReport, SuiteSummary, all_pass, failures, summarize  # noqa
