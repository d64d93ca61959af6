from parafock.fock.cao import cao_set
from parafock.fock.module import FERMI, build_module
from parafock.verify.suites import verify_paraFermi_relations


def fermi_witness(n):
  """Run the paraFermi relations and the vacuum condition on n ordinary
  fermions, for which the order of statistics is 1."""
  return verify_paraFermi_relations(cao_set(build_module(FERMI, n, 1)), 1)
