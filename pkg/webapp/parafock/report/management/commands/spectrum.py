from parafock.report.documents import spectrum_document
from parafock.report.management.commands._base import ParafockCommand


class Command(ParafockCommand):
  help = 'Energy levels of the 3D A-superoscillator'
  physics = True

  def build(self, options):
    return spectrum_document(self.config(options))
