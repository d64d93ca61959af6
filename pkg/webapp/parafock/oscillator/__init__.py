from parafock.oscillator.config import MODES, OscillatorConfig  # noqa
from parafock.oscillator.observables import ObservableSet, build_observables  # noqa
