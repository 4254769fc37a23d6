"""Exception types raised across the package."""


class ZitterlabError(Exception):
    pass


class NotHermitian(ZitterlabError, ValueError):
    pass


class BadNormalization(ZitterlabError, ValueError):
    pass


class SingularH(ZitterlabError, ArithmeticError):
    pass


class GridTooCoarse(ZitterlabError, ValueError):
    pass


class TooLarge(ZitterlabError, ValueError):
    pass


class NoPeak(ZitterlabError, RuntimeError):
    """No zitterbewegung line stands out of the spectral floor.

    ``amplitude`` carries the amplitude that was measured at the strongest
    bin, so callers can still bound it.
    """

    def __init__(self, message, amplitude=None, frequency=None):
        super().__init__(message)
        self.amplitude = amplitude
        self.frequency = frequency


class TooManyModes(ZitterlabError, ValueError):
    pass


class JointTooLarge(ZitterlabError, ValueError):
    pass


class NoStructure(ZitterlabError, RuntimeError):
    pass


class NonPositiveRadius(ZitterlabError, ValueError):
    pass


class NotSState(ZitterlabError, ValueError):
    pass


class UnsupportedDimension(ZitterlabError, ValueError):
    pass


class ConfigInvalid(ZitterlabError, ValueError):
    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path


class EmptyData(ZitterlabError, ValueError):
    pass
