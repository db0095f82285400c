class MiftahError(Exception):
    """Base class for all errors raised by this package."""


class LexiconFormatError(MiftahError, ValueError):
    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        if lineno:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DegenerateTrainingError(MiftahError, ValueError):
    """A class has too few samples to estimate its mean and covariance."""


class SingularCovarianceError(MiftahError, ValueError):
    def __init__(self, message: str, features=()):
        self.features = tuple(features)
        super().__init__(message)


class ModelFormatError(MiftahError, ValueError):
    """Unreadable, truncated, or wrong-version model file."""


class UnmatchableGoldWarning(UserWarning):
    """A gold keyphrase never occurs among its document's candidates."""
