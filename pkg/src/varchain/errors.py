"""Exception hierarchy shared by all varchain modules."""


class VarChainError(Exception):
    """Base class for every error raised by varchain."""


# panel layer
class PanelError(VarChainError, ValueError):
    pass


class MissingValue(PanelError):
    def __init__(self, row, col):
        self.row = row
        self.col = col
        super().__init__(f"missing value at data row {row}, column {col!r}")


class NonNumericCell(PanelError):
    def __init__(self, row, col, text):
        self.row = row
        self.col = col
        super().__init__(f"non-numeric cell {text!r} at data row {row}, column {col!r}")


class DuplicateYear(PanelError):
    pass


class YearGap(PanelError):
    pass


class UnknownLabel(PanelError, KeyError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"unknown label {label!r}")

    def __str__(self):
        return self.args[0]


class DivisionByZero(PanelError):
    pass


class NonPositiveLog(PanelError):
    pass


# estimation
class EstimationError(VarChainError, ValueError):
    pass


class InsufficientObservations(EstimationError):
    pass


class SingularDesign(EstimationError):
    pass


class SingularRegression(SingularDesign):
    pass


class SingularAuxiliaryDesign(SingularDesign):
    pass


class SingularMomentMatrix(EstimationError):
    pass


class ZeroLag(EstimationError):
    pass


# unit roots
class ConstantSeries(VarChainError, ValueError):
    pass


class TooShort(VarChainError, ValueError):
    pass


class MixedSpecs(VarChainError, ValueError):
    pass


class ZeroPValue(VarChainError, ValueError):
    pass


# cointegration / structural
class UnsupportedDimension(VarChainError, ValueError):
    pass


class NotPositiveDefinite(VarChainError, ValueError):
    pass


class BadOrdering(VarChainError, ValueError):
    pass


class TooFewReplications(VarChainError, ValueError):
    pass


# pipeline
class ConfigError(VarChainError, ValueError):
    pass


class UnsupportedFormat(VarChainError, ValueError):
    pass


class EmptyResult(UnsupportedFormat):
    pass


class StageError(VarChainError):
    """A pipeline stage failed; ``stage`` names it and ``__cause__`` holds the error."""

    def __init__(self, stage, error, report=None):
        self.stage = stage
        self.error = error
        self.report = report
        super().__init__(f"[{stage}] {type(error).__name__}: {error}")
