"""Exception types shared across the package."""


class AlchemyError(Exception):
    """Base class for package errors."""


class ConfigError(AlchemyError):
    """Invalid environment or search configuration."""


class InvalidActionError(AlchemyError):
    """Action index outside the per-trial bounds."""


class EpisodeCompleteError(AlchemyError):
    """Stepping or resampling past the final trial."""


class EncodingMissError(AlchemyError):
    """A value was not present in the extracted per-dimension vocabulary."""


class InconsistentHistoryError(AlchemyError):
    """Belief filter support became empty; the observed history contradicts every chemistry."""


class NotSearchedError(AlchemyError):
    """Action probabilities requested from a root with all-zero visit counts."""


class WeightFileError(AlchemyError):
    """Base class for weight-file problems."""


class BadMagicError(WeightFileError):
    """The file does not start with the AWM1 magic."""


class ChecksumError(WeightFileError):
    """The trailing CRC32 does not match the file contents (truncation or corruption)."""


class MissingTensorError(WeightFileError):
    """A tensor required by the architecture manifest is absent."""


class UnexpectedTensorError(WeightFileError):
    """The file carries a tensor name the manifest does not know."""


class TensorShapeError(WeightFileError):
    """A tensor is present but its shape contradicts the architecture."""


class DatasetFormatError(AlchemyError):
    """Malformed ATD1 trajectory file."""
