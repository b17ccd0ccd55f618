from __future__ import annotations


class AlgebraError(ValueError):
    """Base class for invalid operations on Cuntz-algebra elements."""


class GeneratorCountMismatch(AlgebraError):
    """Two operands were built over different numbers of generators."""


class LevelTooSmall(AlgebraError):
    """A requested expansion level is below the annihilator length of some term."""


class NotGaugeInvariant(AlgebraError):
    """An operation that needs a degree-0 element received something else."""


class UnsupportedGeneratorCount(AlgebraError):
    """The operation is only implemented for a specific number of generators."""


class ResourceBoundError(AlgebraError):
    """A size parameter exceeds the configured resource bound."""
