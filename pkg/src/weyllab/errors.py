"""Exception types shared across the package."""


class WeyllabError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpecError(WeyllabError):
    """A group, algebra or suite description is malformed."""


class SpecMismatchError(WeyllabError):
    """Operands built over different groups or algebras were combined."""


class UnsupportedAlgebraError(WeyllabError):
    """The requested operation only exists for a restricted algebra class."""


class FormatError(WeyllabError):
    """A serialized object could not be parsed."""
