"""Exception hierarchy. Everything raised on bad input derives from AgmatError."""


class AgmatError(Exception):
    """Base class for all agmat errors."""


class ModulusError(AgmatError, ValueError):
    """Modulus below the lower bound of the layer that received it."""


class ModulusMismatchError(AgmatError, ValueError):
    """Two values over different moduli were combined."""


class ShapeMismatchError(AgmatError, ValueError):
    """Two matrices of different shape were combined."""


class MatrixFormatError(AgmatError, ValueError):
    """Malformed matrix file."""


class BoundError(AgmatError, ValueError):
    """A size or range limit was exceeded."""


class InconsistencyError(AgmatError, AssertionError):
    """Exhaustive search and a closed-form condition disagree.

    This is never a user error; it means one of the two routes is wrong.
    """
