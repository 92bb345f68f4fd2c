"""Exception hierarchy shared by every module.

Mathematical "no" answers (:class:`Insolvable`, :class:`SearchExhausted`,
:class:`Unsupported`) are kept separate from :class:`InvariantError`, which
means the library itself is broken.
"""


class InvariantError(RuntimeError):
    """An internal identity failed. Always a bug, never an answer."""


class WordSyntaxError(SyntaxError):
    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class TrivialWordError(ValueError):
    pass


class NotInCommutatorSubgroup(ValueError):
    pass


class InternalDivisionFailure(InvariantError):
    pass


class NotDivisible(ArithmeticError):
    def __init__(self, remainder):
        super().__init__(f"nonzero remainder: {remainder}")
        self.remainder = remainder


class NotMonicInU(ValueError):
    pass


class NotInSL2(ValueError):
    pass


class NotSimilar(ValueError):
    pass


class OnCayleyCubic(ValueError):
    pass


class TransformSingular(ValueError):
    pass


class SingularSurface(ValueError):
    pass


class CentralInput(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


class FactorizationTimeout(RuntimeError):
    pass


class Insolvable(Exception):
    """No solution exists; ``certificate`` says why (checkable)."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class EmptyVariety(Insolvable):
    pass


class SearchExhausted(Exception):
    """Bounded search found nothing. Not a proof of non-existence."""

    def __init__(self, message, bounds=None):
        super().__init__(message)
        self.bounds = bounds


class Unsupported(Exception):
    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason
