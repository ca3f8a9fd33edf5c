"""Exception types shared across the package."""

from __future__ import annotations


class ModuliError(Exception):
    """Base class for all errors raised by this package."""


class ZeroCoefficient(ModuliError):
    def __init__(self, index: int):
        super().__init__(f"coefficient of x^{index} vanishes; sign pattern undefined")
        self.index = index


class BoundaryRoot(ModuliError):
    pass


class NotHyperbolic(ModuliError):
    pass


class RootAtZero(ModuliError):
    pass


class ModuliTie(ModuliError):
    pass


class NonGeneric(ModuliError):
    """A multiple root makes the order of moduli undefined."""


class WrongChangeCount(ModuliError):
    pass


class EpsilonExhausted(ModuliError):
    pass


class OrderCollapsed(ModuliError):
    pass


class UnknownCertificate(ModuliError, KeyError):
    pass


class UnknownIdentity(ModuliError, KeyError):
    pass


class SoundnessViolation(ModuliError):
    """A verified witness contradicts a proved non-realizability rule."""


class ParseError(ModuliError, ValueError):
    pass
