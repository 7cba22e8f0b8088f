"""Exception types shared across the package.

Every error derives from ``ColourDyckError`` (itself a ``ValueError``) so
callers can catch the whole family at once; the CLI prints the class name.
"""


class ColourDyckError(ValueError):
    pass


class UnknownLetter(ColourDyckError):
    pass


class UnbalancedWord(ColourDyckError):
    pass


class EmptyPath(ColourDyckError):
    pass


class InvalidBound(ColourDyckError):
    pass


class NotInFamily(ColourDyckError):
    pass


class NotAFibonacciPath(NotInFamily):
    pass


class ColourMismatch(ColourDyckError):
    pass


class CountOnlySystem(ColourDyckError):
    pass


class WrongColourSystem(ColourDyckError):
    pass


class SizeTooLarge(ColourDyckError):
    pass


class NotAnNCTree(ColourDyckError):
    pass


class NotAnNCOTree(NotAnNCTree):
    pass


class InvalidPartition(ColourDyckError):
    pass


class InvalidDissection(ColourDyckError):
    pass


class NotALittleSchroederPath(ColourDyckError):
    pass


class NotATPath(ColourDyckError):
    pass


class UnmatchedH(NotATPath):
    pass
