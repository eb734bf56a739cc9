"""Exception types raised across the package."""


class WhplanarError(Exception):
    """Base class for every error raised by this package."""


class NotAnEdge(WhplanarError, ValueError):
    pass


class LoopContraction(WhplanarError, ValueError):
    pass


class SizeLimitExceeded(WhplanarError, ValueError):
    pass


class NotCanonical(WhplanarError, ValueError):
    pass


class ZeroStep(WhplanarError, ValueError):
    pass


class EmptyQ(WhplanarError, ValueError):
    pass


class NotRegularizable(WhplanarError, ValueError):
    pass


class SynthesisFailed(WhplanarError, RuntimeError):
    pass


class WordSyntaxError(WhplanarError, ValueError):
    """Malformed defining word; ``offset`` is the byte offset of the bad token."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class IndexOutOfRange(WhplanarError, ValueError):
    pass


class EmptyWord(WhplanarError, ValueError):
    pass
