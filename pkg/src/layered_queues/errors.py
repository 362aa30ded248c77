"""Exception types raised by the library.

Every error derives from :class:`LayeredQueuesError`; the ones signalling bad
caller input also derive from :class:`ValueError`.
"""

from __future__ import annotations


class LayeredQueuesError(Exception):
    pass


class NonPlanar(LayeredQueuesError, ValueError):
    """The graph admits no plane embedding.

    ``certificate`` holds the edges of a Kuratowski subgraph when available.
    """

    def __init__(self, message: str = "graph is not planar", certificate=None):
        super().__init__(message)
        self.certificate = certificate


class TooSmall(LayeredQueuesError, ValueError):
    pass


class BadRoots(LayeredQueuesError, ValueError):
    pass


class BrokenFrame(LayeredQueuesError):
    pass


class NoTrichromaticFace(LayeredQueuesError):
    pass


class RootNotOnOuterFace(LayeredQueuesError, ValueError):
    pass


class WidthMismatch(LayeredQueuesError, ValueError):
    pass


class HostMismatch(LayeredQueuesError, ValueError):
    pass


class NotAOneQueueHost(LayeredQueuesError, ValueError):
    pass


class InvalidDecomposition(LayeredQueuesError, ValueError):
    pass


class BadWitness(LayeredQueuesError, ValueError):
    pass


class TooLarge(LayeredQueuesError, ValueError):
    pass


class BadParameters(LayeredQueuesError, ValueError):
    pass


class ParseError(LayeredQueuesError, ValueError):
    pass
