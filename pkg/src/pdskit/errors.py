"""Exception types shared across the toolkit."""


class PdsKitError(Exception):
    """Base class for every error raised by this package."""


class ParseError(PdsKitError):
    """Malformed text or JSON input."""


class InvalidGraph(PdsKitError):
    """Self-loop, duplicate edge, or out-of-range vertex id."""


class Disconnected(PdsKitError):
    """A connected graph was required."""


class IsStar(PdsKitError):
    """The operation is undefined on stars."""


class GraphTooSmall(PdsKitError):
    """The graph has fewer vertices than the operation needs."""


class InvalidSubsetSize(PdsKitError):
    """A vertex set violates a required size constraint."""


class NotMember(PdsKitError):
    """The queried vertex is not in the given set."""


class InstanceTooLarge(PdsKitError):
    """Exhaustive search refused: instance above the enumeration cap."""


class NoPds(PdsKitError):
    """The graph admits no proportionally dense subgraph at all."""


class KOutOfRange(PdsKitError):
    """Parameter k outside its documented range."""


class NotIndependent(PdsKitError):
    """A set claimed independent spans an edge."""


class NotAPds(PdsKitError):
    """A set claimed to be a PDS fails the proportional density check."""


class SizeBelowThreshold(PdsKitError):
    """A set is too small for the reduction step to apply."""


class UnknownFixture(PdsKitError):
    """No fixture registered under the requested name."""


class InfeasibleParameters(PdsKitError):
    """No graph exists with the requested parameters."""


class InvalidInstance(PdsKitError):
    """A cubic cycle description violates its invariants."""


class FullArcExists(PdsKitError):
    """The overfull-arc routine applies only when no full arc exists."""


class UnclassifiedChords(PdsKitError):
    """Chord tags match no recognized pattern (internal invariant breach)."""


class UnknownSuite(PdsKitError):
    """No benchmark suite registered under the requested name."""


class VerificationFailed(PdsKitError):
    """A solver produced a set that failed independent re-verification."""
