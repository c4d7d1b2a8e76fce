"""Exception hierarchy for quadlabel.

Every error raised on purpose by this package derives from QuadlabelError,
so callers can catch the whole family with one except clause.  Validation
errors carry a human-readable reason in args[0]; some carry extra context
attributes documented on the class.
"""

from __future__ import annotations


class QuadlabelError(Exception):
    """Base class for all quadlabel errors."""


class FormatError(QuadlabelError):
    """A text payload does not parse under the expected format."""


class NonPlanar(QuadlabelError):
    """Rotation data is combinatorially consistent but fails the Euler check."""


class Inconsistent(QuadlabelError):
    """Rotation data is malformed: asymmetric adjacency, repeats, loops."""


class Disconnected(QuadlabelError):
    """The graph is not connected."""


class NotBipartite(QuadlabelError):
    """A 2-coloring was required (or supplied) and does not exist (or fit)."""


class SpecialsMissing(QuadlabelError):
    """An operation needs the two special vertices and none were given."""


class SpecialsNotOnOuterFace(QuadlabelError):
    """Both specials must lie on the outer face and at least one does not."""


class FlavorPreconditionFailed(QuadlabelError):
    """The graph does not meet the structural preconditions of a rule flavor."""


class InvalidLabeling(QuadlabelError):
    """An angle labeling violates the rules of the requested flavor.

    Attributes
    ----------
    rule : str
        Short name of the first violated rule ("specials", "vertex",
        "edge", "face", "outer", ...).
    where : object
        Vertex, edge, or face witness, best effort.
    """

    def __init__(self, reason: str, rule: str = "", where: object = None):
        super().__init__(reason)
        self.rule = rule
        self.where = where


class TooLarge(QuadlabelError):
    """Instance exceeds a documented size cutoff for an exact routine."""


class SpecSumMismatch(QuadlabelError):
    """An out-degree specification does not sum to the number of edges."""


class BadOrientation(QuadlabelError):
    """An orientation fails the out-degree contract of the requested kind."""


class ConflictingLabels(QuadlabelError):
    """Label propagation derived two different values for one angle."""


class InvalidInput(QuadlabelError):
    """A structured input object fails its own consistency contract."""


class NotQuadrangulation(QuadlabelError):
    """All inner and outer faces must be quadrilaterals and are not."""


class BadSpecials(QuadlabelError):
    """Specials exist but violate the placement needed by the operation."""


class NotContractible(QuadlabelError):
    """No legal contraction step exists (internal invariant breach)."""


class NotBidirected(QuadlabelError):
    """The edge passed to a split must carry two arcs and does not."""


class NoFeasibleTarget(QuadlabelError):
    """An edge split found no target corner producing a valid labeling."""


class OuterFaceCare(QuadlabelError):
    """An outer-face split could not keep both specials on one face."""


class NotDirected(QuadlabelError):
    """An operation needs an edge direction that is missing."""


class NotLaman(QuadlabelError):
    """The graph fails the generic rigidity count (2n-3 / subgraph caps)."""


class NoValidBase(QuadlabelError):
    """No base-case labeling satisfies the rules (internal breach)."""
