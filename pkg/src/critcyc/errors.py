"""Exception hierarchy shared by every module."""


class CritCycError(Exception):
    """Base class for all library errors."""


class DisconnectedInput(CritCycError, ValueError):
    pass


class BadFirstEdge(CritCycError, ValueError):
    pass


class NotSufficientlyConnected(CritCycError):
    pass


class Acyclic(CritCycError):
    pass


class BudgetExceeded(CritCycError):
    """An exact search hit its node-expansion limit."""

    def __init__(self, budget, what="search"):
        super().__init__(f"{what} exceeded budget of {budget} expansions")
        self.budget = budget


class BipartiteInput(CritCycError, ValueError):
    pass


class InfeasiblePin(CritCycError, ValueError):
    pass


class AdjacentCutPair(CritCycError):
    pass


class NotACut(CritCycError):
    pass


class NotExactlyTwoComponents(CritCycError):
    pass


class TypeClassificationFailed(CritCycError):
    pass


class EdgeNotPresent(CritCycError, ValueError):
    pass


class OverlappingVertexSets(CritCycError, ValueError):
    pass


class DegreeTooHigh(CritCycError, ValueError):
    pass


class BadSelection(CritCycError, ValueError):
    pass


class UnsupportedOrder(CritCycError):
    pass


class NotTwoConnected(CritCycError, ValueError):
    pass


class NotThreeConnected(CritCycError, ValueError):
    pass


class NotDFSTree(CritCycError, ValueError):
    pass


class AllZeroWeights(CritCycError, ValueError):
    pass


class LevelBoundViolated(CritCycError):
    pass


class OverlappingXY(CritCycError, ValueError):
    pass


class InvalidHammock(CritCycError, ValueError):
    pass


class SingularInput(CritCycError, ValueError):
    pass


class VirtualParentEdgeOnPath(CritCycError, ValueError):
    pass


class NotCritical(CritCycError):
    pass


class GenerationFailed(CritCycError):
    pass


class InvalidWitness(CritCycError):
    """A constructed path/cycle/linkage failed structural re-validation."""
