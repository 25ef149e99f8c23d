"""Exception hierarchy shared by every qdist module."""


class QdistError(Exception):
    """Base class for all workbench errors."""


class OutOfDomain(QdistError, KeyError):
    pass


class AlphabetUnsupported(QdistError, ValueError):
    pass


class EmptySabotageSet(QdistError, ValueError):
    pass


class EmptyDomain(QdistError, ValueError):
    pass


class PartialUnsupported(QdistError, ValueError):
    pass


class InconsistentAssignment(QdistError, ValueError):
    pass


class ArityOverflow(QdistError, ValueError):
    pass


# numeric kernels
class NotHermitian(QdistError, ValueError):
    pass


class ConvergenceFailure(QdistError, RuntimeError):
    pass


class NoFeasiblePoint(QdistError, ValueError):
    pass


# simulator
class DimensionMismatch(QdistError, ValueError):
    pass


class BadFactorization(QdistError, ValueError):
    pass


# constructions
class BadArity(QdistError, ValueError):
    pass


class NotBoundedError(QdistError, ValueError):
    pass


class IncompleteCoverage(QdistError, ValueError):
    pass


class QszkPromiseViolated(QdistError, ValueError):
    pass


class RegisterSpecInvalid(QdistError, ValueError):
    pass


class NotZeroError(QdistError, ValueError):
    pass


class DistinguishingPromiseViolated(QdistError, ValueError):
    pass


class BudgetExhausted(QdistError, RuntimeError):
    pass


# command line
class UnknownFunction(QdistError, KeyError):
    pass


class UnknownMeasure(QdistError, KeyError):
    pass


class UnknownExperiment(QdistError, KeyError):
    pass
