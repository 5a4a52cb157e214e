"""Exception hierarchy shared by the numeric and exact modules."""


class NodeCyclesError(Exception):
    """Base class for every error raised by this package."""


class NonNodeParams(NodeCyclesError, ValueError):
    """A subsystem does not have a node (requires |gamma| > 1)."""


class DomainError(NodeCyclesError, ValueError):
    """A transition time has the wrong sign for the requested half-map."""


class OutOfDomain(NodeCyclesError, ValueError):
    """An ordinate lies outside (or within 1e-12 of the edge of) a half-map domain."""


class ConvergenceFailure(NodeCyclesError, ArithmeticError):
    """An iterative solve did not converge or hit its bracket cap."""


class NoReturn(NodeCyclesError, ArithmeticError):
    """An orbit leaving the switching line never comes back to it."""


class NotADoubleRoot(NodeCyclesError, ValueError):
    """Second-derivative formula requested away from a double root."""


class RequiresRefracting(NodeCyclesError, ValueError):
    """Operation only defined for b = 0."""


class NoSmallCycle(NodeCyclesError, ValueError):
    """No small cycle bifurcates from the origin for this sign of b."""


class ResidualTooLarge(NodeCyclesError, ArithmeticError):
    """A consistency identity failed at a computed cycle."""


class ZeroPolynomial(NodeCyclesError, ValueError):
    """Root counting requested for the zero polynomial."""


class DegreeZero(NodeCyclesError, ValueError):
    """A resultant argument has no positive degree in the eliminated variable."""


class VerificationFailure(NodeCyclesError, AssertionError):
    """A computational lemma check did not come out as claimed."""

    def __init__(self, check: str, detail: str = ""):
        super().__init__(f"{check}: {detail}" if detail else check)
        self.check = check
        self.detail = detail


class SignViolation(VerificationFailure):
    """A sampled sign claim failed; ``witness`` holds the offending point."""

    def __init__(self, check: str, witness: dict):
        super().__init__(check, f"violated at {witness}")
        self.witness = witness
