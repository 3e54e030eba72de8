"""Exception types shared across the package."""


class LoewyError(Exception):
    """Base class for all package errors."""


class InconsistentSamples(LoewyError):
    """An extra interpolation sample disagrees with the fitted polynomial."""

    def __init__(self, x, expected, got):
        super().__init__(f"sample at x={x}: fitted polynomial gives {expected}, sample says {got}")
        self.x = x
        self.expected = expected
        self.got = got


class WindowTooShort(LoewyError):
    """Too few values to certify any degree (need at least 3)."""


class NotPolynomial(LoewyError):
    """No forward-difference order within the window is constant."""


class NotPolynomialInWindow(LoewyError):
    """A fitted series fails its degree bound inside the sample window."""

    def __init__(self, series, k, detail=""):
        msg = f"series {series!r} is not polynomial of the expected degree in the window (fails at k={k})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.series = series
        self.k = k


class NotCertified(LoewyError):
    """Donaldson-Futaki data requested from an uncertified series fit."""


class InvalidBound(LoewyError):
    """Convention swap with a right-bound constant smaller than the filtration length."""


class NotAmple(LoewyError):
    """Family parameters outside the ample cone."""


class BudgetExceeded(LoewyError):
    """An enumeration would exceed the configured basis-size budget."""


class NoFixedDivisor(LoewyError):
    """Vanishing-order filtration requested for a kind without a declared fixed divisor."""


class NoClosedForm(LoewyError):
    """No closed-form reference is available for these parameters."""


class NoMonomialModel(LoewyError):
    """Operation requires a monomial section basis, which this family lacks."""


class NonNilpotent(LoewyError):
    """Operator set failed to act nilpotently (chain did not terminate)."""
