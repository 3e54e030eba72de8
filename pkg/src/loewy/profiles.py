"""Graded dimension profiles and their Donaldson-Futaki data.

A profile records, for each degree k, the dimensions of the graded layers of
a filtration of the degree-k sections. Layer index 0 is the top layer (the one
a decreasing filtration quotients off first), carrying weight 0; this is the
convention every catalog family uses. ``weight_sign`` flips the sign of the
weights, which is how re-indexed (increasing-convention) profiles keep their
Donaldson-Futaki invariant: after ``swap_convention`` the weight series obeys
w' = w - C*k*h, and both DF and norm are preserved exactly.

From the fitted series
    h(k) = a0 k^n + a1 k^(n-1) + ...
    w(k) = b0 k^(n+1) + b1 k^n + ...
    d(k) = d0 k^(n+2) + ...
the invariants are DF = (b0 a1 - b1 a0)/a0 and norm = (d0 a0 - b0^2)/a0.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidBound, NotCertified, NotPolynomialInWindow
from .ratpoly import InconsistentSamples, Polynomial, interpolate


class GradedProfile:
    """Map k -> (dim gr_0, dim gr_1, ...) with exact integer entries.

    ``layer_fn(k)`` returns the layer dimensions for degree k >= 1 (trailing
    zeros are stripped; internal zeros are kept). Results are memoised, so
    profiles behave as immutable total functions.
    """

    def __init__(self, n_dim, layer_fn, weight_sign=1, length_slope=None, label=""):
        if weight_sign not in (1, -1):
            raise ValueError("weight_sign must be +1 or -1")
        self.n_dim = n_dim
        self.weight_sign = weight_sign
        self.length_slope = None if length_slope is None else Fraction(length_slope)
        self.label = label
        self._layer_fn = layer_fn
        self._cache = {}

    @classmethod
    def from_table(cls, table, n_dim, **kw):
        """Profile backed by an explicit {k: layer dims} table."""
        data = {k: tuple(v) for k, v in table.items()}

        def layer_fn(k):
            try:
                return data[k]
            except KeyError:
                raise KeyError(f"profile table has no entry for k={k}") from None

        return cls(n_dim, layer_fn, **kw)

    def dims(self, k):
        if k not in self._cache:
            if k < 1:
                raise ValueError("profiles are defined for k >= 1")
            raw = list(self._layer_fn(k))
            while raw and raw[-1] == 0:
                raw.pop()
            if not raw:
                raw = [0]
            if any(d < 0 for d in raw):
                raise ValueError(f"negative layer dimension at k={k}")
            self._cache[k] = tuple(raw)
        return self._cache[k]

    def layer_dim(self, k, i):
        dims = self.dims(k)
        return dims[i] if 0 <= i < len(dims) else 0

    def length(self, k):
        """Largest i with a nonzero layer (the Loewy length in degree k)."""
        return len(self.dims(k)) - 1

    def shift_weights(self, delta=1):
        """Same layers re-indexed by i -> i + delta (the literal-definition
        shift, exposed for experimentation; changes b1 by delta*a0)."""
        if delta < 0:
            raise ValueError("delta must be >= 0")
        return GradedProfile(
            self.n_dim,
            lambda k: (0,) * delta + self.dims(k),
            weight_sign=self.weight_sign,
            length_slope=None,
            label=f"{self.label}+shift{delta}" if self.label else f"shift{delta}",
        )


def series_values(profile, k):
    """Exact (h, w, d) in degree k: the 0th, 1st and 2nd weight moments."""
    dims = profile.dims(k)
    h = sum(dims)
    w = sum(i * d for i, d in enumerate(dims))
    d2 = sum(i * i * d for i, d in enumerate(dims))
    return h, profile.weight_sign * w, d2


@dataclass(frozen=True)
class SeriesFit:
    n_dim: int
    window: tuple
    h: Polynomial
    w: Polynomial
    d: Polynomial
    a0: Fraction
    a1: Fraction
    b0: Fraction
    b1: Fraction
    d0: Fraction
    polynomial_certified: bool
    failure: tuple = None  # (series name, first bad k) when not certified


def default_window(n_dim):
    """k = 1 .. n+6: over-determines each degree bound by >= 3 samples."""
    return range(1, n_dim + 7)


def fit_series(profile, window=None, strict=False):
    """Fit h, w, d on the window with degree bounds n, n+1, n+2.

    certified means every window sample of every series is consistent with
    its fitted polynomial. With strict=True an inconsistency raises
    NotPolynomialInWindow instead of returning an uncertified fit.
    """
    n = profile.n_dim
    window = list(default_window(n) if window is None else window)
    if len(window) < n + 4:
        raise ValueError(f"window must have at least n+4 = {n + 4} samples, got {len(window)}")
    values = {k: series_values(profile, k) for k in window}

    polys = {}
    certified = True
    failure = None
    for pos, (name, bound) in enumerate((("h", n), ("w", n + 1), ("d", n + 2))):
        samples = [(k, values[k][pos]) for k in window]
        try:
            polys[name] = interpolate(samples, bound)
        except InconsistentSamples as exc:
            if strict:
                raise NotPolynomialInWindow(name, exc.x, str(exc)) from exc
            certified = False
            if failure is None:
                failure = (name, exc.x)
            polys[name] = interpolate(samples[: bound + 1], bound)
    return SeriesFit(
        n_dim=n,
        window=tuple(window),
        h=polys["h"],
        w=polys["w"],
        d=polys["d"],
        a0=polys["h"].coeff(n),
        a1=polys["h"].coeff(n - 1),
        b0=polys["w"].coeff(n + 1),
        b1=polys["w"].coeff(n),
        d0=polys["d"].coeff(n + 2),
        polynomial_certified=certified,
        failure=failure,
    )


@dataclass(frozen=True)
class DFReport:
    df_num: Fraction
    df: Fraction
    norm: Fraction
    length_slope: Fraction


def df_and_norm(fit, length_slope):
    """Donaldson-Futaki numerator/invariant and norm from a certified fit."""
    if not fit.polynomial_certified:
        raise NotCertified(f"series fit is not certified (first failure: {fit.failure})")
    if fit.a0 <= 0:
        raise ValueError("leading Hilbert coefficient must be positive")
    df_num = fit.b0 * fit.a1 - fit.b1 * fit.a0
    return DFReport(
        df_num=df_num,
        df=df_num / fit.a0,
        norm=(fit.d0 * fit.a0 - fit.b0 ** 2) / fit.a0,
        length_slope=None if length_slope is None else Fraction(length_slope),
    )


def swap_convention(profile, C):
    """Re-index layers by i -> C*k - i, flipping the weight orientation.

    C must be a valid linear right bound (length(k) <= C*k wherever the result
    is evaluated; InvalidBound otherwise). Applying the swap twice with the
    same C returns the original profile values, and DF and norm are invariant.
    """
    C = int(C)
    if C < 0:
        raise InvalidBound("right-bound constant must be >= 0")
    if profile.length_slope is not None and Fraction(C) < profile.length_slope:
        raise InvalidBound(
            f"C={C} is below the profile's length slope {profile.length_slope}"
        )

    def layer_fn(k):
        old = profile.dims(k)
        top = C * k
        if len(old) - 1 > top:
            raise InvalidBound(
                f"C={C} is not a right bound at k={k}: length {len(old) - 1} > {top}"
            )
        return tuple(old[top - i] if top - i < len(old) else 0 for i in range(top + 1))

    return GradedProfile(
        profile.n_dim,
        layer_fn,
        weight_sign=-profile.weight_sign,
        length_slope=Fraction(C),
        label=f"{profile.label}|swap(C={C})" if profile.label else f"swap(C={C})",
    )


def length_slope_of(profile, window=None):
    """The constant length(k)/k over the window, or None if not linear."""
    window = list(default_window(profile.n_dim) if window is None else window)
    slopes = {Fraction(profile.length(k), k) for k in window}
    if len(slopes) == 1:
        return slopes.pop()
    return None
