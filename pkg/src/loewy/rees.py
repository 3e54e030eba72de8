"""Finitely generated truncations of the filtration, on monomial families.

The degree-r truncation is generated by the filtration's pieces in degrees
p <= r. On a monomial family a degree-k section monomial m belongs to the
truncated piece of weight i exactly when m factors into basis monomials of
degrees <= r whose weights sum to at least i; the best achievable total is
found by a memoised max-plus recursion over factorisations. For every catalog
family the weight functional is additive under multiplication, so the
recursion short-circuits: the optimum is the monomial's own weight whenever
any factorisation exists at all (and the truncation is then exact).
"""

from fractions import Fraction

from . import families
from .errors import NoMonomialModel
from .profiles import GradedProfile, df_and_norm, fit_series


class _FactorCache:
    """Max achievable generator-weight sum for factorisations of a monomial
    into basis monomials of degree <= r (None when no factorisation exists)."""

    def __init__(self, spec, r, budget):
        self.spec = spec
        self.r = r
        self.budget = budget
        self.generators = {}  # degree p -> tuple of (exps, weight)
        for p in range(1, r + 1):
            self.generators[p] = tuple(
                (e, families.monomial_weight(spec, e)) for e in families.basis_exps(spec, p, budget)
            )
        self.memo = {}

    def best_weight(self, exps, degree):
        if degree == 0:
            return 0
        key = exps
        if key in self.memo:
            return self.memo[key]
        self.memo[key] = None  # guards against cycles; overwritten below
        wt_cap = families.monomial_weight(self.spec, exps) if degree <= 0 else None
        best = None
        for p in range(min(self.r, degree), 0, -1):
            for gen, gw in self.generators[p]:
                if all(g <= e for g, e in zip(gen, exps)):
                    rest = tuple(e - g for e, g in zip(exps, gen))
                    tail = self.best_weight(rest, degree - p)
                    if tail is not None:
                        cand = gw + tail
                        if best is None or cand > best:
                            best = cand
                        # additive weights cannot beat the monomial's own
                        if best == families.monomial_weight(self.spec, exps):
                            self.memo[key] = best
                            return best
            if best is not None and p == degree:
                break
        self.memo[key] = best
        return best


def truncated_filtration(spec, r, k, budget=families.DEFAULT_BASIS_BUDGET, _cache=None):
    """dim of the weight->=i piece of the degree-r truncation in degree k.

    Returns {i: dim} for i = 0..Loewy length. Requires a monomial section
    model (NoMonomialModel otherwise).
    """
    if not families.has_monomial_model(spec):
        raise NoMonomialModel(f"{spec} has no monomial model; cannot truncate")
    if r < 1:
        raise ValueError("truncation degree r must be >= 1")
    cache = _cache if _cache is not None else _FactorCache(spec, r, budget)
    length = families.loewy_length(spec, k)
    dims = {i: 0 for i in range(length + 1)}
    for exps in families.basis_exps(spec, k, budget):
        w = cache.best_weight(exps, k)
        if w is None:
            continue  # not generated in degrees <= r: outside every piece
        for i in range(min(w, length) + 1):
            dims[i] += 1
    return dims


def loewy_filtration_dims(spec, k):
    """dim F_i of the untruncated filtration, i = 0..length."""
    layers = families.layer_dims(spec, k)
    dims = {}
    total = sum(layers)
    for i, d in enumerate(layers):
        dims[i] = total
        total -= d
    return dims


def truncated_profile(spec, r, budget=families.DEFAULT_BASIS_BUDGET):
    """GradedProfile of the degree-r truncation (layers = F_i - F_{i+1})."""
    cache = _FactorCache(spec, r, budget)

    def layer_fn(k):
        dims = truncated_filtration(spec, r, k, budget, _cache=cache)
        length = max(dims)
        return tuple(
            dims[i] - (dims[i + 1] if i + 1 <= length else 0) for i in range(length + 1)
        )

    return GradedProfile(
        n_dim=families.dim_x(spec),
        layer_fn=layer_fn,
        weight_sign=1,
        length_slope=None,
        label=f"{spec}|trunc(r={r})",
    )


def stabilization_check(spec, r, window, budget=families.DEFAULT_BASIS_BUDGET):
    """True iff the truncation's weight series equals the full one on the window."""
    cache = _FactorCache(spec, r, budget)
    for k in window:
        trunc = truncated_filtration(spec, r, k, budget, _cache=cache)
        full = loewy_filtration_dims(spec, k)
        w_trunc = sum(trunc.values()) - trunc[0]  # sum_i i*(layer dims) telescoped
        w_full = sum(full.values()) - full[0]
        if sum(trunc.values()) != sum(full.values()) or w_trunc != w_full:
            return False
    return True


def first_stabilizing_r(spec, window=None, r_budget=6, budget=families.DEFAULT_BASIS_BUDGET):
    """Smallest r <= r_budget whose truncation stabilises the weight series
    on the window (and hence the fitted DF); None if none does."""
    if window is None:
        window = range(1, families.dim_x(spec) + 7)
    window = list(window)
    for r in range(1, r_budget + 1):
        if stabilization_check(spec, r, window, budget):
            return r
    return None


def truncated_df(spec, r, window=None, budget=families.DEFAULT_BASIS_BUDGET):
    """DFReport of the degree-r truncation, fitted on the window."""
    prof = truncated_profile(spec, r, budget)
    fit = fit_series(prof, window)
    slope = Fraction(families.length_slope(spec))
    return df_and_norm(fit, slope)
