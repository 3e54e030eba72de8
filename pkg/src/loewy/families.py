"""Catalog of polarised-variety families with closed-form graded data.

Seven kinds are supported, each a pair (X, L) whose section spaces carry a
canonical filtration induced by the unipotent radical of the automorphism
group. For each kind the module knows:

  * the ample cone in the integer parameters,
  * the layer dimensions of the filtration in every degree k,
  * the Loewy length (always linear in k here),
  * an explicit monomial section basis where one exists,
  * the dimensions of the vanishing-order filtration along a fixed divisor,
  * exact closed forms for the leading Hilbert/weight coefficients, the
    Donaldson-Futaki numerator and the norm, for regression testing.

Kinds and parameters:

  delpezzo8        the plane blown up at one point, L = aH - bE, ample iff
                   a > b > 0; layers dim bk+i+1 for i = 0..(a-b)k.
  blowup-n-line    the plane blown up at n >= 2 collinear points, L = aH - bE,
                   ample iff a > nb; layer i has dim k(a-nb)+(n-1)i+1 below
                   i = bk and ak-i+1 above.
  orbifold-dp      the degree-3 orbifold del Pezzo obtained by contracting the
                   -2 curve on blowup-n-line(n=3); its anticanonical sections
                   pull back isomorphically, so all data delegates to the
                   blow-up at (n,a,b) = (3,3,1).
  hirzebruch       P(O + O(n)) over P^1, L = aO(1) + bH, ample iff a,b > 0;
                   layer i = H^0(P^1, O(bk+in)).
  projbundle-p1r3  P(O + O + O(n)) over P^1 (r=2 fiber copies of O).
  projbundle       P(O^r + O(n)) over P^s, layer i has dim
                   C(bk+in+s, s) * P(ak-i, r) with P(m, r) the number of weak
                   compositions of m into r parts, C(m+r-1, r-1).
  projbundle-p2    P(O + O(1)) over P^2 at L = half the anticanonical class,
                   i.e. (r, s, n, a, b) = (1, 2, 1, 1, 1).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import BudgetExceeded, NoClosedForm, NoFixedDivisor, NoMonomialModel, NotAmple
from .profiles import GradedProfile
from .ratpoly import Polynomial

DEL_PEZZO8 = "delpezzo8"
BLOWUP_N_LINE = "blowup-n-line"
ORBIFOLD_DP = "orbifold-dp"
HIRZEBRUCH = "hirzebruch"
P1_RANK3 = "projbundle-p1r3"
PROJ_BUNDLE = "projbundle"
P2_BUNDLE = "projbundle-p2"

KINDS = (DEL_PEZZO8, BLOWUP_N_LINE, ORBIFOLD_DP, HIRZEBRUCH, P1_RANK3, PROJ_BUNDLE, P2_BUNDLE)

# Which parameters each kind accepts from the caller; fixed kinds accept none.
_FREE_PARAMS = {
    DEL_PEZZO8: ("a", "b"),
    BLOWUP_N_LINE: ("n", "a", "b"),
    ORBIFOLD_DP: (),
    HIRZEBRUCH: ("n", "a", "b"),
    P1_RANK3: ("n", "a", "b"),
    PROJ_BUNDLE: ("r", "s", "n", "a", "b"),
    P2_BUNDLE: (),
}

DEFAULT_BASIS_BUDGET = 200_000

# Fixed divisors for the vanishing-order filtration on the blow-up kinds.
DIVISOR_LINE_PLUS_EXCEPTIONAL = "line-plus-exceptional"  # total transform, class H
DIVISOR_PROPER_LINE = "proper-line"  # proper transform, class H - sum E_j
_DIVISOR_ALIASES = {
    "default": DIVISOR_LINE_PLUS_EXCEPTIONAL,
    DIVISOR_LINE_PLUS_EXCEPTIONAL: DIVISOR_LINE_PLUS_EXCEPTIONAL,
    DIVISOR_PROPER_LINE: DIVISOR_PROPER_LINE,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    a: int = 1
    b: int = 1
    n: int = None
    r: int = None
    s: int = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r} (known: {', '.join(KINDS)})")
        if self.kind == ORBIFOLD_DP:
            self._force(n=3, a=3, b=1, r=None, s=None)
        elif self.kind == P2_BUNDLE:
            self._force(r=1, s=2, n=1, a=1, b=1)
        elif self.kind == HIRZEBRUCH:
            self._require_n()
            self._force(r=1, s=1)
        elif self.kind == P1_RANK3:
            self._require_n()
            self._force(r=2, s=1)
        elif self.kind == PROJ_BUNDLE:
            self._require_n()
            if self.r is None or self.s is None:
                raise ValueError(f"{self.kind} requires parameters r and s")
            if self.r < 1 or self.s < 1:
                raise ValueError("r and s must be >= 1")
        elif self.kind == BLOWUP_N_LINE:
            self._require_n()
            if self.n < 2:
                raise ValueError("blowup-n-line requires n >= 2")
            self._force(r=None, s=None)
        else:  # del Pezzo
            self._force(n=None, r=None, s=None)
        if self.a < 1 or self.b < 1:
            raise ValueError("a and b must be >= 1")

    def _force(self, **kw):
        for key, val in kw.items():
            object.__setattr__(self, key, val)

    def _require_n(self):
        if self.n is None:
            raise ValueError(f"{self.kind} requires parameter n")
        if self.n < 1:
            raise ValueError("n must be >= 1")

    def params(self):
        """Caller-facing parameters, in canonical order."""
        return {key: getattr(self, key) for key in _FREE_PARAMS[self.kind]}

    def to_string(self):
        items = ",".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.kind}:{items}" if items else self.kind

    def __str__(self):
        return self.to_string()


def parse_spec(text):
    """Parse "kind:key=value,..." (a bare "kind" or "kind:" is allowed)."""
    text = text.strip()
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    if kind not in KINDS:
        raise ValueError(f"unknown family kind {kind!r} (known: {', '.join(KINDS)})")
    params = {}
    rest = rest.strip()
    if rest:
        for item in rest.split(","):
            item = item.strip()
            if not item:
                continue
            key, eq, val = item.partition("=")
            key = key.strip()
            if not eq or key not in ("a", "b", "n", "r", "s"):
                raise ValueError(f"bad parameter {item!r} in spec string")
            params[key] = int(val)
    allowed = set(_FREE_PARAMS[kind])
    extra = set(params) - allowed
    if extra:
        raise ValueError(f"{kind} does not take parameter(s) {sorted(extra)}")
    return FamilySpec(kind, **params)


def _as_surface_blowup(spec):
    """(n, a, b) for the two blow-up presentations (orbifold delegates)."""
    if spec.kind == ORBIFOLD_DP:
        return 3, 3, 1
    return spec.n, spec.a, spec.b


def dim_x(spec):
    """Complex dimension of the variety."""
    if spec.kind in (DEL_PEZZO8, BLOWUP_N_LINE, ORBIFOLD_DP):
        return 2
    return spec.r + spec.s


def validate_ample(spec):
    """Whether L lies in the ample cone for these parameters."""
    if spec.kind == DEL_PEZZO8:
        return spec.a > spec.b > 0
    if spec.kind == BLOWUP_N_LINE:
        return spec.b > 0 and spec.a > spec.n * spec.b
    if spec.kind == ORBIFOLD_DP:
        return True  # fixed anticanonical polarisation, ample on the orbifold
    # bundle kinds: ample iff a, b > 0
    return spec.a > 0 and spec.b > 0


def require_ample(spec):
    if not validate_ample(spec):
        raise NotAmple(f"{spec} is not ample")


def length_slope(spec):
    """Slope of the (linear) Loewy length: length(k) = slope * k."""
    if spec.kind == DEL_PEZZO8:
        return spec.a - spec.b
    if spec.kind in (BLOWUP_N_LINE, ORBIFOLD_DP):
        return _as_surface_blowup(spec)[1]
    return spec.a


def loewy_length(spec, k):
    if k < 0:
        raise ValueError("k must be >= 0")
    return length_slope(spec) * k


def graded_dim(spec, k, i):
    """dim gr_i of the degree-k sections (0 outside 0 <= i <= length)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if i < 0 or i > loewy_length(spec, k):
        return 0
    if spec.kind == DEL_PEZZO8:
        return spec.b * k + i + 1
    if spec.kind in (BLOWUP_N_LINE, ORBIFOLD_DP):
        n, a, b = _as_surface_blowup(spec)
        if i < b * k:
            return k * (a - n * b) + (n - 1) * i + 1
        return a * k - i + 1
    # bundle kinds
    return comb(spec.b * k + i * spec.n + spec.s, spec.s) * weak_composition_count(
        spec.a * k - i, spec.r
    )


def layer_dims(spec, k):
    return tuple(graded_dim(spec, k, i) for i in range(loewy_length(spec, k) + 1))


def hilbert_dim(spec, k):
    return sum(layer_dims(spec, k))


def weak_composition_count(m, r):
    """Number of ways to write m as an ordered sum of r non-negative ints."""
    if m < 0:
        return 0
    return comb(m + r - 1, r - 1)


def hilbert_polynomial_reference(spec):
    """Closed-form Hilbert polynomial where one is recorded (surfaces only)."""
    if spec.kind == DEL_PEZZO8:
        a, b = spec.a, spec.b
        return Polynomial([1, Fraction(3 * a - b, 2), Fraction(a * a - b * b, 2)])
    if spec.kind in (BLOWUP_N_LINE, ORBIFOLD_DP):
        n, a, b = _as_surface_blowup(spec)
        return Polynomial([1, Fraction(3 * a - n * b, 2), Fraction(a * a - n * b * b, 2)])
    if spec.kind == HIRZEBRUCH:
        n, a, b = spec.n, spec.a, spec.b
        return Polynomial(
            [1, Fraction(a * n, 2) + a + b, Fraction(a * a * n, 2) + a * b]
        )
    return None


def family_profile(spec, require_ample_params=True):
    """GradedProfile for the family (weight 0 on the top layer).

    With require_ample_params=False the boundary of the ample cone is allowed
    wherever the counting formulas stay meaningful (the del Pezzo a = b case,
    where the filtration collapses to a single layer).
    """
    if require_ample_params:
        require_ample(spec)
    elif spec.kind == DEL_PEZZO8:
        if spec.a < spec.b:
            raise NotAmple(f"{spec} has a < b; no boundary profile")
    else:
        require_ample(spec)
    return GradedProfile(
        n_dim=dim_x(spec),
        layer_fn=lambda k: layer_dims(spec, k),
        weight_sign=1,
        length_slope=Fraction(length_slope(spec)),
        label=spec.to_string(),
    )


# ----------------------------------------------------------------------------
# Monomial section bases
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Monomial:
    """Exponent vector over the family's coordinate alphabet."""

    exps: tuple
    names: tuple

    @property
    def degree(self):
        return sum(self.exps)

    def __str__(self):
        parts = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(self.names, self.exps)
            if e
        ]
        return "*".join(parts) if parts else "1"


def has_monomial_model(spec):
    """Blow-ups at 3 or more points impose non-monomial vanishing conditions."""
    if spec.kind in (BLOWUP_N_LINE, ORBIFOLD_DP):
        return _as_surface_blowup(spec)[0] == 2
    return True


def monomial_vars(spec):
    if spec.kind in (DEL_PEZZO8, BLOWUP_N_LINE, ORBIFOLD_DP):
        return ("x", "y", "z")
    if spec.kind == HIRZEBRUCH:
        return ("u", "v", "s", "t")
    us = tuple(f"u{j + 1}" for j in range(spec.r)) if spec.r > 1 else ("u",)
    xs = tuple(f"x{j}" for j in range(spec.s + 1))
    return us + ("v",) + xs


def _compositions(total, parts):
    """All ordered tuples of `parts` non-negative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def basis_exps(spec, k, budget=DEFAULT_BASIS_BUDGET):
    """Exponent tuples of the degree-k section basis, in weight order.

    For the plane blow-up kinds the alphabet is (x, y, z); for bundle kinds it
    is (u_1..u_r, v, x_0..x_s). Raises NoMonomialModel when the section space
    is not spanned by monomials and BudgetExceeded past the basis-size budget.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not has_monomial_model(spec):
        raise NoMonomialModel(f"{spec} has no monomial section basis")
    size = hilbert_dim(spec, k)
    if size > budget:
        raise BudgetExceeded(f"basis size {size} exceeds budget {budget}")
    out = []
    if spec.kind == DEL_PEZZO8:
        a, b = spec.a, spec.b
        # weight i = (a-b)k - deg x; iterate top layer first
        for m in range(b * k, a * k + 1):  # m = deg y + deg z
            alpha = a * k - m
            out.extend((alpha, beta, m - beta) for beta in range(m, -1, -1))
    elif spec.kind in (BLOWUP_N_LINE, ORBIFOLD_DP):
        a, b = spec.a, spec.b  # n == 2 guaranteed above
        for gamma in range(a * k + 1):  # weight = deg z
            lo = max(0, b * k - gamma)
            hi = a * k - gamma - lo
            out.extend((alpha, a * k - gamma - alpha, gamma) for alpha in range(lo, hi + 1))
    else:
        r, s, n, a, b = spec.r, spec.s, spec.n, spec.a, spec.b
        for q in range(a * k + 1):  # weight = exponent of v
            base_deg = b * k + q * n
            for us in _compositions(a * k - q, r):
                for xs in _compositions(base_deg, s + 1):
                    out.append(us + (q,) + xs)
    assert len(out) == size
    return out


def monomial_basis(spec, k, budget=DEFAULT_BASIS_BUDGET):
    names = monomial_vars(spec)
    return [Monomial(e, names) for e in basis_exps(spec, k, budget)]


def monomial_degree(spec, exps):
    """Degree k of the section the monomial lives in."""
    if spec.kind in (DEL_PEZZO8, BLOWUP_N_LINE, ORBIFOLD_DP):
        total = sum(exps)
    else:
        total = sum(exps[: spec.r + 1])  # fiber degree is a*k
    k, rem = divmod(total, spec.a)
    if rem:
        raise ValueError(f"exponents {exps} do not sit in an integral degree")
    return k


def monomial_weight(spec, exps):
    """Loewy weight of a basis monomial (top layer = 0)."""
    if spec.kind == DEL_PEZZO8:
        k = monomial_degree(spec, exps)
        return (spec.a - spec.b) * k - exps[0]
    if spec.kind in (BLOWUP_N_LINE, ORBIFOLD_DP):
        return exps[2]
    return exps[spec.r]


def mul_exps(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


# ----------------------------------------------------------------------------
# Vanishing-order filtration
# ----------------------------------------------------------------------------

def _p1_forms_dim(d, t, npts):
    """dim of degree-d binary forms vanishing to order >= t at npts points."""
    if d < 0:
        return 0
    t = max(t, 0)
    return max(0, d - npts * t + 1)


def vanishing_dim(spec, k, i, divisor=None):
    """dim H^0(X, kL - iE) for the declared fixed divisor E.

    The blow-up-at-n-points kinds have no canonical choice pinned down and
    take it explicitly: "line-plus-exceptional" (the total transform of the
    common line; alias "default") or "proper-line" (its proper transform).
    Other kinds must not pass one (del Pezzo: the exceptional curve;
    Hirzebruch: the -n curve; bundles: the divisor of the rank-r quotient).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if i < 0:
        raise ValueError("i must be >= 0")
    if spec.kind in (BLOWUP_N_LINE, ORBIFOLD_DP):
        if divisor is None:
            raise NoFixedDivisor(
                f"{spec.kind} requires an explicit divisor "
                f"({DIVISOR_LINE_PLUS_EXCEPTIONAL!r} or {DIVISOR_PROPER_LINE!r})"
            )
        try:
            divisor = _DIVISOR_ALIASES[divisor]
        except KeyError:
            raise NoFixedDivisor(f"unknown divisor {divisor!r}") from None
        n, a, b = _as_surface_blowup(spec)
        if divisor == DIVISOR_PROPER_LINE:
            # kL - i(H - sum E_j): multiples of z^i with orders relaxed by i,
            # which is exactly the tail of the layer decomposition.
            return sum(graded_dim(spec, k, j) for j in range(i, a * k + 1))
        # total transform, class H: f = z^i g with g of degree ak-i still
        # vanishing to order >= bk - (z-degree of its own z-layers)
        return sum(
            _p1_forms_dim(a * k - i - m, b * k - m, n) for m in range(max(a * k - i + 1, 0))
        )
    if divisor is not None:
        raise NoFixedDivisor(f"{spec.kind} has a declared fixed divisor; do not pass one")
    if spec.kind == DEL_PEZZO8:
        a, b = spec.a, spec.b
        if i > (a - b) * k:
            return 0
        return sum(m + 1 for m in range(b * k + i, a * k + 1))
    # bundle kinds: vanishing order along E is the exponent of v
    return sum(graded_dim(spec, k, j) for j in range(i, spec.a * k + 1))


# ----------------------------------------------------------------------------
# Closed-form regression references
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedForm:
    a0: Fraction
    a1: Fraction
    b0: Fraction
    b1: Fraction
    df_num: Fraction
    norm: Fraction


def closed_form_reference(spec):
    """Exact reference values (a0, a1, b0, b1, df_num, norm).

    The df numerators are the recorded closed forms for each family; the norms
    are the moment-definition values (norm = (d0 a0 - b0^2)/a0), which for the
    two plane blow-up presentations were re-derived from d0 = b(a-b)^3/3 +
    (a-b)^4/4 resp. d0 = (a^4 - n b^4)/12 because the circulating expressions
    for them are inconsistent with the moment definition.
    """
    require_ample(spec)
    F = Fraction
    if spec.kind == DEL_PEZZO8:
        a, b = spec.a, spec.b
        return ClosedForm(
            a0=F(a * a - b * b, 2),
            a1=F(3 * a - b, 2),
            b0=F(a ** 3, 3) - F(a * a * b, 2) + F(b ** 3, 6),
            b1=F(a * a) - F(3 * a * b, 2) + F(b * b, 2),
            df_num=-F(b * (a - b) ** 3, 6),
            norm=F((a - b) ** 3 * (a * a + 4 * a * b + b * b), 36 * (a + b)),
        )
    if spec.kind in (BLOWUP_N_LINE, ORBIFOLD_DP):
        n, a, b = _as_surface_blowup(spec)
        return ClosedForm(
            a0=F(a * a - n * b * b, 2),
            a1=F(3 * a - n * b, 2),
            b0=F(a ** 3 - n * b ** 3, 6),
            b1=F(a * a, 2),
            df_num=F(-n * a ** 3 * b + 3 * n * a * a * b * b - 3 * n * a * b ** 3 + n * n * b ** 4, 12),
            norm=(3 * F(a ** 4 - n * b ** 4) - F(2 * (a ** 3 - n * b ** 3) ** 2, a * a - n * b * b)) / 36,
        )
    if spec.kind == HIRZEBRUCH:
        n, a, b = spec.n, spec.a, spec.b
        return ClosedForm(
            a0=F(a * a * n, 2) + a * b,
            a1=F(a * n, 2) + a + b,
            b0=F(a ** 3 * n, 3) + F(a * a * b, 2),
            b1=F(a * a * n, 2) + F(a * a, 2) + F(a * b, 2),
            df_num=F(-(a ** 4) * n * n + a ** 4 * n, 12) - F(a ** 3 * b * n, 6),
            norm=F(a ** 3 * (a * a * n * n + 6 * a * b * n + 6 * b * b), 36 * (a * n + 2 * b)),
        )
    if spec.kind == P1_RANK3:
        return _rank3_closed_form(spec.n, spec.a, spec.b)
    if spec.kind == P2_BUNDLE:
        return ClosedForm(
            a0=F(7, 6), a1=F(7, 2), b0=F(17, 24), b1=F(9, 4),
            df_num=F(-7, 48), norm=F(97, 1120),
        )
    # general bundle: only the specialised cases have recorded closed forms
    if spec.r == 2 and spec.s == 1:
        return _rank3_closed_form(spec.n, spec.a, spec.b)
    if spec.r == 1 and spec.s == 1:
        return closed_form_reference(FamilySpec(HIRZEBRUCH, n=spec.n, a=spec.a, b=spec.b))
    if (spec.r, spec.s, spec.n, spec.a, spec.b) == (1, 2, 1, 1, 1):
        return closed_form_reference(FamilySpec(P2_BUNDLE))
    raise NoClosedForm(f"no closed-form reference for {spec}")


def _rank3_closed_form(n, a, b):
    F = Fraction
    return ClosedForm(
        a0=F(a ** 3 * n, 6) + F(a * a * b, 2),
        a1=F(a * a * n, 2) + F(a * a, 2) + F(3 * a * b, 2),
        b0=F(a ** 4 * n, 12) + F(a ** 3 * b, 6),
        b1=F(a ** 3 * n, 3) + F(a ** 3, 6) + F(a * a * b, 2),
        df_num=F(-(a ** 6) * n * n + a ** 6 * n, 72) - F(a ** 5 * b * n, 24),
        # moment-definition norm from d0 = a^5 n/20 + a^4 b/12
        norm=F(a ** 4 * (a * a * n * n + 8 * a * b * n + 10 * b * b), 120 * (a * n + 3 * b)),
    )
