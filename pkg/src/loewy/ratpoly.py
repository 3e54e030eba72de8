"""Exact rational polynomials: evaluation, interpolation, degree detection.

Rationals are ``fractions.Fraction`` throughout (always in lowest terms,
positive denominator, arbitrary precision); nothing in this module ever
produces a float. Serialisation uses the "p/q" form ("p" when q = 1), which is
exactly ``str(Fraction)``.
"""

from fractions import Fraction

from .errors import InconsistentSamples, NotPolynomial, WindowTooShort

Rational = Fraction


def format_rational(x):
    """Render p/q (or just p for integers)."""
    return str(Fraction(x))


def parse_rational(text):
    """Inverse of format_rational; accepts "p" and "p/q"."""
    return Fraction(text.strip())


class Polynomial:
    """Univariate polynomial with Fraction coefficients, index = power.

    The coefficient tuple never has a trailing zero; the zero polynomial has
    an empty tuple and degree -1. Evaluation at integers is exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def monomial(cls, coeff, power):
        coeff = Fraction(coeff)
        if coeff == 0:
            return cls(())
        return cls((0,) * power + (coeff,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, power):
        """Coefficient of k^power (0 beyond the degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __call__(self, k):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def evaluate(self, k):
        return self(k)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coeff(i) + other.coeff(i) for i in range(n)]
        )

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coeff(i) - other.coeff(i) for i in range(n)]
        )

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial(())
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            if power == 0:
                term = format_rational(c)
            else:
                var = "k" if power == 1 else f"k^{power}"
                term = var if c == 1 else f"-{var}" if c == -1 else f"{format_rational(c)}*{var}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def interpolate(samples, degree_bound):
    """Unique polynomial of degree <= degree_bound through the samples.

    The first degree_bound+1 samples determine the polynomial (Newton divided
    differences, exact over the rationals); every remaining sample is checked
    against it and a disagreement raises InconsistentSamples — the signal that
    the sequence is not polynomial of this degree in the window.
    """
    samples = [(x, Fraction(y)) for x, y in samples]
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    if len(samples) < degree_bound + 1:
        raise ValueError(f"need at least {degree_bound + 1} samples for degree bound {degree_bound}")
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("sample abscissae must be pairwise distinct")

    head = samples[: degree_bound + 1]
    # Divided-difference table, built column by column.
    coeffs = [y for _, y in head]
    for level in range(1, len(head)):
        for j in range(len(head) - 1, level - 1, -1):
            coeffs[j] = (coeffs[j] - coeffs[j - 1]) / (head[j][0] - head[j - level][0])
    # Expand the Newton form into monomial coefficients.
    poly = Polynomial(())
    basis = Polynomial((1,))
    for j, c in enumerate(coeffs):
        poly = poly + c * basis
        basis = basis * Polynomial((-Fraction(head[j][0]), Fraction(1)))

    for x, y in samples[degree_bound + 1 :]:
        got = poly(x)
        if got != y:
            raise InconsistentSamples(x, got, y)
    return poly


def finite_difference_degree(values):
    """Smallest d whose d-th forward differences are constant in the window.

    A window of N values can certify degrees up to N-2 only; the certificate
    is window-relative (callers over-determine by choosing long windows).
    Raises WindowTooShort for windows under 3 values and NotPolynomial when no
    checkable difference order is constant.
    """
    work = [Fraction(v) for v in values]
    if len(work) < 3:
        raise WindowTooShort(f"need at least 3 values, got {len(work)}")
    d = 0
    while len(work) >= 2:
        if all(v == work[0] for v in work):
            return d
        work = [b - a for a, b in zip(work, work[1:])]
        d += 1
    raise NotPolynomial(f"no difference order up to {d - 1} is constant in the window")
