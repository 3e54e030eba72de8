"""Exact linear algebra over the rationals, built on integer row reduction.

The elimination primitives live in a compiled extension (``loewy._core``) with
a pure-Python twin (``loewy._core_py``); whichever is importable is selected
here, and ``LOEWY_PURE=1`` in the environment forces the fallback. Both
backends are exercised by the test suite and compared by the benchmark script.

Vectors entering the public classes may have ``Fraction`` entries; each row is
scaled to a primitive integer vector first, which changes no span, rank,
kernel or membership answer.
"""

import os
from fractions import Fraction
from math import lcm

if os.environ.get("LOEWY_PURE"):
    from . import _core_py as _core
else:
    try:
        from . import _core  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _core  # type: ignore[no-redef]

BACKEND = _core.BACKEND

make_primitive = _core.make_primitive
first_nonzero = _core.first_nonzero
reduce_row = _core.reduce_row
insert_row = _core.insert_row


def integer_row(vec):
    """Scale a rational vector to integers (per-row lcm of denominators)."""
    mult = 1
    for x in vec:
        if isinstance(x, Fraction):
            mult = lcm(mult, x.denominator)
    if mult == 1:
        return [int(x) for x in vec]
    return [int(x * mult) for x in vec]


class IntSpan:
    """Subspace of Q^ncols held as an inter-reduced integer row basis."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def add(self, vec):
        """Add a vector; returns True when it enlarged the span."""
        row = integer_row(vec)
        return insert_row(self.rows, self.pivots, row, self.ncols) >= 0

    def add_all(self, vectors):
        for v in vectors:
            self.add(v)
        return self

    def residual(self, vec):
        return reduce_row(integer_row(vec), self.rows, self.pivots, self.ncols)

    def contains(self, vec):
        return first_nonzero(self.residual(vec), self.ncols) < 0

    def basis(self):
        """Copies of the current basis rows (primitive integer vectors)."""
        return [list(r) for r in self.rows]


class CoordSpan:
    """Span of a fixed independent basis, supporting coordinate extraction.

    Rows are augmented as [vector | coefficients | scale]; eliminations act on
    the whole row, so after reducing [v | 0 | 1] to [0 | t | s] the coordinates
    of v in the original basis are -t/s.
    """

    def __init__(self, basis_vectors, ncols):
        self.ncols = ncols
        self.nbasis = len(basis_vectors)
        self.rows = []
        self.pivots = []
        width = ncols + self.nbasis + 1
        for idx, vec in enumerate(basis_vectors):
            row = integer_row(vec) + [0] * (self.nbasis + 1)
            row[ncols + idx] = 1
            if insert_row(self.rows, self.pivots, row, ncols) < 0:
                raise ValueError("basis vectors are not linearly independent")
            assert len(row) == width

    def express(self, vec):
        """Coordinates of ``vec`` in the original basis, or None if outside."""
        row = integer_row(vec) + [0] * self.nbasis + [1]
        red = reduce_row(row, self.rows, self.pivots, self.ncols)
        if first_nonzero(red, self.ncols) >= 0:
            return None
        s = red[-1]
        return [Fraction(-red[self.ncols + j], s) for j in range(self.nbasis)]


def nullspace(rows, ncols):
    """Primitive integer basis of the right kernel of the given row list.

    Deterministic: kernel vectors are indexed by free columns in increasing
    order.
    """
    span = IntSpan(ncols)
    span.add_all(rows)
    pivot_set = set(span.pivots)
    out = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(span.rows, span.pivots):
            if row[f]:
                vec[p] = Fraction(-row[f], row[p])
        out.append(make_primitive(integer_row(vec)))
    return out


def rank(rows, ncols):
    span = IntSpan(ncols)
    span.add_all(rows)
    return span.dim
