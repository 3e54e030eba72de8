"""Brute-force filtration oracle from explicit nilpotent operators.

Acting operators are sparse exact matrices over a section basis. The radical
chain is computed as iterated image spans F_{i+1} = span{N v : N in ops, v in
F_i}, the socle chain as iterated preimages of common kernels; both use exact
integer row reduction, so the tolerance is exactly zero. Layer dimensions from
these chains are the independent check on every closed-form layer formula.

Derivation conventions per family (images match the first filtration layer):

  delpezzo8        y d/dx and z d/dx (lowering the degree of x),
  blowup-n-line    z d/dx and z d/dy (raising the degree of z),
  bundle kinds     one operator per fiber copy j and degree-n base monomial m,
                   sending u_j to m*v (raising the exponent of v).

For blow-ups at n >= 3 points the section space is cut out of the ambient
degree-ak monomial space by Taylor-coefficient conditions at the points
[1:0:0], [0:1:0], [1:j:0]; the operators are then re-expressed as square
matrices in the computed basis.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

from . import families
from .errors import BudgetExceeded, NonNilpotent
from .linalg import CoordSpan, IntSpan, nullspace


@dataclass(frozen=True)
class SparseOperator:
    """Square matrix as integer (row, col, coeff) triples."""

    dim: int
    triples: tuple

    @classmethod
    def from_entries(cls, dim, entries):
        """Build from (row, col, coeff) with rational coeffs; the matrix is
        rescaled to integers (spans and kernels are scale-invariant)."""
        entries = [(r, c, Fraction(v)) for r, c, v in entries if v]
        mult = 1
        for _, _, v in entries:
            mult = lcm(mult, v.denominator)
        return cls(dim, tuple((r, c, int(v * mult)) for r, c, v in entries))

    @classmethod
    def from_dense(cls, matrix):
        dim = len(matrix)
        entries = [
            (r, c, v) for r, row in enumerate(matrix) for c, v in enumerate(row) if v
        ]
        return cls.from_entries(dim, entries)

    def apply(self, vec):
        out = [0] * self.dim
        for r, c, v in self.triples:
            x = vec[c]
            if x:
                out[r] += v * x
        return out

    def rows(self):
        """Dense integer rows (for kernel conditions)."""
        out = [[0] * self.dim for _ in range(self.dim)]
        for r, c, v in self.triples:
            out[r][c] = v
        return out

    def transpose_negated(self):
        """The operator induced on the dual module."""
        return SparseOperator(self.dim, tuple((c, r, -v) for r, c, v in self.triples))


@dataclass(frozen=True)
class OperatorSet:
    dimension: int
    operators: tuple
    label: str = ""

    def dual(self):
        return OperatorSet(
            self.dimension,
            tuple(op.transpose_negated() for op in self.operators),
            label=f"{self.label}^" if self.label else "dual",
        )


@dataclass(frozen=True)
class SubspaceChain:
    """Dimensions of a radical chain (decreasing, ending in 0) or a socle
    chain (increasing, ending at the full dimension)."""

    dims: tuple
    increasing: bool
    bases: tuple = None

    @property
    def layers(self):
        """Graded layer dimensions, first quotient first.

        Radical: (F_0 - F_1, F_1 - F_2, ...); socle: (S_1, S_2 - S_1, ...).
        These orders correspond under duality.
        """
        if self.increasing:
            prev = 0
            out = []
            for d in self.dims:
                out.append(d - prev)
                prev = d
            return tuple(out)
        return tuple(a - b for a, b in zip(self.dims, self.dims[1:]))

    @property
    def length(self):
        """Largest i with a proper nonzero step (the Loewy length)."""
        if self.increasing:
            return len(self.dims) - 1
        return len(self.dims) - 2


def radical_filtration(ops, with_bases=False):
    """F_0 = V, F_{i+1} = span of operator images of F_i, down to 0."""
    d = ops.dimension
    dims = [d]
    basis = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    bases = [basis] if with_bases else None
    steps = 0
    while dims[-1] > 0:
        span = IntSpan(d)
        for op in ops.operators:
            for v in basis:
                img = op.apply(v)
                if any(img):
                    span.add(img)
        if span.dim >= dims[-1]:
            raise NonNilpotent(
                f"radical chain stalled at dimension {span.dim} after {steps} steps"
            )
        dims.append(span.dim)
        basis = span.basis()
        if with_bases and span.dim:
            bases.append(basis)
        steps += 1
        if steps > d + 1:
            raise NonNilpotent("radical chain exceeded the dimension bound")
    return SubspaceChain(
        tuple(dims), increasing=False, bases=tuple(bases) if with_bases else None
    )


def _membership_conditions(op_rows, span):
    """Integer rows whose kernel is {v : N v in span} for one operator.

    With the span's basis inter-reduced, the residual of a vector w is
    w - sum_j (w[p_j]/R_j[p_j]) R_j; a vector lies in the span iff the
    residual's free coordinates vanish. One condition row per free coordinate.
    """
    d = len(op_rows)
    rows, pivots = span.rows, span.pivots
    pivot_set = set(pivots)
    out = []
    for f in range(d):
        if f in pivot_set:
            continue
        cond = [Fraction(x) for x in op_rows[f]]
        for rj, pj in zip(rows, pivots):
            if rj[f]:
                scale = Fraction(rj[f], rj[pj])
                prow = op_rows[pj]
                for c in range(d):
                    if prow[c]:
                        cond[c] -= scale * prow[c]
        if any(cond):
            out.append(cond)
    return out


def socle_filtration(ops):
    """S_1 = common kernel, S_{i+1} = preimage of the common kernel in V/S_i."""
    d = ops.dimension
    if not ops.operators:
        return SubspaceChain((d,), increasing=True)
    all_rows = [op.rows() for op in ops.operators]
    span = IntSpan(d)  # S_0 = 0
    dims = []
    while True:
        conditions = []
        for op_rows in all_rows:
            conditions.extend(_membership_conditions(op_rows, span))
        vectors = nullspace(conditions, d) if conditions else [
            [1 if i == j else 0 for j in range(d)] for i in range(d)
        ]
        nd = len(vectors)
        if dims and nd <= dims[-1]:
            raise NonNilpotent(f"socle chain stalled at dimension {nd}")
        if not dims and nd == 0:
            raise NonNilpotent("no invariant vectors; operators are not nilpotent")
        dims.append(nd)
        if nd == d:
            return SubspaceChain(tuple(dims), increasing=True)
        span = IntSpan(d)
        span.add_all(vectors)
        if len(dims) > d + 1:
            raise NonNilpotent("socle chain exceeded the dimension bound")


def duality_check(ops):
    """Loewy layers of V equal socle layers of the dual module V*."""
    rad = radical_filtration(ops)
    soc = socle_filtration(ops.dual())
    return rad.layers == soc.layers


# ----------------------------------------------------------------------------
# Catalog derivations
# ----------------------------------------------------------------------------

def derivations(spec, k, budget=families.DEFAULT_BASIS_BUDGET):
    """Operator set realising the unipotent radical's Lie algebra in degree k."""
    if families.has_monomial_model(spec):
        return _monomial_derivations(spec, k, budget)
    return _subspace_derivations(spec, k, budget)


def _monomial_derivations(spec, k, budget):
    exps = families.basis_exps(spec, k, budget)
    index = {e: i for i, e in enumerate(exps)}
    dim = len(exps)
    ops = []
    for rule in _derivation_rules(spec):
        triples = []
        for e, col in index.items():
            hit = rule(e)
            if hit is None:
                continue
            target, coeff = hit
            row = index.get(target)
            if row is None:
                raise AssertionError(f"derivation left the section space at {e}")
            triples.append((row, col, coeff))
        ops.append(SparseOperator(dim, tuple(triples)))
    return OperatorSet(dim, tuple(ops), label=f"{spec}@k={k}")


def _derivation_rules(spec):
    if spec.kind == families.DEL_PEZZO8:
        def d_y(e):
            return ((e[0] - 1, e[1] + 1, e[2]), e[0]) if e[0] else None

        def d_z(e):
            return ((e[0] - 1, e[1], e[2] + 1), e[0]) if e[0] else None

        return [d_y, d_z]
    if spec.kind in (families.BLOWUP_N_LINE, families.ORBIFOLD_DP):
        def zd_x(e):
            return ((e[0] - 1, e[1], e[2] + 1), e[0]) if e[0] else None

        def zd_y(e):
            return ((e[0], e[1] - 1, e[2] + 1), e[1]) if e[1] else None

        return [zd_x, zd_y]
    # bundle kinds: u_j -> m*v for each degree-n base monomial m
    r, s, n = spec.r, spec.s, spec.n
    rules = []
    for j in range(r):
        for m in families._compositions(n, s + 1):
            def rule(e, j=j, m=m):
                if not e[j]:
                    return None
                target = (
                    e[:j] + (e[j] - 1,) + e[j + 1 : r] + (e[r] + 1,)
                    + tuple(x + dm for x, dm in zip(e[r + 1 :], m))
                )
                return target, e[j]

            rules.append(rule)
    return rules


def _subspace_derivations(spec, k, budget):
    """Blow-up at n >= 3 collinear points: basis by exact nullspace."""
    n, a, b = families._as_surface_blowup(spec)
    deg = a * k
    order = b * k
    ambient = [
        (deg - beta - gamma, beta, gamma)
        for gamma in range(deg + 1)
        for beta in range(deg - gamma + 1)
    ]
    index = {e: i for i, e in enumerate(ambient)}
    namb = len(ambient)
    if namb > budget:
        raise BudgetExceeded(f"ambient size {namb} exceeds budget {budget}")

    conditions = []
    for c in range(order):
        for d_ in range(order - c):
            # Taylor coefficient of u^c v^d at [1:0:0] (u = y/x, v = z/x)
            row = [0] * namb
            row[index[(deg - c - d_, c, d_)]] = 1
            conditions.append(row)
            # and at [0:1:0]
            row = [0] * namb
            row[index[(c, deg - c - d_, d_)]] = 1
            conditions.append(row)
            for lam in range(1, n - 1):
                # at [1:lam:0]: coefficient of (y-lam)^c z^d after x = 1
                row = [0] * namb
                for beta in range(c, deg - d_ + 1):
                    row[index[(deg - beta - d_, beta, d_)]] = comb(beta, c) * lam ** (beta - c)
                conditions.append(row)

    basis = nullspace(conditions, namb)
    expected = families.hilbert_dim(spec, k)
    if len(basis) != expected:
        raise AssertionError(
            f"section space of {spec} at k={k}: got {len(basis)}, expected {expected}"
        )
    coords = CoordSpan(basis, namb)

    def ambient_apply(which, vec):
        out = [0] * namb
        for i, x in enumerate(vec):
            if x:
                e = ambient[i]
                if e[which]:
                    al, be, ga = e
                    tgt = (al - 1, be, ga + 1) if which == 0 else (al, be - 1, ga + 1)
                    out[index[tgt]] += e[which] * x
        return out

    ops = []
    for which in (0, 1):  # z d/dx, z d/dy
        entries = []
        for j, bvec in enumerate(basis):
            img = ambient_apply(which, bvec)
            if not any(img):
                continue
            col = coords.express(img)
            if col is None:
                raise AssertionError("derivation image left the section space")
            entries.extend((i, j, v) for i, v in enumerate(col) if v)
        ops.append(SparseOperator.from_entries(len(basis), entries))
    return OperatorSet(len(basis), tuple(ops), label=f"{spec}@k={k}")


# ----------------------------------------------------------------------------
# Checks tying the oracle to the closed forms
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class OracleRecord:
    k: int
    expected_layers: tuple
    oracle_layers: tuple
    expected_length: int
    oracle_length: int

    @property
    def ok(self):
        return (
            self.expected_layers == self.oracle_layers
            and self.expected_length == self.oracle_length
        )


@dataclass(frozen=True)
class OracleComparison:
    spec: object
    records: tuple

    @property
    def ok(self):
        return all(rec.ok for rec in self.records)

    def mismatches(self):
        return [rec for rec in self.records if not rec.ok]


def compare_oracle_closed_form(spec, k_range, budget=families.DEFAULT_BASIS_BUDGET):
    """Radical-chain layers vs closed-form graded dims over a k range."""
    records = []
    for k in k_range:
        ops = derivations(spec, k, budget)
        chain = radical_filtration(ops)
        records.append(
            OracleRecord(
                k=k,
                expected_layers=families.layer_dims(spec, k),
                oracle_layers=chain.layers,
                expected_length=families.loewy_length(spec, k),
                oracle_length=chain.length,
            )
        )
    return OracleComparison(spec=spec, records=tuple(records))


def multiplicativity_check(spec, k1, k2, budget=families.DEFAULT_BASIS_BUDGET):
    """Exhaustive check that basis products respect weight additivity.

    True iff every product of basis monomials of degrees k1 and k2 is a basis
    monomial of degree k1+k2 whose weight is at least the sum of the factors'
    weights (so F_i * F_j lands in F_{i+j}).
    """
    b1 = families.basis_exps(spec, k1, budget)
    b2 = families.basis_exps(spec, k2, budget)
    target = set(families.basis_exps(spec, k1 + k2, budget))
    for e1 in b1:
        w1 = families.monomial_weight(spec, e1)
        for e2 in b2:
            prod = families.mul_exps(e1, e2)
            if prod not in target:
                return False
            if families.monomial_weight(spec, prod) < w1 + families.monomial_weight(spec, e2):
                return False
    return True
