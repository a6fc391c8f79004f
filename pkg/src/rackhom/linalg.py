"""Exact sparse linear algebra: ranks, kernels, images, Smith normal form.

Field computations (Q, F_p) use sparse Gaussian elimination to reduced
echelon form; integer diagonalization uses the classical Smith reduction
with minimal-absolute-value pivoting, which is the standard guard against
coefficient explosion at this scale.  Arbitrary-precision integers
throughout; nothing here is probabilistic and nothing floats.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAComplex, ResourceLimit, ShapeError
from .rings import ZZ


class SparseMat:
    """Column-major sparse matrix with exact scalars; no stored zeros."""

    __slots__ = ("nrows", "ncols", "ring", "cols")

    def __init__(self, nrows, ncols, ring, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        self.ring = ring
        self.cols = cols if cols is not None else [{} for _ in range(ncols)]

    @classmethod
    def zero(cls, nrows, ncols, ring):
        return cls(nrows, ncols, ring)

    @classmethod
    def identity(cls, n, ring):
        m = cls(n, n, ring)
        for i in range(n):
            m.cols[i][i] = ring.one
        return m

    @classmethod
    def from_dense(cls, rows, ring):
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        m = cls(nrows, ncols, ring)
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ShapeError("ragged dense matrix")
            for j, v in enumerate(row):
                v = ring.of(v)
                if not ring.is_zero(v):
                    m.cols[j][i] = v
        return m

    def add_at(self, r, c, v):
        if not 0 <= r < self.nrows or not 0 <= c < self.ncols:
            raise ShapeError(f"entry ({r},{c}) outside {self.nrows}x{self.ncols}")
        col = self.cols[c]
        u = self.ring.add(col.get(r, self.ring.zero), v)
        if self.ring.is_zero(u):
            col.pop(r, None)
        else:
            col[r] = u

    def get(self, r, c):
        return self.cols[c].get(r, self.ring.zero)

    def nnz(self):
        return sum(len(c) for c in self.cols)

    def is_zero(self):
        return all(not c for c in self.cols)

    def mul(self, other: "SparseMat") -> "SparseMat":
        if self.ncols != other.nrows:
            raise ShapeError("shape mismatch in matrix product")
        ring = self.ring
        out = SparseMat(self.nrows, other.ncols, ring)
        for j, col in enumerate(other.cols):
            acc: dict = {}
            for k, v in col.items():
                for i, w in self.cols[k].items():
                    u = ring.add(acc.get(i, ring.zero), ring.mul(w, v))
                    if ring.is_zero(u):
                        acc.pop(i, None)
                    else:
                        acc[i] = u
            out.cols[j] = acc
        return out

    def transpose(self) -> "SparseMat":
        out = SparseMat(self.ncols, self.nrows, self.ring)
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out.cols[i][j] = v
        return out

    def scaled(self, c) -> "SparseMat":
        ring = self.ring
        out = SparseMat(self.nrows, self.ncols, ring)
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                w = ring.mul(v, c)
                if not ring.is_zero(w):
                    out.cols[j][i] = w
        return out

    def change_ring(self, ring) -> "SparseMat":
        out = SparseMat(self.nrows, self.ncols, ring)
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                w = ring.of(v)
                if not ring.is_zero(w):
                    out.cols[j][i] = w
        return out

    def to_dense(self):
        rows = [[self.ring.zero] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def rows_as_dicts(self):
        rows = [dict() for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def __eq__(self, other):
        return (
            isinstance(other, SparseMat)
            and (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and self.cols == other.cols
        )

    def __repr__(self):
        return f"SparseMat({self.nrows}x{self.ncols} over {self.ring}, nnz={self.nnz()})"


# ---------------------------------------------------------------------------
# Field elimination


def _require_field(ring):
    if not ring.is_field:
        raise ShapeError(f"{ring} is not a field; use Q or Fp")


def _rref(rows, ring):
    """Reduced row echelon form of sparse row-dicts.

    Returns ``(pivots, pivot_rows)`` with pivots strictly increasing; each
    pivot row is normalized to leading 1 and fully reduced against the
    others.  Deterministic: rows are consumed in order, pivots are the
    minimal nonzero column of each reduced row.
    """
    sub, mul, div, is_zero = ring.sub, ring.mul, ring.div, ring.is_zero
    pivot_of: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            base = pivot_of.get(lead)
            if base is None:
                break
            c = row[lead]
            for j, v in base.items():
                u = sub(row.get(j, ring.zero), mul(c, v))
                if is_zero(u):
                    row.pop(j, None)
                else:
                    row[j] = u
            row.pop(lead, None)
        if row:
            lead = min(row)
            c = row[lead]
            row = {j: div(v, c) for j, v in row.items()}
            pivot_of[lead] = row
    pivots = sorted(pivot_of)
    # back-substitution: eliminate later pivots from earlier rows
    for p in reversed(pivots):
        base = pivot_of[p]
        for q in pivots:
            if q >= p:
                break
            row = pivot_of[q]
            c = row.get(p)
            if c is None:
                continue
            for j, v in base.items():
                u = sub(row.get(j, ring.zero), mul(c, v))
                if is_zero(u):
                    row.pop(j, None)
                else:
                    row[j] = u
            row.pop(p, None)
    return pivots, [pivot_of[p] for p in pivots]


def rank(mat: SparseMat) -> int:
    _require_field(mat.ring)
    pivots, _ = _rref(mat.rows_as_dicts(), mat.ring)
    return len(pivots)


def kernel_basis(mat: SparseMat) -> list[list]:
    """Basis of the right kernel, one dense vector per free column,
    in reduced echelon form with respect to the free columns."""
    ring = mat.ring
    _require_field(ring)
    pivots, rows = _rref(mat.rows_as_dicts(), ring)
    pivot_set = set(pivots)
    basis = []
    for f in range(mat.ncols):
        if f in pivot_set:
            continue
        v = [ring.zero] * mat.ncols
        v[f] = ring.one
        for p, row in zip(pivots, rows):
            c = row.get(f)
            if c is not None:
                v[p] = ring.neg(c)
        basis.append(v)
    return basis


def image_basis(mat: SparseMat) -> list[list]:
    """Basis of the column space as dense vectors in reduced echelon form."""
    ring = mat.ring
    _require_field(ring)
    rows = [dict(col) for col in mat.cols]
    pivots, rred = _rref(rows, ring)
    out = []
    for row in rred:
        v = [ring.zero] * mat.nrows
        for i, c in row.items():
            v[i] = c
        out.append(v)
    return out


def solve(mat: SparseMat, rhs) -> list | None:
    """One solution of ``mat . x = rhs`` over a field, or None.

    Free variables are set to zero, so the witness is deterministic.
    """
    return solve_many(mat, [rhs])[0]


def solve_many(mat: SparseMat, rhs_list) -> list:
    """Solve ``mat . x = rhs`` for several right-hand sides with a single
    elimination; entries are None where the system is inconsistent."""
    ring = mat.ring
    _require_field(ring)
    n = mat.ncols
    rows = mat.rows_as_dicts()
    for k, rhs in enumerate(rhs_list):
        for i, v in enumerate(rhs):
            if not ring.is_zero(v):
                rows[i][n + k] = v
    pivots, rred = _rref(rows, ring)
    bad = set()
    for p, row in zip(pivots, rred):
        if p >= n:
            bad.add(p - n)
            # an all-augmented pivot row witnesses inconsistency for every
            # rhs appearing in it
            bad.update(j - n for j in row if j >= n)
    out = []
    for k in range(len(rhs_list)):
        if k in bad:
            out.append(None)
            continue
        x = [ring.zero] * n
        for p, row in zip(pivots, rred):
            if p < n:
                x[p] = row.get(n + k, ring.zero)
        out.append(x)
    return out


def in_span(vectors, target, ring) -> bool:
    """Whether ``target`` lies in the span of ``vectors`` (dense lists)."""
    if not vectors:
        return all(ring.is_zero(v) for v in target)
    n = len(target)
    mat = SparseMat(n, len(vectors), ring)
    for j, vec in enumerate(vectors):
        for i, v in enumerate(vec):
            if not ring.is_zero(v):
                mat.cols[j][i] = v
    return solve(mat, target) is not None


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix."""

    factors: tuple[int, ...]

    @property
    def rank(self):
        return len(self.factors)

    def torsion(self):
        return tuple(d for d in self.factors if d > 1)


def smith_normal_form(mat: SparseMat, max_entries: int = 4_000_000) -> SmithForm:
    """Diagonalize over Z by unimodular row/column operations.

    Pivot choice: nonzero entry of least absolute value in the remaining
    block.  Python ints make overflow impossible; the entry cap is a
    resource guard, not a correctness bound.
    """
    if mat.ring is not ZZ:
        raise ShapeError("Smith normal form requires integer scalars")
    if mat.nrows * mat.ncols > max_entries:
        raise ResourceLimit(
            f"dense Smith reduction on {mat.nrows}x{mat.ncols} exceeds cap"
        )
    A = [row[:] for row in mat.to_dense()]
    nr, nc = mat.nrows, mat.ncols
    factors = []
    k = 0
    while k < min(nr, nc):
        # locate minimal-abs nonzero pivot in the trailing block
        pi = pj = -1
        best = 0
        for i in range(k, nr):
            row = A[i]
            for j in range(k, nc):
                v = row[j]
                if v and (best == 0 or abs(v) < best):
                    best = abs(v)
                    pi, pj = i, j
                    if best == 1:
                        break
            if best == 1:
                break
        if pi < 0:
            break
        A[k], A[pi] = A[pi], A[k]
        if pj != k:
            for row in A:
                row[k], row[pj] = row[pj], row[k]
        while True:
            p = A[k][k]
            restart = False
            for i in range(k + 1, nr):
                v = A[i][k]
                if v:
                    q = v // p
                    if q:
                        rk = A[k]
                        A[i] = [a - q * b for a, b in zip(A[i], rk)]
                    if A[i][k]:
                        A[k], A[i] = A[i], A[k]  # strictly smaller pivot
                        restart = True
                        break
            if restart:
                continue
            for j in range(k + 1, nc):
                v = A[k][j]
                if v:
                    q = v // p
                    if q:
                        for row in A:
                            row[j] -= q * row[k]
                    if A[k][j]:
                        for row in A:
                            row[k], row[j] = row[j], row[k]
                        restart = True
                        break
            if restart:
                continue
            # pivot divides everything in its row/col; enforce divisibility
            # of the remaining block so the factors come out in chain order
            bad = None
            for i in range(k + 1, nr):
                row = A[i]
                for j in range(k + 1, nc):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            rk, rb = A[k], A[bad]
            A[k] = [a + b for a, b in zip(rk, rb)]
        factors.append(abs(A[k][k]))
        k += 1
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0, "divisibility chain violated"
    return SmithForm(tuple(factors))


# ---------------------------------------------------------------------------
# Homology assembly


@dataclass(frozen=True)
class HomologyGroup:
    """betti + invariant-factor torsion of one homology degree."""

    degree: int
    betti: int
    torsion: tuple[int, ...] = ()

    def describe(self):
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti:
            parts.append(f"Z^{self.betti}")
        seen: dict[int, int] = {}
        for d in self.torsion:
            seen[d] = seen.get(d, 0) + 1
        for d in sorted(seen):
            parts.append(f"Z/{d}" if seen[d] == 1 else f"(Z/{d})^{seen[d]}")
        return " + ".join(parts) if parts else "0"


def homology(boundary_in: SparseMat, boundary_out: SparseMat, ring,
             degree: int = -1) -> HomologyGroup:
    """Homology at ``C_n`` given ``boundary_in`` = d_{n+1} and
    ``boundary_out`` = d_n.

    Over a field: betti = dim ker(out) - rank(in).  Over Z the torsion is
    read from the Smith form of d_{n+1} alone: its image already lies in
    the kernel of d_n, and that kernel is a saturated (pure) submodule, so
    restricting to it does not change the invariant factors.
    """
    if boundary_out.ncols != boundary_in.nrows:
        raise ShapeError("boundary matrices do not compose")
    if not boundary_out.mul(boundary_in).is_zero():
        raise NotAComplex("consecutive boundaries do not compose to zero")
    if ring.is_field:
        m_out = boundary_out if boundary_out.ring is ring else boundary_out.change_ring(ring)
        m_in = boundary_in if boundary_in.ring is ring else boundary_in.change_ring(ring)
        betti = (m_out.ncols - rank(m_out)) - rank(m_in)
        return HomologyGroup(degree, betti, ())
    snf_out = smith_normal_form(boundary_out)
    snf_in = smith_normal_form(boundary_in)
    betti = boundary_out.ncols - snf_out.rank - snf_in.rank
    return HomologyGroup(degree, betti, snf_in.torsion())
