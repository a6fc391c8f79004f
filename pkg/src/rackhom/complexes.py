"""Rack and quandle chain/cochain complexes as explicit exact matrices.

Bases are tuples over the rack, enumerated in mixed-radix order with the
last coordinate varying fastest; the quandle variant keeps exactly the
tuples with no adjacent equal entries.  Degree 0 is one empty tuple.

Two sign conventions coexist on purpose:

* ``boundary_matrix`` implements the alternating-sum boundary verbatim:
      bd(x_1..x_n) = sum_i (-1)^i [ delete_i - delete_i-with-conjugation ]
  This is what homology reports use.

* ``cochain_differential`` precomposes with the word-engine differential
  ``d`` and multiplies by the Koszul dualization sign (-1)^{degree}.  The
  sign makes the differential a super-derivation for the cup product in
  the standard form  d*(f.g) = d*f.g + (-1)^{|f|} f.d*g;  without it the
  law holds only in a twisted form.  Projecting the engine to chains gives
  exactly ``-bd`` in every positive degree; both operators are exposed and
  the equality is a tested invariant, not an assumption.  Kernels and
  images agree under every per-degree sign choice, so homology and
  cohomology are identical throughout.

Coefficients: trivial (the base ring) or the permutation module of a
validated rack-set action.  Chains use the right action; cochains use the
left action obtained by inverting each right translation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    CoefficientMismatch,
    DimensionOverflow,
    IndexOutOfRange,
    MixedDegrees,
    NotAQuandle,
)
from .linalg import SparseMat
from .racks import Rack, XSet
from .rings import ZZ
from .words import BElement

DEFAULT_MAX_BASIS = 200_000


def no_adjacent_equal(t):
    return all(a != b for a, b in zip(t, t[1:]))


@dataclass(frozen=True)
class TupleBasis:
    """Ordered basis of degree-``n`` chains (rack or quandle variant)."""

    rack: Rack
    degree: int
    quandle: bool
    tuples: tuple[tuple[int, ...], ...]
    index: dict = field(compare=False, hash=False, repr=False)

    def __len__(self):
        return len(self.tuples)


def tuple_basis(rack: Rack, n: int, quandle: bool = False,
                max_basis: int = DEFAULT_MAX_BASIS) -> TupleBasis:
    if n < 0:
        raise IndexOutOfRange("degree must be >= 0")
    if quandle and not rack.is_quandle():
        raise NotAQuandle(f"{rack.label} is not a quandle")
    if rack.size ** n > max_basis:
        raise DimensionOverflow(
            f"basis of degree {n} over size-{rack.size} rack exceeds cap {max_basis}"
        )
    tuples = tuple(
        t for t in itertools.product(range(rack.size), repeat=n)
        if not quandle or no_adjacent_equal(t)
    )
    return TupleBasis(rack, n, quandle, tuples, {t: i for i, t in enumerate(tuples)})


def face(t, i, eps, rack: Rack):
    """Face map on a bare tuple: returns ``(prefix, smaller_tuple)``.

    ``eps=0`` deletes position ``i`` (1-based) and has no prefix; ``eps=1``
    deletes it, replaces every earlier entry ``x_j`` by ``x_j <| x_i``, and
    reports the deleted entry as the acting prefix (used when coefficients
    carry an action).
    """
    n = len(t)
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"face index {i} for degree {n}")
    j = i - 1
    if eps == 0:
        return None, t[:j] + t[j + 1 :]
    op = rack.table
    x = t[j]
    return x, tuple(op[t[k]][x] for k in range(j)) + t[j + 1 :]


def face_set(t, indices, eps, rack: Rack):
    """Composite face over an index set, largest index first.

    Returns ``(prefix_word, tuple)`` where the prefix word lists the acting
    elements in order of application (empty for ``eps=0``).
    """
    prefix = []
    for i in sorted(indices, reverse=True):
        p, t = face(t, i, eps, rack)
        if p is not None:
            prefix.append(p)
    return tuple(prefix), t


# ---------------------------------------------------------------------------
# Coefficient modules


@dataclass(frozen=True)
class LeftModule:
    """A module whose rack generators act by basis permutations.

    ``perms[x][i] = j`` means the generator ``x`` sends basis vector ``i``
    to basis vector ``j``.  For the permutation module of a rack-set this
    is the inverse of the right action, which is exactly what makes the
    exchange relation hold on the left.
    """

    dim: int
    perms: tuple[tuple[int, ...], ...]
    label: str = "module"

    def act_index(self, x, i):
        return self.perms[x][i]

    def act_word_index(self, word, i):
        # f(a_1 .. a_k m) = L(a_1)(... L(a_k) f(m)): apply the last letter first
        for x in reversed(word):
            i = self.perms[x][i]
        return i

    def inverse_perms(self):
        out = []
        for perm in self.perms:
            inv = [0] * self.dim
            for i, j in enumerate(perm):
                inv[j] = i
            out.append(tuple(inv))
        return tuple(out)

    def tensor(self, other: "LeftModule") -> "LeftModule":
        dim = self.dim * other.dim
        perms = tuple(
            tuple(
                self.perms[x][i] * other.dim + other.perms[x][j]
                for i in range(self.dim)
                for j in range(other.dim)
            )
            for x in range(len(self.perms))
        )
        return LeftModule(dim, perms, f"{self.label}(x){other.label}")


def trivial_module(rack: Rack) -> LeftModule:
    return LeftModule(1, tuple((0,) for _ in range(rack.size)), "trivial")


def module_from_xset(xset: XSet) -> LeftModule:
    """Left permutation module of a rack-set: generators act by the
    inverses of the right translations."""
    rack = xset.over
    perms = []
    for x in range(rack.size):
        inv = [0] * xset.size
        for y in range(xset.size):
            inv[xset.act[y][x]] = y
        perms.append(tuple(inv))
    return LeftModule(xset.size, tuple(perms), f"k[{xset.label}]")


# ---------------------------------------------------------------------------
# Chains, cochains, boundary matrices


@dataclass
class Chain:
    """Vector over a tuple basis; module-valued entries are flattened as
    ``tuple_index * module_dim + module_index``."""

    basis: TupleBasis
    ring: object
    values: list
    module_dim: int = 1


@dataclass
class Cochain:
    degree: int
    ring: object
    values: list
    quandle: bool = False
    module: LeftModule | None = None

    def copy(self):
        return Cochain(self.degree, self.ring, list(self.values), self.quandle, self.module)


def zero_cochain(rack: Rack, p: int, ring, quandle=False, module=None) -> Cochain:
    basis = tuple_basis(rack, p, quandle)
    dim = (module.dim if module else 1) * len(basis)
    return Cochain(p, ring, [ring.zero] * dim, quandle, module)


def basis_cochain(rack: Rack, p: int, ring, t, j=0, quandle=False, module=None) -> Cochain:
    """Indicator cochain of a basis tuple (and module basis index)."""
    basis = tuple_basis(rack, p, quandle)
    mdim = module.dim if module else 1
    f = zero_cochain(rack, p, ring, quandle, module)
    f.values[basis.index[tuple(t)] * mdim + j] = ring.one
    return f


def boundary_matrix(rack: Rack, n: int, ring=ZZ, quandle: bool = False,
                    xset: XSet | None = None,
                    max_basis: int = DEFAULT_MAX_BASIS) -> SparseMat:
    """Matrix of the degree-``n`` boundary on the chosen basis.

    Columns are indexed by the degree-``n`` basis, rows by degree ``n-1``.
    With rack-set coefficients the bases are (basis tuple, point) pairs
    flattened as ``tuple_index * |Y| + point`` and the conjugating faces
    move the point by the right action.  The quandle variant is the induced
    map on the non-degenerate basis (degenerate images are dropped).
    """
    if n < 1:
        raise IndexOutOfRange("boundary defined for degree >= 1")
    if xset is not None and xset.over != rack:
        raise CoefficientMismatch("rack-set is over a different rack")
    src = tuple_basis(rack, n, quandle, max_basis)
    tgt = tuple_basis(rack, n - 1, quandle, max_basis)
    ydim = xset.size if xset is not None else 1
    mat = SparseMat.zero(len(tgt) * ydim, len(src) * ydim, ring)
    one = ring.one
    neg = ring.neg
    for col_t, t in enumerate(src.tuples):
        for i in range(1, n + 1):
            s = neg(one) if i % 2 else one  # (-1)^i, i 1-based
            _, t0 = face(t, i, 0, rack)
            x, t1 = face(t, i, 1, rack)
            r0 = tgt.index.get(t0)
            r1 = tgt.index.get(t1)
            for y in range(ydim):
                col = col_t * ydim + y
                if r0 is not None:
                    mat.add_at(r0 * ydim + y, col, s)
                if r1 is not None:
                    yx = xset.act[y][x] if xset is not None else y
                    mat.add_at(r1 * ydim + yx, col, neg(s))
    return mat


def cochain_differential(f: Cochain, rack: Rack) -> Cochain:
    """Signed precomposition with the word-engine differential.

    On tuples:
      (d*f)(t) = (-1)^p sum_i (-1)^{i+1} [ f(delete_i t)
                                           - x_i . f(conjugate-delete_i t) ]
    where p is the cochain degree and the action is trivial unless the
    cochain is module-valued.  The leading (-1)^p is the dualization sign
    (see the module docstring); it never changes kernels or images.
    """
    ring = f.ring
    p = f.degree
    src = tuple_basis(rack, p, f.quandle)
    tgt = tuple_basis(rack, p + 1, f.quandle)
    module = f.module
    mdim = module.dim if module else 1
    if len(f.values) != len(src) * mdim:
        raise CoefficientMismatch("cochain length does not match its basis")
    inv_perms = module.inverse_perms() if module else None
    out = [ring.zero] * (len(tgt) * mdim)
    add, sub = ring.add, ring.sub
    flip = p % 2 == 1
    for row_t, t in enumerate(tgt.tuples):
        for i in range(1, p + 2):
            positive = (i % 2 == 1) != flip  # (-1)^{p+i+1}
            _, t0 = face(t, i, 0, rack)
            x, t1 = face(t, i, 1, rack)
            c0 = src.index.get(t0)
            c1 = src.index.get(t1)
            for j in range(mdim):
                acc = out[row_t * mdim + j]
                if c0 is not None:
                    v = f.values[c0 * mdim + j]
                    acc = add(acc, v) if positive else sub(acc, v)
                if c1 is not None:
                    jj = inv_perms[x][j] if module else j
                    v = f.values[c1 * mdim + jj]
                    acc = sub(acc, v) if positive else add(acc, v)
                out[row_t * mdim + j] = acc
    return Cochain(p + 1, ring, out, f.quandle, module)


def cochain_differential_matrix(rack: Rack, p: int, ring, quandle=False,
                                module: LeftModule | None = None,
                                max_basis: int = DEFAULT_MAX_BASIS) -> SparseMat:
    """Matrix of the degree-``p`` cochain differential C^p -> C^{p+1}."""
    src = tuple_basis(rack, p, quandle, max_basis)
    tgt = tuple_basis(rack, p + 1, quandle, max_basis)
    mdim = module.dim if module else 1
    inv_perms = module.inverse_perms() if module else None
    mat = SparseMat.zero(len(tgt) * mdim, len(src) * mdim, ring)
    one = ring.one
    neg = ring.neg
    flip = p % 2 == 1
    for row_t, t in enumerate(tgt.tuples):
        for i in range(1, p + 2):
            s = one if (i % 2 == 1) != flip else neg(one)  # (-1)^{p+i+1}
            _, t0 = face(t, i, 0, rack)
            x, t1 = face(t, i, 1, rack)
            c0 = src.index.get(t0)
            c1 = src.index.get(t1)
            for j in range(mdim):
                row = row_t * mdim + j
                if c0 is not None:
                    mat.add_at(row, c0 * mdim + j, s)
                if c1 is not None:
                    jj = inv_perms[x][j] if module else j
                    mat.add_at(row, c1 * mdim + jj, neg(s))
    return mat


def project_to_chain(u: BElement, ring=ZZ, xset: XSet | None = None,
                     y: int = 0, quandle: bool = False,
                     degree: int | None = None) -> Chain:
    """Collapse a homogeneous element to a chain vector.

    Each monomial ``a . e_word`` lands on the basis tuple of its e-word.
    With trivial coefficients the prefix acts trivially; with rack-set
    coefficients the starting point ``y`` is pushed through the prefix by
    the right action, so the result lives in the (tuple, point) basis.
    ``degree`` pins the target degree when ``u`` may be zero.
    """
    rack = u.algebra.rack
    degs = u.degrees()
    if len(degs) > 1:
        raise MixedDegrees(f"element has degrees {degs}")
    if degs and degree is not None and degs[0] != degree:
        raise MixedDegrees(f"element has degree {degs[0]}, expected {degree}")
    n = degs[0] if degs else (degree if degree is not None else 0)
    basis = tuple_basis(rack, n, quandle)
    ydim = xset.size if xset is not None else 1
    values = [ring.zero] * (len(basis) * ydim)
    for m, c in u.terms.items():
        idx = basis.index.get(m.e)
        if idx is None:
            continue  # degenerate tuple in the quandle variant
        yy = y
        if xset is not None:
            for a in m.a:
                yy = xset.act[yy][a]
        values[idx * ydim + yy] = ring.add(values[idx * ydim + yy], ring.of(c))
    return Chain(basis, ring, values, ydim)
