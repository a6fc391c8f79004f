"""Cup product on rack/quandle cochains, its commutativity homotopy, and
cohomology ring structure constants.

Two independent computation paths are kept side by side:

* ``cup`` evaluates the closed formula
      (f.g)(x_1..x_n) = (-1)^{pq} sum_{|A|=q} eps(A)
                        f(delete_A) g(conjugating-delete_{A^c})
  with eps(A) the unshuffle signature times (-1)^{|A||A^c|};

* ``cup_via_coproduct`` pairs f (x) g against the word-engine coproduct
  with the homogeneous-evaluation sign (-1)^{|g| |left factor|}.

They must agree exactly (oracle pair; tested, never assumed).  The global
(-1)^{pq} in the closed formula is that evaluation sign: the surviving left
factors all have degree p.

``homotopy_cochain`` pairs f (x) g against the word-engine homotopy,
scaled by (-1)^{p+q+1}, and for cocycles f, g satisfies

    d*(H(f,g)) = f.g - (-1)^{pq} g.f        (exactly)

because the tensor-differential part of the homotopy identity dies on
cocycles.  The scale splits as (-1)^{pq} from pairing against the bare
homotopy (the engine's orientation is d h + h d = Delta - tau Delta) times
(-1)^{p+q-1} compensating the dualization sign in the cochain
differential; at p = q = 1 it reduces to the classical single minus sign.

Coefficients may be trivial or permutation modules of rack-set actions; a
product of module-valued cochains lands in the tensor module with the
diagonal action, flattened row-major, so nested products compare strictly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .complexes import (
    Cochain,
    LeftModule,
    cochain_differential,
    cochain_differential_matrix,
    trivial_module,
    tuple_basis,
)
from .errors import ContextMismatch, NotACocycle, NotAQuandle, ResourceLimit
from .linalg import SparseMat, image_basis, in_span, kernel_basis, solve, solve_many
from .racks import Rack
from .words import WordAlgebra


@dataclass
class CupContext:
    """Shared data for cup-product computations over one rack.

    ``module_f`` / ``module_g`` are the coefficient modules of the two
    factors (``None`` means trivial coefficients); the product lands in
    their tensor module unless both are trivial.
    """

    rack: Rack
    ring: object
    quandle: bool = False
    module_f: LeftModule | None = None
    module_g: LeftModule | None = None
    algebra: WordAlgebra = field(default=None, repr=False)

    def __post_init__(self):
        if self.quandle and not self.rack.is_quandle():
            raise NotAQuandle(f"{self.rack.label} is not a quandle")
        if self.algebra is None:
            self.algebra = WordAlgebra(self.rack)

    def target_module(self):
        if self.module_f is None and self.module_g is None:
            return None
        mf = self.module_f or trivial_module(self.rack)
        mg = self.module_g or trivial_module(self.rack)
        return mf.tensor(mg)

    def check(self, f: Cochain, g: Cochain):
        if f.quandle != self.quandle or g.quandle != self.quandle:
            raise ContextMismatch("cochain variant does not match context")
        if f.ring is not self.ring or g.ring is not self.ring:
            raise ContextMismatch("cochain ring does not match context")
        if f.module != self.module_f or g.module != self.module_g:
            raise ContextMismatch("cochain coefficients do not match context")


def _unshuffle_sign(subset, n):
    comp = [i for i in range(1, n + 1) if i not in subset]
    inversions = sum(1 for a in subset for c in comp if a > c)
    return -1 if inversions & 1 else 1


def _subsets_with_sign(n, q):
    """All size-q subsets of 1..n with eps(A), complements included."""
    out = []
    for A in itertools.combinations(range(1, n + 1), q):
        sA = set(A)
        comp = tuple(i for i in range(1, n + 1) if i not in sA)
        eps = _unshuffle_sign(sA, n)
        if (q * (n - q)) & 1:
            eps = -eps
        out.append((A, comp, eps))
    return out


def _value(f: Cochain, basis_index, tuple_, prefix, module, mdim):
    """Evaluate a cochain on ``prefix . e_tuple`` as a dense module vector
    (length 1 for trivial coefficients); None means the value is zero."""
    idx = basis_index.get(tuple_)
    if idx is None:
        return None
    vec = f.values[idx * mdim : (idx + 1) * mdim]
    if module is None or not prefix:
        return vec
    out = [f.ring.zero] * mdim
    for i, v in enumerate(vec):
        if not f.ring.is_zero(v):
            out[module.act_word_index(prefix, i)] = v
    return out


def cup(f: Cochain, g: Cochain, ctx: CupContext) -> Cochain:
    """Closed-formula cup product; bilinear and strictly associative."""
    ctx.check(f, g)
    ring = ctx.ring
    rack = ctx.rack
    p, q = f.degree, g.degree
    n = p + q
    src_f = tuple_basis(rack, p, ctx.quandle)
    src_g = tuple_basis(rack, q, ctx.quandle)
    tgt = tuple_basis(rack, n, ctx.quandle)
    mf = f.module.dim if f.module else 1
    mg = g.module.dim if g.module else 1
    target = ctx.target_module()
    tdim = target.dim if target else 1
    values = [ring.zero] * (len(tgt) * tdim)
    global_neg = (p * q) & 1
    subsets = _subsets_with_sign(n, q)
    op = rack.table
    add, sub, mul, is_zero = ring.add, ring.sub, ring.mul, ring.is_zero
    scalar = f.module is None and g.module is None
    f_idx, g_idx = src_f.index, src_g.index
    fvals, gvals = f.values, g.values
    for t_idx, t in enumerate(tgt.tuples):
        for A, comp, eps in subsets:
            left = tuple(t[i - 1] for i in comp)  # delete positions A
            li = f_idx.get(left)
            if li is None:
                continue
            if scalar and is_zero(fvals[li]):
                continue
            # conjugating faces over A^c, largest first, collecting prefixes
            cur = t
            prefix = []
            for i in sorted(comp, reverse=True):
                x = cur[i - 1]
                cur = tuple(op[cur[k]][x] for k in range(i - 1)) + cur[i:]
                prefix.append(x)
            negative = (eps < 0) != bool(global_neg)
            if scalar:
                ri = g_idx.get(cur)
                if ri is None:
                    continue
                w = mul(fvals[li], gvals[ri])
                if is_zero(w):
                    continue
                values[t_idx] = sub(values[t_idx], w) if negative else add(values[t_idx], w)
                continue
            fv = _value(f, f_idx, left, (), f.module, mf)
            gv = _value(g, g_idx, cur, tuple(prefix), g.module, mg)
            if gv is None:
                continue
            base = t_idx * tdim
            for a in range(mf):
                va = fv[a]
                if is_zero(va):
                    continue
                for b in range(mg):
                    w = mul(va, gv[b])
                    if is_zero(w):
                        continue
                    k = base + a * mg + b
                    values[k] = sub(values[k], w) if negative else add(values[k], w)
    return Cochain(n, ring, values, ctx.quandle, target)


def _pair_against_tensor(f, g, ctx, tensor_terms):
    """Evaluate i(f (x) g) against word-engine tensor terms; the evaluation
    sign (-1)^{|g||left|} is constant (-1)^{pq} on surviving terms."""
    ring = ctx.ring
    p, q = f.degree, g.degree
    src_f = tuple_basis(ctx.rack, p, ctx.quandle)
    src_g = tuple_basis(ctx.rack, q, ctx.quandle)
    mf = f.module.dim if f.module else 1
    mg = g.module.dim if g.module else 1
    target = ctx.target_module()
    tdim = target.dim if target else 1
    out = [ring.zero] * tdim
    global_neg = (p * q) & 1
    for (l, r), c in tensor_terms.items():
        if len(l.e) != p or len(r.e) != q:
            continue
        fv = _value(f, src_f.index, l.e, l.a, f.module, mf)
        if fv is None:
            continue
        gv = _value(g, src_g.index, r.e, r.a, g.module, mg)
        if gv is None:
            continue
        coeff = ring.of(-c if global_neg else c)
        if ring.is_zero(coeff):
            continue
        for a in range(mf):
            va = fv[a]
            if ring.is_zero(va):
                continue
            for b in range(mg):
                w = ring.mul(coeff, ring.mul(va, gv[b]))
                k = a * mg + b
                out[k] = ring.add(out[k], w)
    return out


def cup_via_coproduct(f: Cochain, g: Cochain, ctx: CupContext) -> Cochain:
    """Cup product through the multiplicative coproduct (oracle pair of
    :func:`cup`; the two must agree exactly)."""
    ctx.check(f, g)
    ring = ctx.ring
    n = f.degree + g.degree
    tgt = tuple_basis(ctx.rack, n, ctx.quandle)
    target = ctx.target_module()
    tdim = target.dim if target else 1
    values = [ring.zero] * (len(tgt) * tdim)
    W = ctx.algebra
    for t_idx, t in enumerate(tgt.tuples):
        terms = W.coproduct(W.eword(t)).terms
        vec = _pair_against_tensor(f, g, ctx, terms)
        for k, v in enumerate(vec):
            values[t_idx * tdim + k] = v
    return Cochain(n, ring, values, ctx.quandle, target)


def is_cocycle(f: Cochain, rack: Rack) -> bool:
    df = cochain_differential(f, rack)
    return all(f.ring.is_zero(v) for v in df.values)


def homotopy_cochain(f: Cochain, g: Cochain, ctx: CupContext) -> Cochain:
    """The degree p+q-1 cochain H(f,g) with
    d*(H(f,g)) = f.g - (-1)^{pq} g.f   for cocycles f and g."""
    ctx.check(f, g)
    if not is_cocycle(f, ctx.rack):
        raise NotACocycle("first factor is not a cocycle")
    if not is_cocycle(g, ctx.rack):
        raise NotACocycle("second factor is not a cocycle")
    ring = ctx.ring
    n = f.degree + g.degree - 1
    tgt = tuple_basis(ctx.rack, n, ctx.quandle)
    target = ctx.target_module()
    tdim = target.dim if target else 1
    values = [ring.zero] * (len(tgt) * tdim)
    W = ctx.algebra
    negate = n % 2 == 1  # (-1)^{p+q+1} = (-1)^n for n = p+q-1
    for t_idx, t in enumerate(tgt.tuples):
        terms = W.h(W.eword(t)).terms
        vec = _pair_against_tensor(f, g, ctx, terms)
        for k, v in enumerate(vec):
            values[t_idx * tdim + k] = ring.neg(v) if negate else v
    return Cochain(n, ring, values, ctx.quandle, target)


def is_coboundary(f: Cochain, rack: Rack) -> Cochain | None:
    """Solve d*(h) = f over a field; returns a witness cochain or None.

    In degree 0 nothing has a preimage (a degree-0 cochain is a coboundary
    only when it is zero, and then only vacuously), so the answer is None.
    """
    ring = f.ring
    if not ring.is_field:
        raise ContextMismatch("coboundary solving requires a field")
    if f.degree == 0:
        return None
    mat = cochain_differential_matrix(rack, f.degree - 1, ring, f.quandle, f.module)
    x = solve(mat, f.values)
    if x is None:
        return None
    return Cochain(f.degree - 1, ring, x, f.quandle, f.module)


# ---------------------------------------------------------------------------
# Cohomology ring structure


@dataclass
class RingStructure:
    """Cocycle representatives per degree and cup-product coordinates.

    ``products[(p, i, q, j)]`` holds the coordinates of [rep_i^p . rep_j^q]
    in the representative basis of H^{p+q}; the coordinates are the unique
    solution modulo coboundaries.
    """

    rack_label: str
    ring_name: str
    max_degree: int
    quandle: bool
    dims: dict
    reps: dict
    products: dict

    def product(self, p, i, q, j):
        return self.products[(p, i, q, j)]


def _vectors_to_mat(vectors, length, ring) -> SparseMat:
    mat = SparseMat(length, len(vectors), ring)
    for j, vec in enumerate(vectors):
        for i, v in enumerate(vec):
            if not ring.is_zero(v):
                mat.cols[j][i] = v
    return mat


def ring_structure(rack: Rack, ring, max_degree: int, quandle: bool = False,
                   max_basis: int = 200_000) -> RingStructure:
    """Cohomology ring with trivial coefficients up to ``max_degree``.

    Per degree: a representative cocycle basis of H^p, obtained by
    completing the coboundary basis inside the cocycle space; then every
    pairwise product reduced modulo coboundaries.  Deterministic given the
    basis order.
    """
    if not ring.is_field:
        raise ContextMismatch("ring structure requires field scalars")
    if rack.size ** (max_degree + 1) > max_basis:
        raise ResourceLimit(
            f"degree {max_degree} over size-{rack.size} rack exceeds basis cap"
        )
    ctx = CupContext(rack, ring, quandle)
    dmat = {
        p: cochain_differential_matrix(rack, p, ring, quandle, max_basis=max_basis)
        for p in range(max_degree + 1)
    }
    cocycles = {p: kernel_basis(dmat[p]) for p in range(max_degree + 1)}
    cobs = {0: []}
    for p in range(1, max_degree + 1):
        cobs[p] = image_basis(dmat[p - 1])
    reps: dict[int, list] = {}
    for p in range(max_degree + 1):
        chosen: list = []
        span = list(cobs[p])
        for v in cocycles[p]:
            if not in_span(span, v, ring):
                chosen.append(v)
                span.append(v)
        reps[p] = chosen
    dims = {p: len(reps[p]) for p in range(max_degree + 1)}
    products: dict = {}
    for p in range(max_degree + 1):
        for q in range(max_degree + 1 - p):
            n = p + q
            if not reps[p] or not reps[q]:
                continue
            length = len(tuple_basis(rack, n, quandle))
            red = _vectors_to_mat(reps[n] + cobs[n], length, ring)
            keys = []
            rhs = []
            for i, fv in enumerate(reps[p]):
                fc = Cochain(p, ring, list(fv), quandle)
                for j, gv in enumerate(reps[q]):
                    gc = Cochain(q, ring, list(gv), quandle)
                    keys.append((p, i, q, j))
                    rhs.append(cup(fc, gc, ctx).values)
            for key, coords in zip(keys, solve_many(red, rhs)):
                if coords is None:
                    raise NotACocycle(
                        "product of cocycles failed to reduce; complex is inconsistent"
                    )
                products[key] = tuple(coords[: len(reps[n])])
    return RingStructure(
        rack_label=rack.label,
        ring_name=ring.name,
        max_degree=max_degree,
        quandle=quandle,
        dims=dims,
        reps=reps,
        products=products,
    )
