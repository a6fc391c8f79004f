"""Executable verification suites for the structural identities.

Every suite is exhaustive at its configured sizes (nothing is sampled) and
returns the number of checks performed plus, on failure, a minimal witness:
the offending monomial, tuple, or pair.  The CLI ``verify`` command and the
acceptance tests both run these, so what the tool reports is exactly what
the test suite enforces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .complexes import (
    Cochain,
    basis_cochain,
    boundary_matrix,
    cochain_differential,
    cochain_differential_matrix,
    tuple_basis,
)
from .cup import CupContext, cup, cup_via_coproduct, homotopy_cochain, ring_structure
from .errors import R1Violation, R2Violation, RackhomError
from .linalg import homology, kernel_basis
from .racks import builtin, orbits, validate_rack, xset_self, xset_singleton
from .rings import QQ, ZZ
from .words import BMonomial, WordAlgebra

BUILTIN_SPECS = (
    "trivial:1", "trivial:2", "trivial:3", "trivial:4",
    "dihedral:3", "dihedral:4", "dihedral:5", "dihedral:6",
    "cyclic:3", "cyclic:4",
    "conjugation:s3",
)

SMALL_WORD_RACKS = ("trivial:3", "dihedral:3", "cyclic:3")


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    witness: str | None = None
    notes: list[str] = field(default_factory=list)

    def as_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "witness": self.witness,
            "notes": self.notes,
        }


def _fail(name, checks, witness, notes=None):
    return SuiteResult(name, False, checks, witness, notes or [])


def _monomials(W, rack, max_e, max_prefix):
    n = rack.size
    for ne in range(max_e + 1):
        for e in itertools.product(range(n), repeat=ne):
            for ka in range(max_prefix + 1):
                for a in itertools.product(range(n), repeat=ka):
                    yield W.element({(a, e): 1})


def coassociativity_defect(W: WordAlgebra, u):
    """(Delta (x) 1) Delta(u) minus (1 (x) Delta) Delta(u) as a dict of
    monomial triples; Delta is even, so no Koszul signs appear."""
    out: dict = {}
    t = W.coproduct(u)
    for (l, r), c in t.terms.items():
        for (a, b), c2 in W.coproduct(W.element({(l.a, l.e): 1})).terms.items():
            k = (a, b, r)
            v = out.get(k, 0) + c * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        for (a, b), c2 in W.coproduct(W.element({(r.a, r.e): 1})).terms.items():
            k = (l, a, b)
            v = out.get(k, 0) - c * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


# ---------------------------------------------------------------------------


def suite_axioms(name="axioms"):
    """Builtins pass R1/R2; mutated tables are rejected with real witnesses."""
    checks = 0
    for spec in BUILTIN_SPECS:
        rack = builtin(spec)
        checks += 1
        table = [list(row) for row in rack.table]
        n = rack.size
        if n < 2:
            continue
        # constant column: guaranteed R1 break
        bad = [row[:] for row in table]
        for x in range(n):
            bad[x][0] = 0
        try:
            validate_rack(bad)
            return _fail(name, checks, f"{spec}: constant column accepted")
        except R1Violation as err:
            checks += 1
            if err.y != 0:
                return _fail(name, checks, f"{spec}: R1 witness column {err.y} != 0")
        except RackhomError:
            return _fail(name, checks, f"{spec}: wrong error for constant column")
        # swap two entries inside a column: R1 survives, search for an R2 break
        found = False
        for y in range(n):
            for a in range(n):
                for b in range(a + 1, n):
                    cand = [row[:] for row in table]
                    cand[a][y], cand[b][y] = cand[b][y], cand[a][y]
                    try:
                        validate_rack(cand)
                    except R2Violation as err:
                        checks += 1
                        x_, y_, z_ = err.x, err.y, err.z
                        lhs = cand[cand[x_][y_]][z_]
                        rhs = cand[cand[x_][z_]][cand[y_][z_]]
                        if lhs == rhs:
                            return _fail(
                                name, checks,
                                f"{spec}: R2 witness ({x_},{y_},{z_}) does not violate R2",
                            )
                        found = True
                    except RackhomError:
                        return _fail(name, checks, f"{spec}: column swap broke R1?")
                    if found:
                        break
                if found:
                    break
            if found:
                break
        if not found:
            return _fail(name, checks, f"{spec}: no column swap breaks R2")
    return SuiteResult(name, True, checks)


def suite_squarezero(max_size=4, max_degree=4, name="squarezero"):
    """Boundary squares to zero: both variants, trivial / Y=X / singleton."""
    checks = 0
    for spec in BUILTIN_SPECS:
        rack = builtin(spec)
        if rack.size > max_size:
            continue
        variants = [False, True] if rack.is_quandle() else [False]
        for quandle in variants:
            for xs in (None, xset_self(rack), xset_singleton(rack)):
                mats = {
                    n: boundary_matrix(rack, n, ZZ, quandle, xs)
                    for n in range(1, max_degree + 1)
                }
                for n in range(2, max_degree + 1):
                    checks += 1
                    if not mats[n - 1].mul(mats[n]).is_zero():
                        tag = "quandle" if quandle else "rack"
                        coeff = xs.label if xs else "trivial"
                        return _fail(
                            name, checks,
                            f"{spec} [{tag},{coeff}]: d_{n-1} d_{n} != 0",
                        )
    return SuiteResult(name, True, checks)


def suite_word_identities(rack_specs=SMALL_WORD_RACKS, name="words"):
    """d^2 = 0, coproduct multiplicativity, coassociativity, coderivation."""
    checks = 0
    for spec in rack_specs:
        rack = builtin(spec)
        W = WordAlgebra(rack)
        n = rack.size
        for u in _monomials(W, rack, 3, 2):
            checks += 1
            if W.d(W.d(u)):
                return _fail(name, checks, f"{spec}: d^2 != 0 on {u!r}")
            checks += 1
            if W.tensor_d(W.coproduct(u)) != W.coproduct(W.d(u)):
                return _fail(name, checks, f"{spec}: coderivation fails on {u!r}")
        # coderivation on pure e-words up to length 4
        for ne in range(4, 5):
            for e in itertools.product(range(n), repeat=ne):
                u = W.eword(e)
                checks += 1
                if W.tensor_d(W.coproduct(u)) != W.coproduct(W.d(u)):
                    return _fail(name, checks, f"{spec}: coderivation fails on {e}")
        # multiplicativity: combined e-length <= 4, combined prefix <= 2
        ewords = [e for k in range(3) for e in itertools.product(range(n), repeat=k)]
        prefix_pairs = [((), ())]
        prefix_pairs += [((x,), ()) for x in range(n)]
        prefix_pairs += [((), (x,)) for x in range(n)]
        prefix_pairs += [((x,), (y,)) for x in range(n) for y in range(n)]
        for e1 in ewords:
            for e2 in ewords:
                if len(e1) + len(e2) > 4:
                    continue
                for a1, a2 in prefix_pairs:
                    u = W.element({(a1, e1): 1})
                    v = W.element({(a2, e2): 1})
                    checks += 1
                    if W.coproduct(u * v) != W.tensor_multiply(W.coproduct(u), W.coproduct(v)):
                        return _fail(
                            name, checks,
                            f"{spec}: Delta not multiplicative on {u!r} * {v!r}",
                        )
        # coassociativity on e-words <= 3 and a prefixed layer
        for ne in range(4):
            for e in itertools.product(range(n), repeat=ne):
                for a in [(), (0,)]:
                    u = W.element({(a, e): 1})
                    checks += 1
                    if coassociativity_defect(W, u):
                        return _fail(name, checks, f"{spec}: coassociativity fails on {u!r}")
    return SuiteResult(name, True, checks)


def suite_coproduct(rack_specs=("dihedral:3", "dihedral:4"), max_len=4, name="coproduct"):
    """Closed subset-sum formula == multiplicative coproduct, term by term."""
    checks = 0
    for spec in rack_specs:
        rack = builtin(spec)
        W = WordAlgebra(rack)
        for ne in range(max_len + 1):
            for e in itertools.product(range(rack.size), repeat=ne):
                checks += 1
                if W.coproduct_formula(e) != W.coproduct(W.eword(e)):
                    return _fail(name, checks, f"{spec}: formula != coproduct on {e}")
    return SuiteResult(name, True, checks)


def suite_homotopy(rack_specs=SMALL_WORD_RACKS, name="homotopy"):
    """Homotopy identity, the splitting rule, and the closed degree-2 form.

    The identity is checked in the orientation forced by the generators,
    d h + h d = Delta - tau Delta  (see the word-engine module docstring).
    """
    checks = 0
    for spec in rack_specs:
        rack = builtin(spec)
        W = WordAlgebra(rack)
        n = rack.size
        op = rack.table
        for u in _monomials(W, rack, 3, 2):
            checks += 1
            if W.homotopy_defect(u):
                return _fail(name, checks, f"{spec}: homotopy identity fails on {u!r}")
        for ne in range(5):
            for e in itertools.product(range(n), repeat=ne):
                for k in range(ne + 1):
                    ua, ub = W.eword(e[:k]), W.eword(e[k:])
                    sign = -1 if k % 2 else 1
                    lhs = W.h(ua * ub)
                    rhs = W.tensor_multiply(W.h(ua), W.coproduct(ub)) + sign * W.tensor_multiply(
                        W.tensor_flip(W.coproduct(ua)), W.h(ub)
                    )
                    checks += 1
                    if lhs != rhs:
                        return _fail(name, checks, f"{spec}: splitting rule fails on {e} at {k}")
        for x in range(n):
            for y in range(n):
                got = W.h(W.eword((x, y)))
                exy = W.monomial((), (x, y))
                expect_terms: dict = {}
                for key, c in (
                    ((W.monomial((x,), (y,)), exy), 1),
                    ((W.monomial((), (x,)), exy), 1),
                    ((exy, W.monomial((y,), (op[x][y],))), -1),  # e_x y = y e_{x<|y}
                    ((exy, W.monomial((), (y,))), -1),
                ):
                    expect_terms[key] = expect_terms.get(key, 0) + c
                checks += 1
                if got != W.tensor(expect_terms):
                    return _fail(name, checks, f"{spec}: closed form h(e_{x} e_{y}) wrong")
    return SuiteResult(name, True, checks)


def suite_faces(rack_specs=("dihedral:3", "dihedral:4", "cyclic:4"), max_n=5, name="faces"):
    """Cube-set exchange identities and order-independence of composites."""
    checks = 0
    for spec in rack_specs:
        rack = builtin(spec)
        W = WordAlgebra(rack)
        size = rack.size
        for n in range(2, max_n + 1):
            for t in itertools.product(range(size), repeat=n):
                m = BMonomial((), t)
                for j in range(2, n + 1):
                    for i in range(1, j):
                        for eps in (0, 1):
                            for eta in (0, 1):
                                lhs = W.face_monomial(W.face_monomial(m, j, eta), i, eps)
                                rhs = W.face_monomial(W.face_monomial(m, i, eps), j - 1, eta)
                                checks += 1
                                if lhs != rhs:
                                    return _fail(
                                        name, checks,
                                        f"{spec}: exchange fails at {t} i={i} j={j} "
                                        f"eps={eps} eta={eta}",
                                    )
        # order-independence of composite faces over subsets of 1..4
        for t in itertools.product(range(size), repeat=4):
            m = BMonomial((), t)
            for bits in range(1 << 4):
                idx = [i + 1 for i in range(4) if bits >> i & 1]
                for eps in (0, 1):
                    desc = W.face_set(m, idx, eps)
                    cur = m
                    shift = 0
                    for i in idx:  # increasing order with index shifts
                        cur = W.face_monomial(cur, i - shift, eps)
                        shift += 1
                    checks += 1
                    if desc != cur:
                        return _fail(
                            name, checks,
                            f"{spec}: composite face order-dependent at {t} A={idx} eps={eps}",
                        )
    return SuiteResult(name, True, checks)


def _all_basis_cochains(rack, p, ring, quandle=False):
    basis = tuple_basis(rack, p, quandle)
    return [basis_cochain(rack, p, ring, t, quandle=quandle) for t in basis.tuples]


def suite_cup(name="cup"):
    """Associativity, the derivation law, the oracle pair, and the two
    closed low-degree expansions."""
    checks = 0
    for spec in ("dihedral:3", "trivial:2"):
        rack = builtin(spec)
        ctx = CupContext(rack, ZZ)
        cochains = {p: _all_basis_cochains(rack, p, ZZ) for p in range(5)}
        # strict associativity, p+q+r <= 5
        for p in range(4):
            for q in range(4):
                for r in range(4):
                    if not (1 <= p + q + r <= 5):
                        continue
                    for g in cochains[q]:
                        gh_cache = [cup(g, h, ctx) for h in cochains[r]]
                        for f in cochains[p]:
                            fg = cup(f, g, ctx)
                            for hi, h in enumerate(cochains[r]):
                                checks += 1
                                left = cup(fg, h, ctx)
                                right = cup(f, gh_cache[hi], ctx)
                                if left.values != right.values:
                                    return _fail(
                                        name, checks,
                                        f"{spec}: associativity fails at degrees ({p},{q},{r})",
                                    )
        # super-derivation law, p+q <= 3
        for p in range(4):
            for q in range(4 - p):
                if p + q > 3:
                    continue
                for f in cochains[p]:
                    df = cochain_differential(f, rack)
                    for g in cochains[q]:
                        dg = cochain_differential(g, rack)
                        lhs = cochain_differential(cup(f, g, ctx), rack)
                        rhs1 = cup(df, g, ctx)
                        rhs2 = cup(f, dg, ctx)
                        sign = -1 if p % 2 else 1
                        combined = [
                            ZZ.add(a, ZZ.mul(sign, b))
                            for a, b in zip(rhs1.values, rhs2.values)
                        ]
                        checks += 1
                        if lhs.values != combined:
                            return _fail(
                                name, checks,
                                f"{spec}: derivation law fails at degrees ({p},{q})",
                            )
    # oracle pair on dihedral:3, p+q <= 4
    rack = builtin("dihedral:3")
    ctx = CupContext(rack, ZZ)
    cochains = {p: _all_basis_cochains(rack, p, ZZ) for p in range(4)}
    for p in range(1, 4):
        for q in range(1, 5 - p):
            for f in cochains[p]:
                for g in cochains[q]:
                    checks += 1
                    if cup(f, g, ctx).values != cup_via_coproduct(f, g, ctx).values:
                        return _fail(
                            name, checks,
                            f"{spec}: cup != cup-via-coproduct at degrees ({p},{q})",
                        )
    # closed p=q=1 expansion: (f.g)(x,y) = -f(x)g(y) + f(y)g(x<|y)
    op = rack.table
    b2 = tuple_basis(rack, 2)
    for f in cochains[1]:
        for g in cochains[1]:
            fg = cup(f, g, ctx)
            for (x, y) in b2.tuples:
                expect = -f.values[x] * g.values[y] + f.values[y] * g.values[op[x][y]]
                checks += 1
                if fg.values[b2.index[(x, y)]] != expect:
                    return _fail(name, checks, f"p=q=1 expansion fails at ({x},{y})")
    # closed p=q=2 six-term expansion (signs forced by the Koszul coproduct)
    b4 = tuple_basis(rack, 4)
    b2i = b2.index

    def opw(a, *ws):
        for w in ws:
            a = op[a][w]
        return a

    for f in cochains[2]:
        for g in cochains[2]:
            fg = cup(f, g, ctx)
            fv = lambda a, b: f.values[b2i[(a, b)]]
            gv = lambda a, b: g.values[b2i[(a, b)]]
            for (x, y, z, t) in b4.tuples:
                expect = (
                    fv(x, y) * gv(z, t)
                    + fv(z, t) * gv(opw(x, z, t), opw(y, z, t))
                    - fv(x, z) * gv(op[y][z], t)
                    + fv(x, t) * gv(op[y][t], op[z][t])
                    + fv(y, z) * gv(opw(x, y, z), t)
                    - fv(y, t) * gv(opw(x, y, t), op[z][t])
                )
                checks += 1
                if fg.values[b4.index[(x, y, z, t)]] != expect:
                    return _fail(
                        name, checks, f"p=q=2 expansion fails at ({x},{y},{z},{t})"
                    )
    return SuiteResult(name, True, checks)


def suite_commutativity(name="commutativity"):
    """Cocycle-level homotopy identity, ring-level graded commutativity,
    trivial-rack cochain-level commutativity, and the non-commutativity
    witness on the three-element dihedral quandle."""
    checks = 0
    notes = []
    ring = QQ
    for spec in ("dihedral:3", "dihedral:4"):
        rack = builtin(spec)
        ctx = CupContext(rack, ring)
        cocycles = {
            p: kernel_basis(cochain_differential_matrix(rack, p, ring))
            for p in (1, 2)
        }
        for p in (1, 2):
            for q in (1, 2):
                sign = -1 if (p * q) % 2 else 1
                for fv in cocycles[p]:
                    f = Cochain(p, ring, list(fv))
                    for gv in cocycles[q]:
                        g = Cochain(q, ring, list(gv))
                        H = homotopy_cochain(f, g, ctx)
                        dH = cochain_differential(H, rack)
                        fg = cup(f, g, ctx)
                        gf = cup(g, f, ctx)
                        comm = [
                            ring.sub(a, ring.mul(ring.of(sign), b))
                            for a, b in zip(fg.values, gf.values)
                        ]
                        checks += 1
                        if dH.values != comm:
                            return _fail(
                                name, checks,
                                f"{spec}: d*H != graded commutator at degrees ({p},{q})",
                            )
        rs = ring_structure(rack, ring, 4)
        notes.append(f"{spec} H^p dims: " + str([rs.dims[p] for p in range(5)]))
        for p in (1, 2):
            for q in (1, 2):
                sign = -1 if (p * q) % 2 else 1
                for i in range(rs.dims[p]):
                    for j in range(rs.dims[q]):
                        left = rs.products[(p, i, q, j)]
                        right = rs.products[(q, j, p, i)]
                        checks += 1
                        if left != tuple(ring.mul(ring.of(sign), c) for c in right):
                            return _fail(
                                name, checks,
                                f"{spec}: [f][g] != (-1)^pq [g][f] at ({p},{i},{q},{j})",
                            )
    # trivial racks: graded commutativity on the nose at cochain level
    for spec in ("trivial:2", "trivial:3"):
        rack = builtin(spec)
        ctx = CupContext(rack, ZZ)
        for p in (1, 2):
            for q in (1, 2):
                sign = -1 if (p * q) % 2 else 1
                for f in _all_basis_cochains(rack, p, ZZ):
                    for g in _all_basis_cochains(rack, q, ZZ):
                        fg = cup(f, g, ctx)
                        gf = cup(g, f, ctx)
                        checks += 1
                        if fg.values != [sign * v for v in gf.values]:
                            return _fail(
                                name, checks,
                                f"{spec}: trivial rack not graded-commutative at ({p},{q})",
                            )
    # dihedral:3 witness: the anticommutator of the indicator 1-cochains of
    # 0 and 1 takes the value -1 on (0,1)
    rack = builtin("dihedral:3")
    ctx = CupContext(rack, ZZ)
    f = basis_cochain(rack, 1, ZZ, (0,))
    g = basis_cochain(rack, 1, ZZ, (1,))
    fg = cup(f, g, ctx)
    gf = cup(g, f, ctx)
    b2 = tuple_basis(rack, 2)
    val = fg.values[b2.index[(0, 1)]] + gf.values[b2.index[(0, 1)]]
    checks += 1
    if val != -1:
        return _fail(name, checks, f"dihedral:3 anticommutator witness is {val}, not -1")
    return SuiteResult(name, True, checks, notes=notes)


def suite_quandle(rack_specs=("dihedral:3", "conjugation:s3"), name="quandle"):
    """Quotient correctness: the projection commutes with the differential
    and (componentwise) with the coproduct and homotopy, and the quandle
    boundary is the induced map on the non-degenerate basis."""
    checks = 0
    for spec in rack_specs:
        rack = builtin(spec)
        W = WordAlgebra(rack)
        n = rack.size
        max_len = 4 if n <= 3 else 3
        for ne in range(1, max_len + 1):
            for e in itertools.product(range(n), repeat=ne):
                u = W.eword(e)
                pu = W.quandle_project(u)
                checks += 3
                if W.quandle_project(W.d(u)) != W.quandle_project(W.d(pu)):
                    return _fail(name, checks, f"{spec}: projection vs d fails on {e}")
                if W.quandle_project_tensor(W.coproduct(u)) != W.quandle_project_tensor(
                    W.coproduct(pu)
                ):
                    return _fail(name, checks, f"{spec}: projection vs Delta fails on {e}")
                if W.quandle_project_tensor(W.h(u)) != W.quandle_project_tensor(W.h(pu)):
                    return _fail(name, checks, f"{spec}: projection vs h fails on {e}")
        # induced boundary on the non-degenerate basis
        for deg in range(1, 5):
            full = boundary_matrix(rack, deg, ZZ)
            quot = boundary_matrix(rack, deg, ZZ, quandle=True)
            src_full = tuple_basis(rack, deg)
            tgt_full = tuple_basis(rack, deg - 1)
            src_q = tuple_basis(rack, deg, True)
            tgt_q = tuple_basis(rack, deg - 1, True)
            for t in src_q.tuples:
                col_full = full.cols[src_full.index[t]]
                projected = {}
                for row, v in col_full.items():
                    rt = tgt_full.tuples[row]
                    qi = tgt_q.index.get(rt)
                    if qi is not None:
                        projected[qi] = v
                checks += 1
                if projected != quot.cols[src_q.index[t]]:
                    return _fail(name, checks, f"{spec}: induced boundary wrong at {t}")
            # the boundary maps the degenerate span into itself: projected
            # boundary of a degenerate tuple must vanish in the quotient
            for t in src_full.tuples:
                if t in src_q.index:
                    continue
                col_full = full.cols[src_full.index[t]]
                checks += 1
                for row, v in col_full.items():
                    if tgt_full.tuples[row] in tgt_q.index:
                        return _fail(
                            name, checks,
                            f"{spec}: degenerate {t} leaks into the quotient",
                        )
    return SuiteResult(name, True, checks)


def suite_regression(name="regression"):
    """Frozen homology values, confirmed beforehand by an independent
    dense-elimination and Smith-form oracle."""
    checks = 0
    for m in (1, 2, 3, 4):
        rack = builtin(f"trivial:{m}")
        for deg in (1, 2, 3, 4):
            h = homology(
                boundary_matrix(rack, deg + 1, ZZ),
                boundary_matrix(rack, deg, ZZ),
                ZZ,
                deg,
            )
            checks += 1
            if (h.betti, h.torsion) != (m**deg, ()):
                return _fail(name, checks, f"trivial:{m} H_{deg} = {h.describe()}")
    rack = builtin("dihedral:3")
    for deg in (1, 2, 3):
        h = homology(
            boundary_matrix(rack, deg + 1, QQ),
            boundary_matrix(rack, deg, QQ),
            QQ,
            deg,
        )
        checks += 1
        if h.betti != 1:
            return _fail(name, checks, f"dihedral:3 rack betti_{deg} = {h.betti}")
    for spec, expected in (("dihedral:3", 1), ("dihedral:4", 2), ("trivial:3", 3)):
        rack = builtin(spec)
        dim_h1 = len(kernel_basis(cochain_differential_matrix(rack, 1, QQ)))
        checks += 2
        if dim_h1 != expected:
            return _fail(name, checks, f"{spec}: dim H^1 = {dim_h1} != {expected}")
        if len(orbits(rack)) != expected:
            return _fail(name, checks, f"{spec}: orbit count != {expected}")
    rack = builtin("dihedral:3")
    h = homology(
        boundary_matrix(rack, 4, ZZ, True),
        boundary_matrix(rack, 3, ZZ, True),
        ZZ,
        3,
    )
    checks += 1
    if (h.betti, h.torsion) != (0, (3,)):
        return _fail(name, checks, f"quandle H_3(dihedral:3; Z) = {h.describe()}")
    return SuiteResult(name, True, checks)


ALL_SUITES = {
    "axioms": suite_axioms,
    "squarezero": suite_squarezero,
    "words": suite_word_identities,
    "coproduct": suite_coproduct,
    "homotopy": suite_homotopy,
    "faces": suite_faces,
    "cup": suite_cup,
    "commutativity": suite_commutativity,
    "quandle": suite_quandle,
    "regression": suite_regression,
}


def run_suite(spec: str):
    """Run one suite by name, or every suite for ``all``."""
    if spec == "all":
        return [ALL_SUITES[k]() for k in ALL_SUITES]
    if spec not in ALL_SUITES:
        raise KeyError(f"unknown suite {spec!r}; choose from {', '.join(ALL_SUITES)} or all")
    return [ALL_SUITES[spec]()]
