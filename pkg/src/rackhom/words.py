"""Canonical-form rewriting engine for the bialgebra attached to a rack.

The algebra is generated by one group-like letter per rack element ("a
letters", degree 0) and one exterior-flavoured letter ``e[x]`` per element
(degree 1), subject to

    x . y        =  y . (x <| y)          (a-letter exchange)
    e[x] . y     =  y . e[x <| y]         (a-letter passes an e-letter)

Every word therefore has a canonical form  a_word . e_word  with all group
letters on the left.  Two a-words of the same length are equal exactly when
they lie in one orbit of the adjacent exchange moves; the canonical
representative is the lexicographically minimal orbit element, found by
breadth-first search with a shared memo.  Rewrites never introduce signs.

On top of the canonical form this module implements the structure maps:

* ``d``      -- the degree -1 super-derivation with d(e[x]) = 1 - x, d(x) = 0
* ``coproduct`` -- multiplicative, Delta(x) = x (x) x and
  Delta(e[x]) = e[x] (x) x + 1 (x) e[x], with Koszul signs in the tensor
  product:  (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'
* ``coproduct_formula`` -- the closed sum over subsets with unshuffle signs;
  agrees with ``coproduct`` term by term (tested, not assumed)
* ``tensor_flip`` -- the signed flip  tau(a (x) b) = (-1)^{|a||b|} b (x) a
* ``h``      -- the degree +1 homotopy with h(e[x]) = e[x] (x) e[x] and
  h(ab) = h(a)Delta(b) + (-1)^{|a|} (tau Delta)(a) h(b)

Sign orientation: with these generators the homotopy identity reads
``d o h + h o d = Delta - tau o Delta``.  The orientation is forced: on a
single letter, (dh + hd)(e[x]) = d(e[x] (x) e[x]) = (1-x) (x) e[x] -
e[x] (x) (1-x), which expands to (Delta - tau Delta)(e[x]).

Coefficients are exact (int by default, Fraction accepted); there is no
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import (
    IndexOutOfRange,
    NotAQuandle,
    OrbitLimitExceeded,
    RackMismatch,
    RingMismatch,
)
from .racks import Rack, inverse_op
from .rings import QQ, ZZ


class BMonomial(NamedTuple):
    """A canonical-form monomial: group-like prefix, then e-letters."""

    a: tuple[int, ...]
    e: tuple[int, ...]

    @property
    def degree(self):
        return len(self.e)


EMPTY = BMonomial((), ())


def _acc(acc, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    elif key in acc:
        del acc[key]


def _degenerate(e):
    return any(a == b for a, b in zip(e, e[1:]))


def _sort_key(m):
    return (len(m.e), m.e, len(m.a), m.a)


class BElement:
    """Finitely supported integer (or rational) combination of monomials."""

    __slots__ = ("algebra", "terms", "ring")

    def __init__(self, algebra, terms, ring=ZZ):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c}
        self.ring = ring

    def _check(self, other):
        if self.algebra.rack != other.algebra.rack:
            raise RackMismatch("elements over different racks")
        if self.ring is not other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return BElement(self.algebra, out, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return BElement(self.algebra, {m: -c for m, c in self.terms.items()}, self.ring)

    def __mul__(self, other):
        if isinstance(other, BElement):
            return self.algebra.multiply(self, other)
        return BElement(
            self.algebra, {m: c * other for m, c in self.terms.items()}, self.ring
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, BElement)
            and self.algebra.rack == other.algebra.rack
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degrees(self):
        return sorted({len(m.e) for m in self.terms})

    def __repr__(self):
        return self.algebra.format_element(self)


class TensorElement:
    """Finitely supported combination of monomial pairs in B (x) B."""

    __slots__ = ("algebra", "terms", "ring")

    def __init__(self, algebra, terms, ring=ZZ):
        self.algebra = algebra
        self.terms = {k: c for k, c in terms.items() if c}
        self.ring = ring

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return TensorElement(self.algebra, out, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.algebra, {k: -c for k, c in self.terms.items()}, self.ring)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return self.algebra.tensor_multiply(self, other)
        return TensorElement(
            self.algebra, {k: c * other for k, c in self.terms.items()}, self.ring
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.algebra.rack == other.algebra.rack
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        alg = self.algebra
        if not self.terms:
            return "0"
        bits = []
        for (l, r) in sorted(self.terms, key=lambda k: (_sort_key(k[0]), _sort_key(k[1]))):
            c = self.terms[(l, r)]
            mono = f"{alg.format_monomial(l)} (x) {alg.format_monomial(r)}"
            bits.append((c, mono))
        return " + ".join(f"{c}*{m}" if c != 1 else m for c, m in bits)


class WordAlgebra:
    """All structure maps of the bialgebra of a fixed rack.

    A single instance owns the canonicalization memo and the coproduct and
    homotopy caches; results are pure values, so sharing an instance across
    threads only ever repeats idempotent cache inserts.
    """

    def __init__(self, rack: Rack, orbit_cap: int = 10**6):
        self.rack = rack
        self.orbit_cap = orbit_cap
        self._inv = inverse_op(rack)
        self._canon: dict[tuple, tuple] = {}
        self._delta_memo: dict[tuple, dict] = {}
        self._h_memo: dict[tuple, dict] = {}

    # -- canonical forms ----------------------------------------------------

    def canonical_a_word(self, word):
        """Lexicographically minimal element of the exchange orbit of ``word``.

        The adjacent move (a, b) -> (b, a <| b) and its inverse generate the
        orbit; BFS explores it completely (capped) and memoizes every member.
        """
        word = tuple(word)
        if len(word) < 2:
            return word
        memo = self._canon
        if word in memo:
            return memo[word]
        op = self.rack.table
        inv = self._inv
        seen = {word}
        frontier = [word]
        while frontier:
            if len(seen) > self.orbit_cap:
                raise OrbitLimitExceeded(
                    f"orbit of {word} exceeds cap {self.orbit_cap}"
                )
            nxt = []
            for w in frontier:
                for i in range(len(w) - 1):
                    a, b = w[i], w[i + 1]
                    for pair in ((b, op[a][b]), (inv[b][a], a)):
                        v = w[:i] + pair + w[i + 2 :]
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
            frontier = nxt
        best = min(seen)
        for w in seen:
            memo[w] = best
        return best

    def monomial(self, a_word=(), e_word=()) -> BMonomial:
        return BMonomial(self.canonical_a_word(a_word), tuple(e_word))

    def canonicalize(self, letters):
        """Canonicalize a mixed word of ("g", x) / ("e", x) letters.

        Group letters move left past e-letters, conjugating them; the
        rewrites are sign-free, so the returned sign is always +1 (the slot
        exists for uniformity with the tensor routines).

        >>> from rackhom.racks import dihedral_rack
        >>> W = WordAlgebra(dihedral_rack(3))
        >>> W.canonicalize([("g", 0), ("e", 1), ("g", 2), ("e", 0)])
        (1, BMonomial(a=(0, 2), e=(0, 0)))
        """
        op = self.rack.table
        a_word = []
        e_word = []
        for kind, x in letters:
            if not 0 <= x < self.rack.size:
                raise IndexOutOfRange(f"letter {x} out of range")
            if kind == "g":
                e_word = [op[t][x] for t in e_word]
                a_word.append(x)
            elif kind == "e":
                e_word.append(x)
            else:
                raise ValueError(f"unknown letter kind {kind!r}")
        return 1, BMonomial(self.canonical_a_word(tuple(a_word)), tuple(e_word))

    def mon_mul(self, m1: BMonomial, m2: BMonomial) -> BMonomial:
        """Product of canonical monomials (again a single monomial)."""
        op = self.rack.table
        e1 = m1.e
        for y in m2.a:
            e1 = tuple(op[t][y] for t in e1)
        return BMonomial(self.canonical_a_word(m1.a + m2.a), e1 + m2.e)

    # -- element constructors ------------------------------------------------

    def zero(self, ring=ZZ):
        return BElement(self, {}, ring)

    def one(self, ring=ZZ):
        return BElement(self, {EMPTY: 1}, ring)

    def gen(self, x, ring=ZZ):
        """The group-like generator of a rack element."""
        return BElement(self, {BMonomial((x,), ()): 1}, ring)

    def gen_e(self, x, ring=ZZ):
        return BElement(self, {BMonomial((), (x,)): 1}, ring)

    def element(self, terms, ring=ZZ):
        out = {}
        for m, c in terms.items():
            _acc(out, self.monomial(m.a, m.e) if isinstance(m, BMonomial) else self.monomial(*m), c)
        return BElement(self, out, ring)

    def eword(self, e_word, ring=ZZ):
        return BElement(self, {BMonomial((), tuple(e_word)): 1}, ring)

    def tensor(self, terms, ring=ZZ):
        return TensorElement(self, dict(terms), ring)

    # -- algebra / coalgebra maps --------------------------------------------

    def multiply(self, u: BElement, v: BElement) -> BElement:
        u._check(v)
        out = {}
        for m1, c1 in u.terms.items():
            for m2, c2 in v.terms.items():
                _acc(out, self.mon_mul(m1, m2), c1 * c2)
        return BElement(self, out, u.ring)

    def d(self, u: BElement) -> BElement:
        """Degree -1 super-derivation: d(e[x]) = 1 - x on each e-letter."""
        op = self.rack.table
        out = {}
        for m, c in u.terms.items():
            a, e = m
            for i, x in enumerate(e):
                s = c if i % 2 == 0 else -c
                _acc(out, BMonomial(a, e[:i] + e[i + 1 :]), s)
                conj = tuple(op[t][x] for t in e[:i])
                m1 = BMonomial(self.canonical_a_word(a + (x,)), conj + e[i + 1 :])
                _acc(out, m1, -s)
        return BElement(self, out, u.ring)

    def _delta_eword(self, e):
        memo = self._delta_memo
        t = memo.get(e)
        if t is not None:
            return t
        if not e:
            t = {(EMPTY, EMPTY): 1}
        else:
            x = e[-1]
            gen = {
                (BMonomial((), (x,)), BMonomial((x,), ())): 1,
                (EMPTY, BMonomial((), (x,))): 1,
            }
            t = self._tensor_mul_raw(self._delta_eword(e[:-1]), gen)
        memo[e] = t
        return t

    def _apply_prefix(self, a_word, tensor_terms, coeff, out):
        # diagonal action of a group-like prefix: a.(u (x) v) = au (x) av
        if a_word:
            pref = BMonomial(a_word, ())
            for (l, r), tc in tensor_terms.items():
                _acc(out, (self.mon_mul(pref, l), self.mon_mul(pref, r)), coeff * tc)
        else:
            for k, tc in tensor_terms.items():
                _acc(out, k, coeff * tc)

    def coproduct(self, u: BElement) -> TensorElement:
        out = {}
        for m, c in u.terms.items():
            self._apply_prefix(m.a, self._delta_eword(m.e), c, out)
        return TensorElement(self, out, u.ring)

    def _tensor_mul_raw(self, t1, t2):
        out = {}
        mon_mul = self.mon_mul
        for (l1, r1), c1 in t1.items():
            db = len(r1.e)
            for (l2, r2), c2 in t2.items():
                c = c1 * c2
                if db & 1 and len(l2.e) & 1:
                    c = -c
                _acc(out, (mon_mul(l1, l2), mon_mul(r1, r2)), c)
        return out

    def tensor_multiply(self, t1: TensorElement, t2: TensorElement) -> TensorElement:
        return TensorElement(self, self._tensor_mul_raw(t1.terms, t2.terms), t1.ring)

    def tensor_flip(self, t: TensorElement) -> TensorElement:
        out = {}
        for (l, r), c in t.terms.items():
            if len(l.e) & 1 and len(r.e) & 1:
                c = -c
            _acc(out, (r, l), c)
        return TensorElement(self, out, t.ring)

    def tensor_d(self, t: TensorElement) -> TensorElement:
        """d (x) 1 + 1 (x) d with the Koszul sign on the second summand."""
        out = {}
        for (l, r), c in t.terms.items():
            for lm, lc in self.d(BElement(self, {l: 1})).terms.items():
                _acc(out, (lm, r), c * lc)
            s = -c if len(l.e) & 1 else c
            for rm, rc in self.d(BElement(self, {r: 1})).terms.items():
                _acc(out, (l, rm), s * rc)
        return TensorElement(self, out, t.ring)

    # -- closed coproduct formula ---------------------------------------------

    def face_monomial(self, m: BMonomial, i: int, eps: int) -> BMonomial:
        """Face map on e-positions, promoted to canonical monomials.

        ``eps=0`` deletes e-position ``i`` (1-based); ``eps=1`` deletes it,
        conjugates every e-letter to its left by the deleted letter, and
        appends the deleted letter to the group-like prefix.
        """
        a, e = m
        if not 1 <= i <= len(e):
            raise IndexOutOfRange(f"face index {i} for degree {len(e)}")
        j = i - 1
        if eps == 0:
            return BMonomial(a, e[:j] + e[j + 1 :])
        op = self.rack.table
        x = e[j]
        conj = tuple(op[t][x] for t in e[:j])
        return BMonomial(self.canonical_a_word(a + (x,)), conj + e[j + 1 :])

    def face_set(self, m: BMonomial, indices, eps: int) -> BMonomial:
        """Composite face over an index set, largest index first.

        The value does not depend on the application order (the face maps
        satisfy the cube-set exchange identities); largest-first keeps the
        original indices valid.
        """
        for i in sorted(indices, reverse=True):
            m = self.face_monomial(m, i, eps)
        return m

    @staticmethod
    def unshuffle_sign(subset, n):
        """Signature of the permutation listing ``subset`` then its complement."""
        inside = set(subset)
        comp = [i for i in range(1, n + 1) if i not in inside]
        inversions = sum(1 for a in subset for c in comp if a > c)
        return -1 if inversions & 1 else 1

    def coproduct_formula(self, m, ring=ZZ) -> TensorElement:
        """Closed form of the coproduct of a pure e-word.

        Sums over all subsets ``A`` of the positions: the term for ``A`` is
        (delete A) (x) (delete-and-conjugate the complement), weighted by
        the unshuffle signature of ``A`` times (-1)^{|A| |A^c|}.
        """
        if isinstance(m, BElement):
            out = {}
            for mono, c in m.terms.items():
                if mono.a:
                    raise ValueError("closed formula takes pure e-words")
                for k, tc in self.coproduct_formula(mono).terms.items():
                    _acc(out, k, c * tc)
            return TensorElement(self, out, m.ring)
        if isinstance(m, BMonomial):
            if m.a:
                raise ValueError("closed formula takes pure e-words")
            e = m.e
        else:
            e = tuple(m)
        n = len(e)
        base = BMonomial((), e)
        out = {}
        for bits in range(1 << n):
            A = [i + 1 for i in range(n) if bits >> i & 1]
            Ac = [i + 1 for i in range(n) if not bits >> i & 1]
            eps = self.unshuffle_sign(A, n)
            if (len(A) * len(Ac)) & 1:
                eps = -eps
            left = self.face_set(base, A, 0)
            right = self.face_set(base, Ac, 1)
            _acc(out, (left, right), eps)
        return TensorElement(self, out, ring)

    # -- homotopy ---------------------------------------------------------------

    def _h_eword(self, e):
        memo = self._h_memo
        t = memo.get(e)
        if t is not None:
            return t
        if not e:
            t = {}
        elif len(e) == 1:
            m = BMonomial((), e)
            t = {(m, m): 1}
        else:
            head, rest = e[:1], e[1:]
            first = self._tensor_mul_raw(self._h_eword(head), self._delta_eword(rest))
            flipped = {}
            for (l, r), c in self._delta_eword(head).items():
                if len(l.e) & 1 and len(r.e) & 1:
                    c = -c
                _acc(flipped, (r, l), c)
            second = self._tensor_mul_raw(flipped, self._h_eword(rest))
            t = dict(first)
            for k, c in second.items():
                _acc(t, k, -c)
        memo[e] = t
        return t

    def h(self, u: BElement) -> TensorElement:
        """Degree +1 homotopy: h(e[x]) = e[x] (x) e[x], extended by
        h(ab) = h(a) Delta(b) + (-1)^{|a|} (tau Delta)(a) h(b) and by the
        diagonal action on group-like prefixes."""
        out = {}
        for m, c in u.terms.items():
            self._apply_prefix(m.a, self._h_eword(m.e), c, out)
        return TensorElement(self, out, u.ring)

    def homotopy_defect(self, u: BElement) -> TensorElement:
        """(d o h + h o d - coproduct + flipped coproduct)(u); zero on all of B."""
        lhs = self.tensor_d(self.h(u)) + self.h(self.d(u))
        delta = self.coproduct(u)
        return lhs - delta + self.tensor_flip(delta)

    # -- quandle quotient ---------------------------------------------------------

    def quandle_project(self, u: BElement) -> BElement:
        """Quotient by the ideal of squares of e-letters.

        In canonical form the ideal is spanned by the monomials whose e-word
        has an adjacent equal pair (group letters pass an adjacent pair
        without separating it), so projection just deletes those monomials.
        """
        if not self.rack.is_quandle():
            raise NotAQuandle(f"{self.rack.label} is not a quandle")
        return BElement(
            self, {m: c for m, c in u.terms.items() if not _degenerate(m.e)}, u.ring
        )

    def quandle_project_tensor(self, t: TensorElement) -> TensorElement:
        if not self.rack.is_quandle():
            raise NotAQuandle(f"{self.rack.label} is not a quandle")
        return TensorElement(
            self,
            {
                (l, r): c
                for (l, r), c in t.terms.items()
                if not (_degenerate(l.e) or _degenerate(r.e))
            },
            t.ring,
        )

    # -- rendering ----------------------------------------------------------------

    @staticmethod
    def format_monomial(m: BMonomial) -> str:
        if not m.a and not m.e:
            return "1"
        bits = [str(x) for x in m.a] + [f"e[{x}]" for x in m.e]
        return " ".join(bits)

    def format_element(self, u: BElement) -> str:
        if not u.terms:
            return "0"
        bits = []
        for m in sorted(u.terms, key=_sort_key):
            c = u.terms[m]
            mono = self.format_monomial(m)
            bits.append((c, mono))
        out = []
        for c, mono in bits:
            if c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{c}*{mono}"
            if not out:
                out.append(piece)
            elif piece.startswith("-"):
                out.append(f"- {piece[1:]}")
            else:
                out.append(f"+ {piece}")
        return " ".join(out)


def as_fraction_element(u: BElement) -> BElement:
    """Coerce integer coefficients to Fractions (ring tag becomes Q)."""
    return BElement(u.algebra, {m: Fraction(c) for m, c in u.terms.items()}, QQ)
