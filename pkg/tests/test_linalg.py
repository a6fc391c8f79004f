"""Exact linear algebra, cross-checked against sympy as the independent
dense oracle (different codebase, different algorithms)."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from rackhom.complexes import boundary_matrix, cochain_differential_matrix
from rackhom.errors import NotAComplex, ResourceLimit, ShapeError
from rackhom.linalg import (
    HomologyGroup,
    SparseMat,
    homology,
    image_basis,
    in_span,
    kernel_basis,
    rank,
    smith_normal_form,
    solve,
    solve_many,
)
from rackhom.racks import dihedral_rack, trivial_rack
from rackhom.rings import GF, QQ, ZZ

R3 = dihedral_rack(3)
R4 = dihedral_rack(4)


def sympy_invariant_factors(dense):
    m = sympy.Matrix(dense)
    d = sympy_snf(m, domain=sympy.ZZ)
    out = [abs(d[i, i]) for i in range(min(d.rows, d.cols))]
    return tuple(v for v in out if v)


# --- field elimination -------------------------------------------------------


def test_rank_zero_and_identity():
    assert rank(SparseMat.zero(3, 5, QQ)) == 0
    assert len(kernel_basis(SparseMat.zero(3, 5, QQ))) == 5
    assert rank(SparseMat.identity(6, QQ)) == 6
    assert kernel_basis(SparseMat.identity(6, QQ)) == []


def test_rank_of_boundary():
    # columns u_x - u_{x <| y} over one orbit span the zero-sum subspace
    assert rank(boundary_matrix(R3, 2, QQ)) == 2


def test_field_ops_require_field():
    with pytest.raises(ShapeError):
        rank(SparseMat.zero(2, 2, ZZ))


def test_kernel_annihilates():
    m = boundary_matrix(R4, 2, QQ)
    for v in kernel_basis(m):
        out = [QQ.zero] * m.nrows
        for j, c in enumerate(v):
            if not QQ.is_zero(c):
                for i, w in m.cols[j].items():
                    out[i] = QQ.add(out[i], QQ.mul(w, c))
        assert all(QQ.is_zero(x) for x in out)
    assert len(kernel_basis(m)) == m.ncols - rank(m)


def test_image_basis_reduced():
    m = SparseMat.from_dense([[1, 2, 3], [2, 4, 6], [0, 1, 1]], QQ)
    img = image_basis(m)
    assert len(img) == rank(m) == 2
    # reduced echelon form: leading one with zeros above it in later rows
    assert img[0][:2] == [Fraction(1), Fraction(2)]


def test_solve_and_solve_many():
    m = SparseMat.from_dense([[1, 0], [1, 1]], QQ)
    assert solve(m, [QQ.of(2), QQ.of(3)]) == [Fraction(2), Fraction(1)]
    inconsistent = SparseMat.from_dense([[1, 0], [1, 0]], QQ)
    sols = solve_many(inconsistent, [[QQ.of(1), QQ.of(1)], [QQ.of(1), QQ.of(2)]])
    assert sols[0] == [Fraction(1), Fraction(0)]
    assert sols[1] is None


def test_in_span():
    vs = [[QQ.of(1), QQ.of(0)], [QQ.of(0), QQ.of(1)]]
    assert in_span(vs, [QQ.of(2), QQ.of(-7)], QQ)
    assert not in_span([vs[0]], [QQ.of(0), QQ.of(1)], QQ)
    assert in_span([], [QQ.zero, QQ.zero], QQ)
    assert not in_span([], [QQ.one, QQ.zero], QQ)


def test_elimination_over_prime_field():
    F3 = GF(3)
    m = SparseMat.from_dense([[1, 2], [2, 1]], F3)
    assert rank(m) == 1  # second row = 2 * first mod 3
    assert len(kernel_basis(m)) == 1


# --- Smith normal form --------------------------------------------------------


def test_snf_diag_example():
    assert smith_normal_form(SparseMat.from_dense([[2, 0], [0, 3]], ZZ)).factors == (1, 6)


def test_snf_zero_matrix():
    s = smith_normal_form(SparseMat.zero(4, 2, ZZ))
    assert s.factors == () and s.rank == 0


def test_snf_requires_integers():
    with pytest.raises(ShapeError):
        smith_normal_form(SparseMat.zero(2, 2, QQ))


def test_snf_resource_cap():
    with pytest.raises(ResourceLimit):
        smith_normal_form(SparseMat.zero(3000, 3000, ZZ))


def test_snf_divisibility_chain_and_oracle_fixed_cases():
    cases = [
        [[2, 4, 4], [-6, 6, 12], [10, 4, 16]],
        [[1, 2], [3, 4]],
        [[6]],
        [[0, 0], [0, 0]],
        [[2, 0], [0, 2], [2, 2]],
    ]
    for dense in cases:
        ours = smith_normal_form(SparseMat.from_dense(dense, ZZ)).factors
        assert ours == sympy_invariant_factors(dense)
        for a, b in zip(ours, ours[1:]):
            assert b % a == 0


@settings(max_examples=120, deadline=None)
@given(
    st.integers(1, 4),
    st.integers(1, 4),
    st.data(),
)
def test_snf_matches_sympy_oracle(nr, nc, data):
    dense = [
        [data.draw(st.integers(-9, 9)) for _ in range(nc)] for _ in range(nr)
    ]
    ours = smith_normal_form(SparseMat.from_dense(dense, ZZ)).factors
    assert ours == sympy_invariant_factors(dense)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.data())
def test_rational_rank_counts_invariant_factors(n, data):
    dense = [[data.draw(st.integers(-6, 6)) for _ in range(n)] for _ in range(n)]
    m = SparseMat.from_dense(dense, ZZ)
    assert smith_normal_form(m).rank == rank(m.change_ring(QQ))


# --- homology assembly -----------------------------------------------------------


def test_homology_checks_composition():
    a = SparseMat.identity(2, ZZ)
    with pytest.raises(NotAComplex):
        homology(a, a, ZZ)


def test_single_point_trivial_rack():
    rack = trivial_rack(1)
    for n in (1, 2, 3, 4):
        h = homology(
            boundary_matrix(rack, n + 1, ZZ), boundary_matrix(rack, n, ZZ), ZZ, n
        )
        assert (h.betti, h.torsion) == (1, ())


def test_r3_betti_and_quandle_torsion():
    for n in (1, 2, 3):
        h = homology(
            boundary_matrix(R3, n + 1, QQ), boundary_matrix(R3, n, QQ), QQ, n
        )
        assert h.betti == 1
    h3 = homology(
        boundary_matrix(R3, 4, ZZ, True), boundary_matrix(R3, 3, ZZ, True), ZZ, 3
    )
    assert (h3.betti, h3.torsion) == (0, (3,))
    assert h3.describe() == "Z/3"


def test_homology_against_sympy_oracle():
    """Full integral homology of the three-element dihedral quandle complex,
    recomputed with sympy rank and Smith form."""
    for quandle in (False, True):
        mats = {n: boundary_matrix(R3, n, ZZ, quandle) for n in range(1, 5)}
        for n in (1, 2, 3):
            ours = homology(mats[n + 1], mats[n], ZZ, n)
            m_out = sympy.Matrix(mats[n].to_dense())
            m_in = sympy.Matrix(mats[n + 1].to_dense())
            betti = mats[n].ncols - m_out.rank() - m_in.rank()
            torsion = tuple(v for v in sympy_invariant_factors(mats[n + 1].to_dense()) if v > 1)
            assert (ours.betti, ours.torsion) == (betti, torsion)


def test_sign_shifted_complex_same_homology():
    """Scaling each chain group by (-1)^n intertwines the two exposed sign
    conventions; homology must not change."""
    for ring in (ZZ, QQ, GF(3)):
        for n in (1, 2, 3):
            plain_in = boundary_matrix(R3, n + 1, ring)
            plain_out = boundary_matrix(R3, n, ring)
            flipped_in = plain_in.scaled(ring.neg(ring.one))
            flipped_out = plain_out.scaled(ring.neg(ring.one))
            a = homology(plain_in, plain_out, ring, n)
            b = homology(flipped_in, flipped_out, ring, n)
            assert (a.betti, a.torsion) == (b.betti, b.torsion)


def test_universal_coefficients_consistency():
    """dim_{F_p} H^n = betti_n + #{torsion factors divisible by p in degrees
    n and n-1}, on the quandle cohomology of the three-element dihedral
    quandle at p = 3."""
    p = 3
    Fp = GF(p)
    integral = {}
    mats = {n: boundary_matrix(R3, n, ZZ, True) for n in range(1, 6)}
    for n in (1, 2, 3, 4):
        integral[n] = homology(mats[n + 1], mats[n], ZZ, n)
    integral[0] = HomologyGroup(0, 1, ())  # C_0 = Z, zero boundaries
    dmats = {n: cochain_differential_matrix(R3, n, Fp, quandle=True) for n in range(5)}
    for n in (1, 2, 3, 4):
        hn = homology(dmats[n - 1], dmats[n], Fp, n)
        t_n = sum(1 for d in integral[n].torsion if d % p == 0)
        t_prev = sum(1 for d in integral[n - 1].torsion if d % p == 0)
        assert hn.betti == integral[n].betti + t_n + t_prev


def test_matrix_shape_guards():
    m = SparseMat.zero(2, 2, ZZ)
    with pytest.raises(ShapeError):
        m.add_at(5, 0, 1)
    with pytest.raises(ShapeError):
        m.mul(SparseMat.zero(3, 3, ZZ))
