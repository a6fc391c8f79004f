import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rackhom.complexes import (
    Cochain,
    basis_cochain,
    boundary_matrix,
    cochain_differential,
    cochain_differential_matrix,
    face,
    face_set,
    module_from_xset,
    project_to_chain,
    trivial_module,
    tuple_basis,
)
from rackhom.errors import (
    DimensionOverflow,
    IndexOutOfRange,
    MixedDegrees,
    NotAQuandle,
)
from rackhom.racks import builtin, cyclic_rack, dihedral_rack, trivial_rack, xset_self, xset_singleton
from rackhom.rings import QQ, ZZ
from rackhom.words import WordAlgebra

R3 = dihedral_rack(3)
R4 = dihedral_rack(4)


def test_basis_roundtrip_and_order():
    b = tuple_basis(R3, 2)
    assert len(b) == 9
    # mixed radix, last coordinate fastest
    assert b.tuples[:4] == ((0, 0), (0, 1), (0, 2), (1, 0))
    for i, t in enumerate(b.tuples):
        assert b.index[t] == i


def test_quandle_basis_excludes_adjacent_equal():
    b = tuple_basis(R3, 3, quandle=True)
    assert len(b) == 12
    assert all(x != y and y != z for (x, y, z) in b.tuples)
    with pytest.raises(NotAQuandle):
        tuple_basis(cyclic_rack(3), 2, quandle=True)


def test_basis_cap():
    with pytest.raises(DimensionOverflow):
        tuple_basis(R4, 12, max_basis=1000)


def test_face_examples():
    # conjugating face: delta_2^1(x,y,z) = (x <| y, z) with prefix y
    for x, y, z in itertools.product(range(3), repeat=3):
        assert face((x, y, z), 2, 1, R3) == (y, (R3.op(x, y), z))
    # leftmost conjugating face has an empty conjugated segment
    assert face((0, 1), 1, 1, R3) == (0, (1,))
    with pytest.raises(IndexOutOfRange):
        face((0, 1), 3, 0, R3)


def test_face_exchange_instance():
    # delta_1^0 delta_3^1 = delta_2^1 delta_1^0 on triples, both (y <| z)
    for t in itertools.product(range(3), repeat=3):
        _, a = face(t, 3, 1, R3)
        _, a = face(a, 1, 0, R3)
        _, b = face(t, 1, 0, R3)
        _, b = face(b, 2, 1, R3)
        assert a == b == (R3.op(t[1], t[2]),)


def test_face_set_collects_prefixes_largest_first():
    prefix, rest = face_set((0, 1, 2), {1, 2}, 1, R3)
    # apply index 2 first (prefix 1), then index 1 on the shortened tuple
    x1, t1 = face((0, 1, 2), 2, 1, R3)
    x2, t2 = face(t1, 1, 1, R3)
    assert prefix == (x1, x2) and rest == t2


def test_boundary_matrix_example():
    # bd(x, y) = (x) - (x <| y); over the three-element dihedral, bd(0,1) = (0) - (2)
    m = boundary_matrix(R3, 2, ZZ)
    b2 = tuple_basis(R3, 2)
    assert m.cols[b2.index[(0, 1)]] == {0: 1, 2: -1}
    assert m.cols[b2.index[(0, 0)]] == {}  # 0 <| 0 = 0 cancels


def test_boundary_trivial_rack_zero():
    for n in (1, 2, 3, 4):
        assert boundary_matrix(trivial_rack(3), n, ZZ).is_zero()


def test_boundary_degree_one_zero():
    assert boundary_matrix(R3, 1, ZZ).is_zero()
    assert boundary_matrix(cyclic_rack(4), 1, ZZ).is_zero()


def test_boundary_squares_to_zero_all_variants():
    for rack in (R3, R4, cyclic_rack(3), builtin("conjugation:s3")):
        variants = [False, True] if rack.is_quandle() else [False]
        top = 4 if rack.size <= 4 else 3
        for quandle in variants:
            for xs in (None, xset_self(rack), xset_singleton(rack)):
                mats = {
                    n: boundary_matrix(rack, n, ZZ, quandle, xs)
                    for n in range(1, top + 1)
                }
                for n in range(2, top + 1):
                    assert mats[n - 1].mul(mats[n]).is_zero()


def test_singleton_coefficients_reproduce_trivial():
    for rack in (R3, R4):
        for n in (1, 2, 3):
            assert (
                boundary_matrix(rack, n, ZZ, xset=xset_singleton(rack)).cols
                == boundary_matrix(rack, n, ZZ).cols
            )


def test_projection_sign_against_engine():
    """project(d(e_T)) is exactly minus the boundary column of T."""
    W = WordAlgebra(R3)
    for n in (1, 2, 3):
        bd = boundary_matrix(R3, n, ZZ)
        basis = tuple_basis(R3, n)
        for T in basis.tuples:
            ch = project_to_chain(W.d(W.eword(T)), ZZ, degree=n - 1)
            dense = [0] * bd.nrows
            for i, v in bd.cols[basis.index[T]].items():
                dense[i] = -v
            assert ch.values == dense


def test_projection_with_module_coefficients():
    """With a rack-set the prefix moves the point by the right action, and
    the identity project(d) = -boundary holds in the (tuple, point) basis."""
    xs = xset_self(R3)
    W = WordAlgebra(R3)
    for n in (1, 2, 3):
        bd = boundary_matrix(R3, n, ZZ, xset=xs)
        basis = tuple_basis(R3, n)
        for T in basis.tuples:
            for y in range(xs.size):
                ch = project_to_chain(W.d(W.eword(T)), ZZ, xset=xs, y=y, degree=n - 1)
                dense = [0] * bd.nrows
                for i, v in bd.cols[basis.index[T] * xs.size + y].items():
                    dense[i] = -v
                assert ch.values == dense


def test_project_examples():
    W = WordAlgebra(R3)
    ch = project_to_chain(W.eword((0, 1)), ZZ)
    b2 = tuple_basis(R3, 2)
    assert ch.values[b2.index[(0, 1)]] == 1 and sum(map(abs, ch.values)) == 1
    # a group-like prefix acts trivially on trivial coefficients
    u = W.element({((2,), (0, 1)): 1})
    assert project_to_chain(u, ZZ).values == ch.values
    with pytest.raises(MixedDegrees):
        project_to_chain(W.eword((0,)) + W.eword((0, 1)), ZZ)


def test_cochain_length_mismatch():
    from rackhom.errors import CoefficientMismatch

    f = Cochain(1, QQ, [QQ.one] * 5)  # wrong length for a size-3 rack
    with pytest.raises(CoefficientMismatch):
        cochain_differential(f, R3)


def test_cocycle_condition_in_degree_one():
    # a 1-cochain is a cocycle iff it is constant on orbits
    f = basis_cochain(R3, 1, QQ, (0,))
    df = cochain_differential(f, R3)
    assert any(not QQ.is_zero(v) for v in df.values)
    const = Cochain(1, QQ, [QQ.one] * 3)
    assert all(QQ.is_zero(v) for v in cochain_differential(const, R3).values)


def test_cochain_differential_squares_to_zero():
    for rack in (R3, cyclic_rack(3)):
        for p in (0, 1, 2):
            basis = tuple_basis(rack, p)
            for t in basis.tuples:
                f = basis_cochain(rack, p, QQ, t)
                ddf = cochain_differential(cochain_differential(f, rack), rack)
                assert all(QQ.is_zero(v) for v in ddf.values)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=9, max_size=9))
def test_dstar_squared_zero_random(values):
    f = Cochain(2, QQ, [QQ.of(v) for v in values])
    ddf = cochain_differential(cochain_differential(f, R3), R3)
    assert all(QQ.is_zero(v) for v in ddf.values)


def test_cochain_differential_matrix_agrees_with_function():
    for rack in (R3, R4):
        for p in (0, 1, 2):
            mat = cochain_differential_matrix(rack, p, QQ)
            basis = tuple_basis(rack, p)
            for j, t in enumerate(basis.tuples):
                f = basis_cochain(rack, p, QQ, t)
                df = cochain_differential(f, rack)
                col = [QQ.zero] * mat.nrows
                for i, v in mat.cols[j].items():
                    col[i] = v
                assert df.values == col


def test_cochain_differential_matrix_with_module():
    xs = xset_self(R3)
    mod = module_from_xset(xs)
    mat = cochain_differential_matrix(R3, 1, QQ, module=mod)
    basis = tuple_basis(R3, 1)
    for j in range(mat.ncols):
        t, k = basis.tuples[j // mod.dim], j % mod.dim
        f = basis_cochain(R3, 1, QQ, t, j=k, module=mod)
        df = cochain_differential(f, R3)
        col = [QQ.zero] * mat.nrows
        for i, v in mat.cols[j].items():
            col[i] = v
        assert df.values == col
    # module-valued d* still squares to zero
    m2 = cochain_differential_matrix(R3, 2, QQ, module=mod)
    assert m2.mul(mat).is_zero()


def test_left_module_inverts_right_action():
    xs = xset_self(R4)
    mod = module_from_xset(xs)
    for x in range(4):
        for y in range(4):
            assert mod.perms[x][xs.act[y][x]] == y


def test_module_tensor_dimensions():
    xs = xset_self(R3)
    mod = module_from_xset(xs)
    t = mod.tensor(trivial_module(R3))
    assert t.dim == 3
    tt = mod.tensor(mod)
    assert tt.dim == 9
    for x in range(3):
        for i in range(3):
            for j in range(3):
                assert tt.perms[x][i * 3 + j] == mod.perms[x][i] * 3 + mod.perms[x][j]


def test_quandle_boundary_well_defined():
    """The full boundary maps degenerate tuples to degenerate combinations,
    so the quotient map is well defined degree by degree."""
    for rack in (R3, builtin("conjugation:s3")):
        for n in (2, 3, 4):
            full = boundary_matrix(rack, n, ZZ)
            src = tuple_basis(rack, n)
            tgt = tuple_basis(rack, n - 1)
            tgt_q = tuple_basis(rack, n - 1, quandle=True)
            for t in src.tuples:
                if any(a == b for a, b in zip(t, t[1:])):
                    col = full.cols[src.index[t]]
                    for row in col:
                        assert tgt.tuples[row] not in tgt_q.index
