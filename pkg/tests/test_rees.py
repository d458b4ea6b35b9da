import pytest

from semiconv.core import idempotents, kernel, product_sets
from semiconv.errors import (
    InvalidSandwichEntry,
    NotIdempotent,
    NotInFactor,
    NotSimple,
)
from semiconv.generators import CorpusSpec, build
from semiconv.rees import (
    idempotent_criterion,
    is_primitive_idempotent,
    psi,
    psi_inv,
    rebase,
    rees_decompose,
    rees_matrix_semigroup,
)


def factor_sizes(dec):
    return (len(dec.left), dec.group.order, len(dec.right))


def test_left_zero_decomposition():
    sg = build(CorpusSpec("left_zero", (3,)))
    dec = rees_decompose(sg.carrier())
    assert factor_sizes(dec) == (3, 1, 1)
    assert dec.left == sg.carrier()


def test_right_zero_decomposition():
    sg = build(CorpusSpec("right_zero", (3,)))
    dec = rees_decompose(sg.carrier())
    assert factor_sizes(dec) == (1, 1, 3)


def test_rectangular_band_decomposition():
    sg = build(CorpusSpec("rectangular_band", (2, 3)))
    dec = rees_decompose(sg.carrier())
    assert factor_sizes(dec) == (2, 1, 3)


def test_group_decomposition_trivial_wings():
    sg = build(CorpusSpec("cyclic", (4,)))
    dec = rees_decompose(sg.carrier())
    assert factor_sizes(dec) == (1, 4, 1)
    assert dec.base == 0


def test_full_transformation_kernel_decomposition():
    sg = build(CorpusSpec("full_transformation", (2,)))
    dec = rees_decompose(kernel(sg.carrier()))
    assert factor_sizes(dec) == (2, 1, 1)
    assert sg.label(dec.base) == "00"


def test_decompose_requires_simple():
    sg = build(CorpusSpec("full_transformation", (2,)))
    with pytest.raises(NotSimple):
        rees_decompose(sg.carrier())


def test_coordinates_are_mutually_inverse():
    sg = build(CorpusSpec("rees_matrix", (3, 2, 2), seed=5))
    dec = rees_decompose(sg.carrier())
    seen = set()
    for x in dec.left:
        for g in dec.group.carrier:
            for y in dec.right:
                z = psi(dec, x, g, y)
                assert psi_inv(dec, z) == (x, g, y)
                seen.add(z)
    assert seen == set(sg.carrier())
    for z in sg.carrier():
        x, g, y = psi_inv(dec, z)
        assert psi(dec, x, g, y) == z


def test_psi_rejects_foreign_coordinates():
    sg = build(CorpusSpec("rectangular_band", (2, 2)))
    dec = rees_decompose(sg.carrier())
    bad_left = next(a for a in sg.carrier() if a not in dec.left)
    with pytest.raises(NotInFactor):
        psi(dec, bad_left, dec.group.identity, dec.right.least())


def test_idempotent_criterion_unique_per_cell():
    sg = build(CorpusSpec("rees_matrix", (2, 2, 3), seed=9))
    dec = rees_decompose(sg.carrier())
    predicted = set()
    for x in dec.left:
        for y in dec.right:
            e = idempotent_criterion(dec, x, y)
            cell = {psi(dec, x, g, y) for g in dec.group.carrier}
            assert {z for z in cell if sg.mul(z, z) == z} == {e}
            predicted.add(e)
    assert predicted == set(idempotents(sg.carrier()))


def test_primitive_idempotents():
    t2 = build(CorpusSpec("full_transformation", (2,)))
    const0 = t2.index("00")
    ident = t2.index("01")
    assert is_primitive_idempotent(t2.carrier(), const0)
    # the identity sits above the constants, hence not primitive
    assert not is_primitive_idempotent(t2.carrier(), ident)
    with pytest.raises(NotIdempotent):
        is_primitive_idempotent(t2.carrier(), t2.index("10"))


def test_rebase_at_every_idempotent():
    sg = build(CorpusSpec("rees_matrix", (3, 2, 2), seed=5))
    dec = rees_decompose(sg.carrier())
    for e2 in idempotents(sg.carrier()):
        fresh = rebase(dec, e2)
        assert fresh.base == e2
        assert factor_sizes(fresh) == factor_sizes(dec)
    with pytest.raises(NotIdempotent):
        non_idem = next(a for a in sg.carrier() if sg.mul(a, a) != a)
        rebase(dec, non_idem)


def test_rebase_translation_identities():
    sg = build(CorpusSpec("rees_matrix", (4, 2, 2), seed=3))
    dec = rees_decompose(sg.carrier())
    for e2 in idempotents(sg.carrier()):
        a, g0, b = psi_inv(dec, e2)
        fresh = rebase(dec, e2)
        lhs = product_sets(fresh.left, fresh.group.carrier)
        rhs = product_sets(
            product_sets(dec.left, dec.group.carrier), sg.singleton(b)
        )
        assert lhs == rhs


def test_rees_matrix_construction():
    z3 = build(CorpusSpec("cyclic", (3,)))
    sg = rees_matrix_semigroup(z3, rows=2, cols=2, sandwich=[[0, 1], [2, 0]])
    assert sg.order == 12
    # (i, g, k)(j, h, l) = (i, g + P[k][j] + h, l) in additive notation
    a = sg.index("(0,1,1)")
    b = sg.index("(1,2,0)")
    assert sg.label(sg.mul(a, b)) == "(0,0,0)"  # 1 + P[1][1] + 2 = 1 + 0 + 2 = 0 mod 3
    c = sg.index("(0,0,1)")
    d = sg.index("(0,1,0)")
    assert sg.label(sg.mul(c, d)) == "(0,0,0)"  # 0 + P[1][0] + 1 = 0 + 2 + 1 = 0 mod 3
    dec = rees_decompose(sg.carrier())
    assert factor_sizes(dec) == (2, 3, 2)


def test_rees_matrix_sandwich_validation():
    z2 = build(CorpusSpec("cyclic", (2,)))
    with pytest.raises(InvalidSandwichEntry):
        rees_matrix_semigroup(z2, rows=1, cols=1, sandwich=[[7]])
