import pytest
from hypothesis import given, strategies as st

from quiverloc.corpus import dimension_vectors, small_quivers
from quiverloc.cycles import count_primitive_classes
from quiverloc.moduli import EmptyModuliError, is_nonempty_simple, moduli_dims, nonempty_reason
from quiverloc.quiver import cyclic_quiver, double_chain_quiver, kronecker_quiver, loop_quiver

from conftest import permute_dim, quiver_and_dim, relabel


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("d", range(1, 6))
def test_loop_quivers_nonempty(m, d):
    assert is_nonempty_simple(loop_quiver(m), (d,))


def test_cyclic_quiver():
    for n in (1, 2, 3, 4):
        assert is_nonempty_simple(cyclic_quiver(n), (1,) * n)
        assert moduli_dims(cyclic_quiver(n), (1,) * n) == (1, 0)
    ok, why = nonempty_reason(cyclic_quiver(3), (2, 2, 2))
    assert not ok and "single cycle" in why


def test_other_cases():
    assert not is_nonempty_simple(loop_quiver(2), (0,))
    assert not is_nonempty_simple(kronecker_quiver(), (1, 1))
    assert not is_nonempty_simple(loop_quiver(0), (1,))
    assert is_nonempty_simple(double_chain_quiver(), (1, 1, 1))
    # j visited twice by any cycle through i and k, yet simples exist
    assert is_nonempty_simple(double_chain_quiver(), (1, 2, 1))


def test_dims():
    assert moduli_dims(loop_quiver(2), (4,)) == (17, 16)
    assert moduli_dims(double_chain_quiver(), (1, 1, 1))[1] == 1
    with pytest.raises(EmptyModuliError, match="moduli empty"):
        moduli_dims(kronecker_quiver(), (1, 1))


def test_primitive_cycles_imply_nonempty():
    for Q in small_quivers(3, 4):
        for d in dimension_vectors(Q.n_vertices, 4):
            if count_primitive_classes(Q, d):
                assert is_nonempty_simple(Q, d), (Q, d)


@given(quiver_and_dim(), st.randoms(use_true_random=False))
def test_relabel_invariant(Qd, rnd):
    Q, d = Qd
    vperm, aperm = list(range(Q.n_vertices)), list(range(Q.n_arrows))
    rnd.shuffle(vperm)
    rnd.shuffle(aperm)
    R = relabel(Q, vperm, aperm)
    assert is_nonempty_simple(Q, d) == is_nonempty_simple(R, permute_dim(d, vperm))
