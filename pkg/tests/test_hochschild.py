import pytest

from quiverloc.corpus import dimension_vectors, small_quivers
from quiverloc.cycles import canonicalize, class_dim, enumerate_cycle_classes
from quiverloc.euler import euler_direct
from quiverloc.hochschild import hh0_graded_dim, hh0_primitive_dim, power_map, primitive_root
from quiverloc.quiver import kronecker_quiver, loop_quiver


def test_graded_dims():
    assert hh0_graded_dim(loop_quiver(2), (2,)) == 3
    assert all(hh0_graded_dim(loop_quiver(1), (n,)) == 1 for n in range(1, 7))
    assert hh0_graded_dim(kronecker_quiver(), (2, 1)) == 0
    assert hh0_primitive_dim(loop_quiver(2), (4,)) == 3
    assert hh0_primitive_dim(loop_quiver(2), (2,)) == 1
    assert hh0_primitive_dim(kronecker_quiver(), (1, 1)) == 0


def test_power_map():
    c = canonicalize((0, 1))
    assert power_map(c, 1) == c
    sq = power_map(c, 2)
    assert sq.arrows == (0, 1, 0, 1) and not sq.primitive
    assert power_map(canonicalize((0,)), 3).arrows == (0, 0, 0)
    with pytest.raises(ValueError):
        power_map(c, 0)


@pytest.mark.parametrize("Q", small_quivers(3, 4)[::4], ids=str)
def test_unique_factorization(Q):
    for d in dimension_vectors(Q.n_vertices, 5):
        for c in enumerate_cycle_classes(Q, d):
            root, p = primitive_root(c)
            assert root.primitive and power_map(root, p) == c
            assert tuple(p * x for x in class_dim(Q, root)) == d
            # no other primitive class and exponent work
            others = [
                (r, k) for k in range(1, c.length + 1) if c.length % k == 0
                for r in enumerate_cycle_classes(Q, tuple(x // k for x in d))
                if all(x % k == 0 for x in d) and r.primitive and power_map(r, k) == c
            ]
            assert others == [(root, p)]
        assert hh0_primitive_dim(Q, d) == euler_direct(Q, d)
