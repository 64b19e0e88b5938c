from itertools import product

from conftest import HADAMARD4, random_pm1
from detcert.exact import Matrix01, MatrixPM1, det_exact
from detcert.search import brute_force_g, brute_force_h
from detcert.transform import check_theorem2, normalize_pm1, pm1_to_01, zero_one_to_pm1


def test_normalize_examples():
    assert normalize_pm1([[1, 1], [1, -1]]) == [[1, 1], [1, -1]]
    assert normalize_pm1([[-1, 1], [1, 1]]) == [[1, 1], [1, -1]]
    v = normalize_pm1(HADAMARD4)
    assert all(x == 1 for x in v.rows[0]) and all(r[0] == 1 for r in v.rows)
    assert abs(det_exact(v)) == 16 == abs(det_exact(HADAMARD4))


def test_normalize_is_columns_then_rows():
    # rows-then-columns would give a different matrix here
    u = [[-1, 1], [-1, -1]]
    assert normalize_pm1(u) == [[1, 1], [1, -1]]


def test_pm1_to_01_examples():
    assert pm1_to_01([[1, 1], [1, -1]]) == [[1]]
    t = pm1_to_01(HADAMARD4)
    assert t.order == 3
    assert abs(det_exact(t)) == 2 == brute_force_h(3).max_abs_det
    t = pm1_to_01([[1, 1], [1, 1]])
    assert t == [[0]] and det_exact(t) == 0


def test_zero_one_to_pm1_examples():
    assert zero_one_to_pm1([[1]]) == [[1, 1], [1, -1]]
    v = zero_one_to_pm1([[0]])
    assert v == [[1, 1], [1, 1]] and det_exact(v) == 0
    v = zero_one_to_pm1([[1, 0], [0, 1]])
    assert v == [[1, 1, 1], [1, -1, 1], [1, 1, -1]]
    assert abs(det_exact(v)) == 4


def test_check_examples():
    assert check_theorem2([[1, 1], [1, -1]]) == (2, 2, True)
    assert check_theorem2(HADAMARD4) == (16, 16, True)


def test_round_trip_exhaustive_and_sampled(rng):
    for n in (1, 2, 3):
        for bits in product((0, 1), repeat=n * n):
            t = Matrix01([bits[r * n:(r + 1) * n] for r in range(n)])
            assert pm1_to_01(zero_one_to_pm1(t)) == t
    for _ in range(500):
        t = Matrix01([[rng.randint(0, 1) for _ in range(4)] for _ in range(4)])
        assert pm1_to_01(zero_one_to_pm1(t)) == t


def test_determinant_ratio_exhaustive():
    for n in (2, 3, 4):
        for bits in product((1, -1), repeat=n * n):
            assert check_theorem2([bits[r * n:(r + 1) * n] for r in range(n)]).holds


def test_determinant_ratio_random(rng):
    for _ in range(10_000):
        assert check_theorem2(random_pm1(rng, rng.randint(5, 8))).holds


def test_normalize_idempotent_and_det_preserving(rng):
    for _ in range(500):
        u = MatrixPM1(random_pm1(rng, rng.randint(1, 6)))
        v = normalize_pm1(u)
        assert normalize_pm1(v) == v
        assert abs(det_exact(v)) == abs(det_exact(u))


def test_zero_one_to_pm1_scales_det(rng):
    for _ in range(500):
        n = rng.randint(1, 6)
        t = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
        assert abs(det_exact(zero_one_to_pm1(t))) == 2**n * abs(det_exact(t))


def test_maximality_transfer():
    for n in range(1, 5):
        assert brute_force_g(n + 1).max_abs_det == 2**n * brute_force_h(n).max_abs_det
