import random

from polyrank.linalg import (
    content,
    det,
    extend_to_unimodular,
    hnf_row,
    identity_matrix,
    invert_unimodular,
    mat_mul,
    matrix_rank,
    primitive,
    saturated_row_basis,
    snf,
    solve_rectangular,
    solve_square,
)


def random_matrix(rng, rows, cols, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def test_content_and_primitive():
    assert content([4, -6, 10]) == 2
    assert content([0, 0]) == 0
    assert primitive([4, -6, 10]) == (2, -3, 5)
    assert primitive([0, 0, 0]) == (0, 0, 0)
    assert primitive([3]) == (1,)


def test_det_known_values():
    assert det([[2, 0], [0, 3]]) == 6
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[0, 1], [1, 0]]) == -1
    assert det([]) == 1
    # singular
    assert det([[1, 2], [2, 4]]) == 0


def test_det_matches_rank():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 5)
        m = random_matrix(rng, n, n)
        d = det(m)
        r = matrix_rank(m)
        assert (d != 0) == (r == n)


def test_solve_square_roundtrip():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 5)
        a = random_matrix(rng, n, n)
        if det(a) == 0:
            assert solve_square(a, [0] * n) is None or all(
                x == 0 for x in solve_square(a, [0] * n)
            )
            continue
        x = [rng.randint(-5, 5) for _ in range(n)]
        b = [sum(r[j] * x[j] for j in range(n)) for r in a]
        sol = solve_square(a, b)
        assert sol is not None
        assert [int(v) for v in sol] == x


def test_solve_rectangular_consistency():
    # consistent underdetermined system
    sol = solve_rectangular([[1, 1, 0], [0, 1, 1]], [3, 5])
    assert sol is not None
    assert sol[0] + sol[1] == 3 and sol[1] + sol[2] == 5
    # inconsistent system
    assert solve_rectangular([[1, 0], [1, 0]], [1, 2]) is None


def test_hnf_row_properties():
    rng = random.Random(13)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = random_matrix(rng, rows, cols)
        h, u = hnf_row(a)
        assert abs(det(u)) == 1
        assert mat_mul(u, a) == h
        # echelon with positive pivots, reduced entries above each pivot
        last_pivot = -1
        for i, row in enumerate(h):
            nz = [j for j, x in enumerate(row) if x]
            if not nz:
                assert all(not any(h[k]) for k in range(i, len(h)))
                break
            p = nz[0]
            assert p > last_pivot
            assert row[p] > 0
            for k in range(i):
                assert 0 <= h[k][p] < row[p]
            last_pivot = p


def test_hnf_uniqueness_under_row_mixing():
    rng = random.Random(17)
    for _ in range(30):
        n = rng.randint(2, 4)
        a = random_matrix(rng, n, n + 1)
        h1, _ = hnf_row(a)
        # premultiplying by a unimodular matrix must not change the HNF
        u = random_unimodular(rng, n)
        h2, _ = hnf_row(mat_mul(u, a))
        assert h1 == h2


def random_unimodular(rng, n, steps=12):
    u = identity_matrix(n)
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        q = rng.randint(-3, 3)
        for k in range(n):
            u[i][k] += q * u[j][k]
    if rng.random() < 0.5 and n > 1:
        u[0], u[1] = u[1], u[0]
    return u


def test_invert_unimodular():
    rng = random.Random(19)
    for _ in range(30):
        n = rng.randint(1, 5)
        u = random_unimodular(rng, n)
        inv = invert_unimodular(u)
        assert mat_mul(u, inv) == identity_matrix(n)


def test_snf_properties():
    rng = random.Random(23)
    for _ in range(80):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = random_matrix(rng, rows, cols)
        s, u, v = snf(a)
        assert abs(det(u)) == 1
        assert abs(det(v)) == 1
        assert mat_mul(mat_mul(u, a), v) == s
        diag = [s[i][i] for i in range(min(rows, cols))]
        for i in range(len(s)):
            for j in range(len(s[0])):
                if i != j:
                    assert s[i][j] == 0
        for i in range(len(diag) - 1):
            if diag[i]:
                assert diag[i] > 0
                if diag[i + 1]:
                    assert diag[i + 1] % diag[i] == 0
            else:
                assert diag[i + 1] == 0


def test_saturated_row_basis_scales_away():
    # span of (2, 0) saturates to (1, 0)
    assert saturated_row_basis([[2, 0]]) == [(1, 0)]
    # a full-rank sublattice of Z^2 always saturates to Z^2 itself
    for rows in ([[1, 1], [0, 2]], [[2, 0], [0, 3]]):
        basis = saturated_row_basis(rows)
        assert len(basis) == 2
        assert abs(det([list(b) for b in basis])) == 1


def test_saturated_row_basis_membership():
    rng = random.Random(29)
    for _ in range(40):
        dim = rng.randint(1, 4)
        k = rng.randint(1, 3)
        rows = random_matrix(rng, k, dim, -4, 4)
        basis = saturated_row_basis(rows)
        # every original row must be an integer combination of the basis
        for row in rows:
            if not any(row):
                continue
            coeffs = solve_rectangular(
                [[basis[i][j] for i in range(len(basis))] for j in range(dim)], row
            )
            assert coeffs is not None
            assert all(c.denominator == 1 for c in coeffs)


def test_extend_to_unimodular():
    rng = random.Random(31)
    for _ in range(40):
        dim = rng.randint(1, 5)
        k = rng.randint(0, dim)
        rows = random_matrix(rng, k, dim, -4, 4) if k else []
        basis = saturated_row_basis(rows)
        full = extend_to_unimodular(basis, dim)
        assert abs(det(full)) == 1
        for i, b in enumerate(basis):
            assert tuple(full[i]) == tuple(b)
