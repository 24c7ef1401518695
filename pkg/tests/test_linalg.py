"""Exact linear algebra and the skew Vandermonde / Moore builders."""

from skewcode.fields import make_tower
from skewcode.linalg import Matrix, flatten_matrix, moore_matrix, skew_vandermonde
from skewcode.rng import CounterRng
from skewcode.skewpoly import SkewPolynomial, conjugacy_class, evaluate


def rand_matrix(tower, rng, rows, cols):
    return Matrix.from_rows(
        tower.ext,
        [[tower.random_element(rng) for _ in range(cols)] for _ in range(rows)],
    )


def test_rank_basics():
    tw = make_tower(7, 1, 2)
    assert Matrix.identity(tw.ext, 4).rank() == 4
    assert Matrix.zero(tw.ext, 3, 5).rank() == 0


def test_rank_transpose_and_nullspace():
    tw = make_tower(7, 1, 3)
    rng = CounterRng(31)
    for _ in range(50):
        M = rand_matrix(tw, rng, 3, 5)
        assert M.rank() == M.transpose().rank()
        ns = M.nullspace()
        assert len(ns) == M.cols - M.rank()
        for v in ns:
            assert all(x == 0 for x in M.matvec(v))


def test_solve_and_inverse():
    tw = make_tower(7, 1, 3)
    rng = CounterRng(32)
    solved = 0
    for _ in range(60):
        M = rand_matrix(tw, rng, 4, 4)
        rhs = [tw.random_element(rng) for _ in range(4)]
        inv = M.inverse()
        if inv is None:
            continue
        solved += 1
        assert M.matmul(inv).entries == Matrix.identity(tw.ext, 4).entries
        x = M.solve(rhs)
        assert M.matvec(x) == rhs
    assert solved > 30


def test_flatten_matrix():
    tw = make_tower(2, 1, 3)
    fl = flatten_matrix(tw, Matrix.from_rows(tw.ext, [[0]]))
    assert fl.rows == 3 and fl.cols == 1 and fl.rank() == 0
    g = tw.generator
    row = Matrix.from_rows(tw.ext, [[1, g, tw.pow(g, 2)]])
    assert flatten_matrix(tw, row).rank() == 3  # power basis is independent
    dep = Matrix.from_rows(tw.ext, [[g, g]])
    assert flatten_matrix(tw, dep).rank() == 1


def test_vandermonde_evaluation_identity():
    tw = make_tower(7, 1, 3)
    rng = CounterRng(33)
    pts = [tw.random_element(rng) for _ in range(5)]
    V = skew_vandermonde(tw, 4, pts)
    assert V.row(0) == [1] * 5
    for _ in range(50):
        coeffs = [tw.random_element(rng) for _ in range(4)]
        f = SkewPolynomial.from_coeffs(tw, coeffs)
        evals = V.transpose().matvec(coeffs)
        assert evals == [evaluate(f, a) for a in pts]


def test_vandermonde_rank_criteria():
    tw = make_tower(7, 1, 3)
    rng = CounterRng(34)
    g = tw.generator
    full = 0
    for _ in range(200):
        # distinct conjugacy classes: gamma^i for distinct i mod q0-1
        ks = rng.sample(tw.q0 - 1, 3)
        pts = [tw.pow(g, k) for k in ks]
        assert len({conjugacy_class(tw, a) for a in pts}) == 3
        if skew_vandermonde(tw, 3, pts).rank() == 3:
            full += 1
    assert full == 200
    # dependent points inside one class drop the rank
    for _ in range(200):
        y = tw.random_nonzero(rng)
        c = 1 + rng.randbelow(tw.q0 - 1)
        a = tw.random_nonzero(rng)
        from skewcode.skewpoly import conjugate

        pts = [conjugate(tw, a, y), conjugate(tw, a, tw.mul(tw.embed(c), y))]
        assert skew_vandermonde(tw, 2, pts).rank() < 2


def test_moore_matrix_rank():
    tw = make_tower(7, 1, 3)
    g = tw.generator
    assert moore_matrix(tw, [1]).rank() == 1
    basis = [1, g, tw.pow(g, 2)]
    M = moore_matrix(tw, basis)
    assert M.rank() == 3
    rng = CounterRng(35)
    for _ in range(200):
        x = tw.random_nonzero(rng)
        c = 1 + rng.randbelow(tw.q0 - 1)
        dep = moore_matrix(tw, [x, tw.mul(tw.embed(c), x)])
        assert dep.rank() == 1
        # Moore rank always equals the flattened F_{q0}-rank of the points
        pts = [tw.random_element(rng) for _ in range(3)]
        flat = flatten_matrix(tw, Matrix.from_rows(tw.ext, [pts]))
        assert moore_matrix(tw, pts).rank() == flat.rank()


def test_matrix_json_roundtrip():
    tw = make_tower(7, 1, 2)
    rng = CounterRng(36)
    M = rand_matrix(tw, rng, 3, 4)
    assert Matrix.from_json(tw.ext, M.to_json()).entries == M.entries
