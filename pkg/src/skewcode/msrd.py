"""Maximum sum-rank distance codes from skew Vandermonde blocks.

The generator matrix is M = [M_0 | ... | M_{q0-2}], one m-column block per
nonzero conjugacy class of F_{q0^m}; block ell, row j, column i holds
N_j(gamma^ell) * sigma^j(beta_i) with the beta's a basis over F_{q0}.  Any
nonzero message yields a codeword of sum-rank weight at least n - k + 1 with
n = (q0 - 1) * m, which meets the Singleton-type bound for the sum-rank
metric (the per-block rank deficiencies of a codeword correspond to
independent roots of a degree < k skew polynomial, so they cannot total k).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParams, BudgetExceeded, LengthMismatch
from .fields import FieldTower, make_tower, prime_power_decomposition
from .linalg import Matrix, flatten_matrix
from .skewpoly import power_function

BRUTE_FORCE_LIMIT = 10**6
FORMAT_VERSION = 1


@dataclass
class MsrdCode:
    tower: FieldTower
    k: int
    M: Matrix  # k x n generator over F_{q0^m}

    @property
    def n(self):
        return (self.tower.q0 - 1) * self.tower.m

    @property
    def partition(self):
        m = self.tower.m
        return [(i * m, (i + 1) * m) for i in range(self.tower.q0 - 1)]

    def to_json(self):
        return {
            "format_version": FORMAT_VERSION,
            "tower": self.tower.to_json(),
            "k": self.k,
            "generator": self.M.to_json(),
            "partition": [list(p) for p in self.partition],
        }


def construct_msrd(q0: int, m: int, k: int) -> MsrdCode:
    p, kk = prime_power_decomposition(q0)
    n = (q0 - 1) * m
    if not 1 <= k <= n:
        raise BadParams(f"need 1 <= k <= n = {n}")
    tower = make_tower(p, kk, m)
    betas = [tower.pow(tower.generator, i) for i in range(m)]  # power basis
    rows = []
    for j in range(k):
        row = []
        for ell in range(q0 - 1):
            nj = power_function(tower, j, tower.pow(tower.generator, ell))
            row.extend(tower.mul(nj, tower.frobenius(b, j)) for b in betas)
        rows.append(row)
    return MsrdCode(tower=tower, k=k, M=Matrix.from_rows(tower.ext, rows))


def sum_rank_weight(tower: FieldTower, v, partition) -> int:
    """Sum over partition parts of the F_{q0}-rank of the flattened part."""
    if partition and max(e for _, e in partition) > len(v):
        raise LengthMismatch("partition exceeds vector length")
    total = 0
    for s, e in partition:
        part = Matrix.from_rows(tower.ext, [list(v[s:e])])
        total += flatten_matrix(tower, part).rank()
    return total


def min_sum_rank_bruteforce(code: MsrdCode, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """Exact minimum sum-rank weight over all nonzero messages."""
    tower = code.tower
    q = tower.q
    if q**code.k - 1 > limit:
        raise BudgetExceeded(f"{q}^{code.k} messages exceed the {limit} budget")
    Mt = code.M.transpose()
    parts = code.partition
    best = None
    msg = [0] * code.k
    for codeno in range(1, q**code.k):
        rest = codeno
        for i in range(code.k):
            msg[i] = rest % q
            rest //= q
        w = sum_rank_weight(tower, Mt.matvec(msg), parts)
        if best is None or w < best:
            best = w
            if best == 1:
                break
    return best
