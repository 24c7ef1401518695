"""Parity-check constructions for maximally recoverable local reconstruction codes.

All variants share one shape: per-group local parity blocks A_i on a block
diagonal, plus a band of h global parity rows built from skew Vandermonde
data.  Column i of group ell contributes N_j(gamma^ell) * sigma^j(beta_i) to
global row j, so each local group lives in its own conjugacy class of the
extension field and the certification argument reduces to skew Vandermonde
rank.

Variants:
  main / main_improved      global parities inside the groups, q = q0^min{h,r-a}
  bch_a1                    a = 1, beta vectors from a BCH parity matrix,
                            q = q0^(s-1)
  global_outside_case1/2    h dedicated global-parity columns appended after
                            the groups, q = q0^h
  global_outside_a1_case1/2 the a = 1 refinement of the above, q = q0^(c-1)

Everything is deterministic: same parameters always produce the same bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    BadParams,
    DimensionMismatch,
    PreconditionViolated,
    RankDeficientH,
)
from .fields import (
    FieldTower,
    make_tower,
    prime_power_decomposition,
    smallest_prime_power_at_least,
)
from .linalg import Matrix
from .skewpoly import power_function

VARIANTS = (
    "main",
    "main_improved",
    "bch_a1",
    "global_outside_case1",
    "global_outside_case2",
    "global_outside_a1_case1",
    "global_outside_a1_case2",
)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class LrcParams:
    n: int
    r: int
    h: int
    a: int
    g: int
    h_local: int
    variant: str

    @property
    def global_outside(self) -> bool:
        return self.variant.startswith("global_outside")

    def to_json(self):
        return {
            "n": self.n,
            "r": self.r,
            "h": self.h,
            "a": self.a,
            "g": self.g,
            "h_local": self.h_local,
            "variant": self.variant,
        }

    @staticmethod
    def from_json(obj) -> "LrcParams":
        return LrcParams(
            n=obj["n"],
            r=obj["r"],
            h=obj["h"],
            a=obj["a"],
            g=obj["g"],
            h_local=obj["h_local"],
            variant=obj["variant"],
        )


@dataclass
class LrcCode:
    params: LrcParams
    tower: FieldTower
    H: Matrix  # (g*a + h) x n over the extension field
    groups: list  # per-group column ranges [(start, end), ...]
    global_cols: tuple | None  # (start, end) for global-outside, else None

    @property
    def n(self):
        return self.params.n

    def group_of(self, col: int):
        """Group index owning a column, or None for a global-parity column."""
        for i, (s, e) in enumerate(self.groups):
            if s <= col < e:
                return i
        return None

    def a_block(self, i: int) -> Matrix:
        s, e = self.groups[i]
        a = self.params.a
        return self.H.submatrix_rows(range(i * a, (i + 1) * a)).submatrix_cols(
            range(s, e)
        )

    def b_block(self, i: int) -> Matrix:
        s, e = self.groups[i]
        return self._band().submatrix_cols(range(s, e))

    def b_global(self) -> Matrix | None:
        if self.global_cols is None:
            return None
        s, e = self.global_cols
        return self._band().submatrix_cols(range(s, e))

    def _band(self) -> Matrix:
        ga = self.params.g * self.params.a
        return self.H.submatrix_rows(range(ga, ga + self.params.h))

    def to_json(self):
        layout = {
            "groups": [[s, e] for s, e in self.groups],
            "global_cols": list(self.global_cols) if self.global_cols else None,
        }
        return {
            "format_version": FORMAT_VERSION,
            "params": self.params.to_json(),
            "tower": self.tower.to_json(),
            "H": self.H.to_json(),
            "layout": layout,
        }

    @staticmethod
    def from_json(obj) -> "LrcCode":
        if obj.get("format_version") != FORMAT_VERSION:
            raise BadParams("unsupported code bundle format_version")
        params = LrcParams.from_json(obj["params"])
        tower = FieldTower.from_json(obj["tower"])
        H = Matrix.from_json(tower.ext, obj["H"])
        groups = [tuple(gr) for gr in obj["layout"]["groups"]]
        gc = obj["layout"]["global_cols"]
        return LrcCode(
            params=params,
            tower=tower,
            H=H,
            groups=groups,
            global_cols=tuple(gc) if gc else None,
        )


# ---------------------------------------------------------------------------
# shared pieces


def _resolve_q0(q0, bound):
    if q0 is None:
        q0, p, k = smallest_prime_power_at_least(bound)
        return q0, p, k
    p, k = prime_power_decomposition(q0)
    if q0 < bound:
        raise BadParams(f"q0 must be >= {bound}, got {q0}")
    return q0, p, k


def _band_block(tower, class_exp: int, betas, h: int) -> Matrix:
    """h x len(betas) block: row j, col i = N_j(gamma^class_exp) sigma^j(beta_i)."""
    gamma_l = tower.pow(tower.generator, class_exp)
    rows = []
    for j in range(h):
        nj = power_function(tower, j, gamma_l)
        rows.append([tower.mul(nj, tower.frobenius(b, j)) for b in betas])
    return Matrix.from_rows(tower.ext, rows)


def assemble_parity_matrix(tower, a_blocks, b_blocks, b_global=None) -> Matrix:
    """Block-diagonal A_i plus the bottom band [B_1 | ... | B_g | B_global]."""
    g = len(a_blocks)
    if len(b_blocks) not in (0, g):
        raise DimensionMismatch("need one B block per group or none")
    a = a_blocks[0].rows if g else 0
    h = b_blocks[0].rows if b_blocks else 0
    ncols = sum(blk.cols for blk in a_blocks)
    if b_global is not None:
        if b_global.rows != h:
            raise DimensionMismatch("B_global row count mismatch")
        ncols += b_global.cols
    H = Matrix.zero(tower.ext, g * a + h, ncols)
    col = 0
    for i, blk in enumerate(a_blocks):
        for rr in range(a):
            for cc in range(blk.cols):
                H[i * a + rr, col + cc] = blk[rr, cc]
        if b_blocks:
            bb = b_blocks[i]
            for rr in range(h):
                for cc in range(bb.cols):
                    H[g * a + rr, col + cc] = bb[rr, cc]
        col += blk.cols
    if b_global is not None:
        for rr in range(h):
            for cc in range(b_global.cols):
                H[g * a + rr, col + cc] = b_global[rr, cc]
    return H


def classical_vandermonde(F, k: int, points) -> Matrix:
    rows = [[F.pow(x, j) for x in points] for j in range(k)]
    return Matrix.from_rows(F, rows)


def is_mds(M: Matrix) -> bool:
    """Every set of `rows` columns of a wide matrix is independent."""
    if M.rows == 0:
        return True
    if M.cols < M.rows:
        return False
    for cols in _combinations(M.cols, M.rows):
        if M.submatrix_cols(cols).rank() < M.rows:
            return False
    return True


def _combinations(n, k):
    import itertools

    return itertools.combinations(range(n), k)


# ---------------------------------------------------------------------------
# main construction (global parities inside the local groups)


def construct_main(n, r, h, a, q0=None, h_local=None, improved=False) -> LrcCode:
    if r < 1 or n % r != 0:
        raise BadParams("r must divide n")
    if not 0 <= a < r:
        raise BadParams("need 0 <= a < r")
    if h < 0:
        raise BadParams("h must be non-negative")
    g = n // r
    if h_local is None:
        h_local = h
    if not 0 <= h_local <= h:
        raise BadParams("need 0 <= h_local <= h")
    bound = max(g + 1, r - 1 if improved else r)
    q0, p, k = _resolve_q0(q0, bound)
    m = min(h_local, r - a) if h else 0
    tower = make_tower(p, k, max(m, 1))
    base = tower.base

    if improved:
        # column 1 is special; the remaining columns use nonzero alphas first
        # so the local block stays MDS even at q0 = r - 1
        cands = list(range(1, q0)) + [0]
        alphas = cands[: r - 1]
        deg = max(m, 1)
        a_rows = []
        for j in range(a):
            row = [1 if j == 0 else 0]
            row += [base.pow(al, deg + a - 1 - j) for al in alphas]
            a_rows.append(row)
        betas = [0]
        if h:
            for al in alphas:
                betas.append(tower.lift([base.pow(al, m - 1 - j) for j in range(m)]))
    else:
        alphas = list(range(r))
        a_rows = [[base.pow(al, j) for al in alphas] for j in range(a)]
        betas = []
        if h:
            betas = [
                tower.lift([base.pow(al, a + j) for j in range(m)]) for al in alphas
            ]

    A = Matrix.from_rows(tower.ext, a_rows) if a else Matrix.zero(tower.ext, 0, r)
    b_blocks = [_band_block(tower, ell, betas, h) for ell in range(1, g + 1)] if h else []
    H = assemble_parity_matrix(tower, [A] * g, b_blocks)
    params = LrcParams(
        n=n,
        r=r,
        h=h,
        a=a,
        g=g,
        h_local=h_local,
        variant="main_improved" if improved else "main",
    )
    groups = [(i * r, (i + 1) * r) for i in range(g)]
    return LrcCode(params=params, tower=tower, H=H, groups=groups, global_cols=None)


def construct_main_improved(n, r, h, a, q0=None, h_local=None) -> LrcCode:
    return construct_main(n, r, h, a, q0=q0, h_local=h_local, improved=True)


# ---------------------------------------------------------------------------
# a = 1 construction with BCH-derived beta vectors


def bch_parity_matrix(r, d, q0) -> Matrix:
    """s x r parity-check matrix over F_{q0} of an [r, r-s, >=d] code.

    First row is all ones.  The remaining rows are theta^j for
    j in 1..d-2 with q0 not dividing j, each flattened into
    ceil(log_{q0} r) base-field rows; s = 1 + (d-2 - floor((d-2)/q0)) * that.
    """
    if d < 2 or r < 2:
        raise BadParams("need d >= 2 and r >= 2")
    if d > r + 1:
        raise BadParams("distance cannot exceed r + 1")
    p, k = prime_power_decomposition(q0)
    ell = max(1, math.ceil(math.log(r, q0)))
    while q0**ell < r:  # guard against float rounding in log
        ell += 1
    aux = make_tower(p, k, ell)
    thetas = list(range(r))
    rows = [[1] * r]
    for j in range(1, d - 1):
        if j % q0 == 0:
            continue
        powers = [aux.pow(th, j) for th in thetas]
        flat = [aux.flatten(x) for x in powers]
        for b in range(ell):
            rows.append([flat[i][b] for i in range(r)])
    return Matrix.from_rows(aux.base, rows)


def construct_a1_bch(n, r, h, q0=None, h_local=None) -> LrcCode:
    if r < 2 or n % r != 0:
        raise BadParams("r must divide n and be >= 2")
    g = n // r
    if h_local is None:
        h_local = h
    q0, p, k = _resolve_q0(q0, g + 1)
    if h == 0:
        # no band rows: each group keeps a single all-ones parity row
        tower = make_tower(p, k, 1)
        A = Matrix.from_rows(tower.ext, [[1] * r])
        H = assemble_parity_matrix(tower, [A] * g, [])
        params = LrcParams(n=n, r=r, h=0, a=1, g=g, h_local=0, variant="bch_a1")
        groups = [(i * r, (i + 1) * r) for i in range(g)]
        return LrcCode(params=params, tower=tower, H=H, groups=groups, global_cols=None)
    d = min(h, r - 1) + 2
    Hin = bch_parity_matrix(r, d, q0)
    s = Hin.rows
    tower = make_tower(p, k, s - 1)
    betas = [tower.lift([Hin[j, i] for j in range(1, s)]) for i in range(r)]
    A = Matrix.from_rows(tower.ext, [[1] * r])
    b_blocks = [_band_block(tower, ell, betas, h) for ell in range(1, g + 1)]
    H = assemble_parity_matrix(tower, [A] * g, b_blocks)
    params = LrcParams(n=n, r=r, h=h, a=1, g=g, h_local=h_local, variant="bch_a1")
    groups = [(i * r, (i + 1) * r) for i in range(g)]
    return LrcCode(params=params, tower=tower, H=H, groups=groups, global_cols=None)


# ---------------------------------------------------------------------------
# constructions with global parities outside the local groups


def _mds_seed(F, k, n0) -> Matrix:
    """k x n0 MDS matrix over F: Vandermonde, extended by e_k at n0 = |F|+1."""
    if n0 <= F.size:
        return classical_vandermonde(F, k, list(range(n0)))
    if n0 == F.size + 1:
        V = classical_vandermonde(F, k, list(range(F.size)))
        ext_col = Matrix.from_rows(F, [[1 if i == k - 1 else 0] for i in range(k)])
        return V.hstack(ext_col)
    raise BadParams(f"field of size {F.size} cannot host {n0} MDS columns")


def _search_mds_rows(F, E, a, r, t, cap=4096):
    """a independent row-space vectors of E, zero on the last t columns,
    whose left r-column block is an a x r MDS matrix.

    Candidates are enumerated in lexicographic coefficient order over a basis
    of the admissible row subspace, so the result is deterministic.
    """
    k = E.rows
    if t == 0:
        basis = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    else:
        right_t = E.submatrix_cols(range(r, r + t)).transpose()
        basis = right_t.nullspace()
    cands = []
    size = F.size
    total = size ** len(basis)
    Et = E.transpose()
    for v in range(1, min(total, cap + 1)):
        coeffs, rest = [0] * len(basis), v
        for i in range(len(basis)):
            coeffs[i] = rest % size
            rest //= size
        lam = [0] * k
        for c, bvec in zip(coeffs, basis):
            if c:
                for i in range(k):
                    lam[i] = F.add(lam[i], F.mul(c, bvec[i]))
        cands.append((lam, Et.matvec(lam)))

    chosen = []

    def ok(stack_rows):
        left = Matrix.from_rows(F, [row[:r] for row in stack_rows])
        return is_mds(left)

    def backtrack(start):
        if len(chosen) == a:
            return True
        for idx in range(start, len(cands)):
            lam, row = cands[idx]
            trial = [c[1] for c in chosen] + [row]
            if Matrix.from_rows(F, trial).rank() < len(trial):
                continue
            if not ok(trial):
                continue
            chosen.append((lam, row))
            if backtrack(idx + 1):
                return True
            chosen.pop()
        return False

    if a and not backtrack(0):
        raise BadParams("no admissible local parity rows found in the row space")
    return [c[1] for c in chosen]


def _scaled_vandermonde_rows(F, a, left_points, right_points, t):
    """Rows j = evaluations of z(x) * x^j on the left points, zero on the
    right block, where z vanishes on the right points.  The left block is a
    Vandermonde with nonzero column scalings z(p), hence MDS."""
    rows = []
    for j in range(a):
        row = []
        for p in left_points:
            z = 1
            for q in right_points:
                z = F.mul(z, F.sub(p, q))
            row.append(F.mul(z, F.pow(p, j)))
        rows.append(row + [0] * t)
    return rows


def _build_h0(F, a, h, r, t) -> Matrix:
    """(a+h) x (r+t) MDS matrix whose top a rows are zero on the last t
    columns and whose top-left a x r block is itself MDS."""
    k = a + h
    E = _mds_seed(F, k, r + t)
    if a == 0:
        rows = []
    elif t == 0 and r <= F.size:
        rows = [E.row(i) for i in range(a)]  # plain Vandermonde top block
    elif t >= 1:
        # candidate polynomials z(x) * x^j vanish on the right-block points;
        # the extended unit column (present iff r + t = |F| + 1) also reads
        # zero on them because their degree t - 1 + j stays below k - 1
        left_points = list(range(r))
        right_points = list(range(r, min(r + t, F.size)))
        if t - 1 + a - 1 > k - 2 and r + t == F.size + 1:
            raise BadParams("degree room exhausted for the zero-corner rows")
        rows = _scaled_vandermonde_rows(F, a, left_points, right_points, t)
    else:
        # t = 0 but r = |F| + 1: no structured choice, search the row space
        rows = _search_mds_rows(F, E, a, r, t)
    # complete with rows of E itself, keeping full rank, to preserve MDS-ness
    stack = Matrix.from_rows(F, rows) if rows else Matrix.zero(F, 0, r + t)
    for i in range(k):
        if stack.rows == k:
            break
        cand = stack.vstack(E.submatrix_rows([i]))
        if cand.rank() == cand.rows:
            stack = cand
    if stack.rows != k:
        raise BadParams("could not complete H0 to full rank")
    return stack


def construct_global_outside(n, r, h, a, case, q0=None, h_local=None) -> LrcCode:
    if case not in (1, 2):
        raise BadParams("case must be 1 or 2")
    if r < 1 or (n - h) % r != 0:
        raise BadParams("n must equal g*r + h")
    g = (n - h) // r
    if g < 1:
        raise BadParams("need at least one local group")
    if not 0 <= a < r:
        raise BadParams("need 0 <= a < r")
    if h > r - a:
        raise PreconditionViolated("these constructions require h <= r - a")
    if h_local is None:
        h_local = h
    variant = f"global_outside_case{case}"
    if case == 1:
        t = 0
        bound = max(g + 2, r - 1)
    else:
        t = math.ceil((h - 1) / g) if h else 0
        bound = max(g + 1, r + t - 1)
    q0, p, k = _resolve_q0(q0, bound)
    params = LrcParams(n=n, r=r, h=h, a=a, g=g, h_local=h_local, variant=variant)
    groups = [(i * r, (i + 1) * r) for i in range(g)]
    if h == 0:
        tower = make_tower(p, k, 1)
        base = tower.base
        A = Matrix.from_rows(
            tower.ext, [[base.pow(al, j) for al in range(r)] for j in range(a)]
        ) if a else Matrix.zero(tower.ext, 0, r)
        H = assemble_parity_matrix(tower, [A] * g, [])
        return LrcCode(params=params, tower=tower, H=H, groups=groups, global_cols=None)

    tower = make_tower(p, k, h)
    base = tower.base
    H0 = _build_h0(base, a, h, r, t)
    A = (
        Matrix.from_rows(tower.ext, [H0.row(j)[:r] for j in range(a)])
        if a
        else Matrix.zero(tower.ext, 0, r)
    )
    betas = [tower.lift([H0[a + j, i] for j in range(h)]) for i in range(r)]
    b_blocks = [_band_block(tower, ell, betas, h) for ell in range(1, g + 1)]

    if case == 1:
        tildes = [tower.lift([1 if j == i else 0 for j in range(h)]) for i in range(h)]
        b_global = _band_block(tower, g + 1, tildes, h)
    else:
        tildes = [tower.lift([H0[a + j, r + i] for j in range(h)]) for i in range(t)]
        b_global = _fold_in_global(tower, tildes, g, h, t)

    H = assemble_parity_matrix(tower, [A] * g, b_blocks, b_global)
    return LrcCode(
        params=params, tower=tower, H=H, groups=groups, global_cols=(g * r, g * r + h)
    )


def _fold_in_global(tower, tildes, g, h, t) -> Matrix:
    """Case-2 B_global: band blocks of the folded-in tilde columns per
    conjugacy class, then the unit column e_h; keep the first h columns."""
    wide = Matrix.zero(tower.ext, h, 0)
    for ell in range(1, g + 1):
        blk = _band_block(tower, ell, tildes, h)
        wide = wide.hstack(blk) if wide.cols else blk
    e_h = Matrix.from_rows(tower.ext, [[1 if i == h - 1 else 0] for i in range(h)])
    wide = wide.hstack(e_h) if wide.cols else e_h
    if wide.cols < h:
        raise BadParams("g*t + 1 < h: not enough global columns to fold in")
    return wide.submatrix_cols(range(h))


def _a1_inner_parity(F, q0, r, t, d) -> Matrix:
    """c x (r+t) parity matrix, first row = r ones then t zeros, any d-1
    columns independent, rows independent.

    Tries the BCH family first; when its row count exceeds n0 or no row-space
    vector of weight exactly r exists, falls back to an invertible square
    parity matrix (the zero code, whose distance condition holds vacuously).
    """
    n0 = r + t
    if t == 0:
        M = bch_parity_matrix(r, d, q0)
        if M.rows <= n0 and M.rank() == M.rows:
            return M
        return _square_inner(F, r, t)
    if d <= n0 + 1:
        M = bch_parity_matrix(n0, d, q0)
        if M.rows <= n0 and M.rank() == M.rows:
            fixed = _fix_first_row(F, M, r, t)
            if fixed is not None:
                return fixed
    return _square_inner(F, r, t)


def _square_inner(F, r, t) -> Matrix:
    n0 = r + t
    stack = Matrix.from_rows(F, [[1] * r + [0] * t])
    for i in range(n0):
        if stack.rows == n0:
            break
        e = [[1 if j == i else 0 for j in range(n0)]]
        cand = stack.vstack(Matrix.from_rows(F, e))
        if cand.rank() == cand.rows:
            stack = cand
    return stack


def _fix_first_row(F, M, r, t):
    """Search M's row space for a vector of weight exactly r; permute the
    columns so its support comes first, scale the support to ones, and stack
    the remaining rows.  Returns None when no such vector exists."""
    n0 = r + t
    size = F.size
    Mt = M.transpose()
    for v in range(1, size**M.rows):
        coeffs, rest = [0] * M.rows, v
        for i in range(M.rows):
            coeffs[i] = rest % size
            rest //= size
        w = Mt.matvec(coeffs)
        support = [i for i, x in enumerate(w) if x]
        if len(support) != r:
            continue
        perm = support + [i for i in range(n0) if i not in support]
        scale = [F.inv(w[i]) for i in support] + [1] * t
        rows = [[1] * r + [0] * t]
        stack = Matrix.from_rows(F, rows)
        for i in range(M.rows):
            row = [F.mul(M[i, perm[j]], scale[j]) for j in range(n0)]
            cand = stack.vstack(Matrix.from_rows(F, [row]))
            if cand.rank() == cand.rows:
                stack = cand
        if stack.rows == M.rows:
            return stack
    return None


def construct_global_outside_a1(n, r, h, case, q0=None, h_local=None) -> LrcCode:
    if case not in (1, 2):
        raise BadParams("case must be 1 or 2")
    if r < 2 or (n - h) % r != 0:
        raise BadParams("n must equal g*r + h")
    g = (n - h) // r
    if h > r - 1:
        raise PreconditionViolated("needs h <= r - 1")
    if h_local is None:
        h_local = h
    if case == 1:
        t = 0
        bound = g + 2
    else:
        t = math.ceil((h - 1) / g) if h else 0
        bound = g + 1
    q0, p, k = _resolve_q0(q0, bound)
    variant = f"global_outside_a1_case{case}"
    params = LrcParams(n=n, r=r, h=h, a=1, g=g, h_local=h_local, variant=variant)
    groups = [(i * r, (i + 1) * r) for i in range(g)]
    if h == 0:
        code = construct_global_outside(n, r, 0, 1, case=1, q0=max(q0, r - 1, g + 2))
        return LrcCode(
            params=params,
            tower=code.tower,
            H=code.H,
            groups=groups,
            global_cols=None,
        )
    aux = make_tower(p, k, 1)
    H0 = _a1_inner_parity(aux.base, q0, r, t, h + 2)
    c = H0.rows
    if c - 1 < h:
        raise BadParams("inner code codimension too small for h global parities")
    tower = make_tower(p, k, c - 1)
    A = Matrix.from_rows(tower.ext, [[1] * r])
    betas = [tower.lift([H0[j, i] for j in range(1, c)]) for i in range(r)]
    b_blocks = [_band_block(tower, ell, betas, h) for ell in range(1, g + 1)]
    if case == 1:
        tildes = [
            tower.lift([1 if j == i else 0 for j in range(c - 1)]) for i in range(h)
        ]
        b_global = _band_block(tower, g + 1, tildes, h)
    else:
        tildes = [tower.lift([H0[j, r + i] for j in range(1, c)]) for i in range(t)]
        b_global = _fold_in_global(tower, tildes, g, h, t)
    H = assemble_parity_matrix(tower, [A] * g, b_blocks, b_global)
    return LrcCode(
        params=params, tower=tower, H=H, groups=groups, global_cols=(g * r, g * r + h)
    )


# ---------------------------------------------------------------------------
# dispatch + encoding


def construct(variant, n, r, h, a, q0=None, h_local=None) -> LrcCode:
    if variant == "main":
        return construct_main(n, r, h, a, q0=q0, h_local=h_local)
    if variant == "main_improved":
        return construct_main_improved(n, r, h, a, q0=q0, h_local=h_local)
    if variant == "bch_a1":
        if a != 1:
            raise BadParams("bch_a1 requires a = 1")
        return construct_a1_bch(n, r, h, q0=q0, h_local=h_local)
    if variant in ("global_outside_case1", "global_outside_case2"):
        case = int(variant[-1])
        return construct_global_outside(n, r, h, a, case, q0=q0, h_local=h_local)
    if variant in ("global_outside_a1_case1", "global_outside_a1_case2"):
        if a != 1:
            raise BadParams(f"{variant} requires a = 1")
        case = int(variant[-1])
        return construct_global_outside_a1(n, r, h, case, q0=q0, h_local=h_local)
    raise BadParams(f"unknown variant {variant!r}; choose from {VARIANTS}")


def systematic_positions(code: LrcCode):
    """(info_positions, parity_positions, reduced H) from the deterministic
    leftmost-pivot echelon form; parity positions are the pivot columns."""
    red = code.H.copy()
    pivots = red.echelonize()
    if len(pivots) != code.H.rows:
        raise RankDeficientH("parity-check matrix is not full row rank")
    info = [c for c in range(code.n) if c not in pivots]
    return info, pivots, red


def encode(code: LrcCode, message) -> list:
    """Systematic encoding: message symbols land on the non-pivot columns."""
    info, pivots, red = systematic_positions(code)
    if len(message) != len(info):
        raise DimensionMismatch(f"message must have {len(info)} symbols")
    tw = code.tower
    word = [0] * code.n
    for pos, sym in zip(info, message):
        word[pos] = sym
    for row, pc in enumerate(pivots):
        acc = 0
        for j, pos in enumerate(info):
            if word[pos] and red[row, pos]:
                acc = tw.add(acc, tw.mul(red[row, pos], word[pos]))
        word[pc] = tw.neg(acc)
    return word


def check_codeword(code: LrcCode, word) -> bool:
    return all(v == 0 for v in code.H.matvec(word))
