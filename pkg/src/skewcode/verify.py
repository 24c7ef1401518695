"""Certification of maximal recoverability and erasure decoding.

An erasure pattern is admissible when it erases exactly `a` symbols in each
local group plus `h` extra symbols anywhere (optionally capped so no group
loses more than a + h_local in total).  The code is maximally recoverable
when every admissible pattern's column submatrix of H has full column rank.

The exhaustive verifier walks patterns as (per-group a-subset, extras)
choices.  For each a-subset it eliminates the local rows once via a Schur
complement, after which each extras combination reduces to an h x h rank
test over the extension field; this is what makes million-pattern runs
feasible in plain Python.  The elimination is an exact equivalence, not a
heuristic, as long as the selected local columns are independent; if they
are not (possible only for corrupted inputs), the verifier falls back to a
direct rank computation for the affected patterns.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field

from .construct import LrcCode, is_mds
from .errors import (
    BudgetExceeded,
    InadmissiblePattern,
    NotACodeword,
    Uncorrectable,
)
from .linalg import Matrix
from .rng import CounterRng

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class ErasurePattern:
    columns: tuple

    def to_json(self):
        return list(self.columns)


@dataclass
class VerificationReport:
    mode: str
    patterns_checked: int
    failures: list
    mds_failures: list
    elapsed: float

    @property
    def certified(self) -> bool:
        return not self.failures and not self.mds_failures

    def to_json(self):
        return {
            "mode": self.mode,
            "patterns_checked": self.patterns_checked,
            "failures": [f.to_json() for f in self.failures],
            "mds_failures": list(self.mds_failures),
            "elapsed_seconds": self.elapsed,
            "certified": self.certified,
        }


def pattern_count(code: LrcCode, h_local=None) -> int:
    """Number of (a-subsets, extras) choices; an upper bound when h_local
    caps are active, exact otherwise."""
    p = code.params
    return math.comb(p.r, p.a) ** p.g * math.comb(p.n - p.g * p.a, p.h)


def enumerate_patterns(code: LrcCode, h_local=None):
    """Yield every admissible pattern, one per (a-subsets, extras) choice."""
    p = code.params
    if h_local is None:
        h_local = p.h_local
    group_cols = [list(range(s, e)) for s, e in code.groups]
    for subsets in itertools.product(
        *(itertools.combinations(cols, p.a) for cols in group_cols)
    ):
        selected = set(itertools.chain.from_iterable(subsets))
        rest = [c for c in range(p.n) if c not in selected]
        for extras in itertools.combinations(rest, p.h):
            if h_local < p.h and _violates_cap(code, extras, p.a, h_local):
                continue
            yield ErasurePattern(tuple(sorted(selected.union(extras))))


def _violates_cap(code, extras, a, h_local):
    per_group = {}
    for c in extras:
        gi = code.group_of(c)
        if gi is not None:
            per_group[gi] = per_group.get(gi, 0) + 1
            if per_group[gi] > h_local:
                return True
    return False


def is_admissible(code: LrcCode, columns, h_local=None) -> bool:
    p = code.params
    if h_local is None:
        h_local = p.h_local
    cols = set(columns)
    if len(cols) != len(columns) or len(cols) != p.g * p.a + p.h:
        return False
    if any(not 0 <= c < p.n for c in cols):
        return False
    counts = [0] * p.g
    for c in cols:
        gi = code.group_of(c)
        if gi is not None:
            counts[gi] += 1
    return all(p.a <= cnt <= p.a + h_local for cnt in counts)


def check_pattern(code: LrcCode, pattern) -> bool:
    """True iff the erased columns of H are linearly independent."""
    cols = pattern.columns if isinstance(pattern, ErasurePattern) else tuple(pattern)
    if not is_admissible(code, cols):
        raise InadmissiblePattern(f"pattern {cols} does not fit the layout")
    sub = code.H.submatrix_cols(sorted(cols))
    return sub.rank() == len(cols)


# ---------------------------------------------------------------------------
# exhaustive verifier


def _group_reductions(code: LrcCode):
    """For each group and each a-subset of its columns: the inverse of the
    local block on the subset and the Schur-reduced band columns of the
    remaining group columns.  Returns None entries for singular subsets."""
    p = code.params
    tw = code.tower
    band = code.H.submatrix_rows(range(p.g * p.a, p.g * p.a + p.h))
    out = []
    for gi, (s, e) in enumerate(code.groups):
        A = code.a_block(gi)
        B = band.submatrix_cols(range(s, e))
        per_subset = {}
        for subset in itertools.combinations(range(p.r), p.a):
            Asub = A.submatrix_cols(subset)
            inv = Asub.inverse() if p.a else Matrix.zero(tw.ext, 0, 0)
            if p.a and inv is None:
                per_subset[subset] = None
                continue
            reduced = {}
            for j in range(p.r):
                if j in subset:
                    continue
                col = [B[row, j] for row in range(p.h)]
                if p.a:
                    coeffs = inv.matvec([A[row, j] for row in range(p.a)])
                    for krow in range(p.h):
                        acc = col[krow]
                        for kk, c in enumerate(coeffs):
                            if c:
                                acc = tw.sub(acc, tw.mul(c, B[krow, subset[kk]]))
                        col[krow] = acc
                reduced[s + j] = tuple(col)
            per_subset[subset] = reduced
        out.append(per_subset)
    return out


def _columns_full_rank(F, cols, h) -> bool:
    """Rank test of the h x h matrix with the given columns (h small)."""
    if h == 1:
        return cols[0][0] != 0
    if h == 2:
        (a, c), (b, d) = cols  # columns (a,c) and (b,d)
        return F.sub(F.mul(a, d), F.mul(b, c)) != 0
    if h == 3:
        (a, d, g), (b, e, hh), (c, f, i) = cols
        det = F.mul(a, F.sub(F.mul(e, i), F.mul(f, hh)))
        det = F.sub(det, F.mul(b, F.sub(F.mul(d, i), F.mul(f, g))))
        det = F.add(det, F.mul(c, F.sub(F.mul(d, hh), F.mul(e, g))))
        return det != 0
    m = Matrix.from_rows(F, [[col[r] for col in cols] for r in range(h)])
    return m.rank() == h


def is_maximally_recoverable(
    code: LrcCode,
    mode: str = "exhaustive",
    samples: int = 10000,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    h_local=None,
    max_failures: int = 16,
) -> VerificationReport:
    start = time.perf_counter()
    p = code.params
    if h_local is None:
        h_local = p.h_local
    mds_failures = [gi for gi in range(p.g) if not is_mds(code.a_block(gi))]
    if mode == "sampled":
        report = _verify_sampled(code, samples, seed, h_local, max_failures)
    elif mode == "exhaustive":
        total = pattern_count(code)
        if total > budget:
            raise BudgetExceeded(
                f"{total} patterns exceed budget {budget}; use sampled mode"
            )
        report = _verify_exhaustive(code, h_local, max_failures)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    report.mds_failures = mds_failures
    report.elapsed = time.perf_counter() - start
    return report


def _verify_exhaustive(code, h_local, max_failures):
    p = code.params
    F = code.tower.ext
    h = p.h
    failures = []
    checked = 0
    band = code.H.submatrix_rows(range(p.g * p.a, p.g * p.a + h))
    global_cols = {}
    if code.global_cols:
        s, e = code.global_cols
        for c in range(s, e):
            global_cols[c] = tuple(band[row, c] for row in range(h))
    reductions = _group_reductions(code)
    group_subsets = [sorted(r.keys()) for r in reductions]
    capped = h_local < h

    for combo in itertools.product(*group_subsets):
        selected_cols = []
        singular = False
        candidates = []  # (col, reduced band column, group index)
        for gi, subset in enumerate(combo):
            s0 = code.groups[gi][0]
            selected_cols.extend(s0 + j for j in subset)
            red = reductions[gi][subset]
            if red is None:
                singular = True
                continue
            for col, vec in sorted(red.items()):
                candidates.append((col, vec, gi))
        for col, vec in sorted(global_cols.items()):
            candidates.append((col, vec, None))

        if singular:
            # corrupted local block: no Schur shortcut, test patterns directly
            sel = set(selected_cols)
            rest = [c for c in range(p.n) if c not in sel]
            for extra_cols in itertools.combinations(rest, h):
                cols = sorted(selected_cols + list(extra_cols))
                if capped:
                    counts = {}
                    hit = False
                    for c in extra_cols:
                        gi = code.group_of(c)
                        if gi is not None:
                            counts[gi] = counts.get(gi, 0) + 1
                            if counts[gi] > h_local:
                                hit = True
                                break
                    if hit:
                        continue
                checked += 1
                if code.H.submatrix_cols(cols).rank() < len(cols):
                    failures.append(ErasurePattern(tuple(cols)))
                    if len(failures) >= max_failures:
                        return VerificationReport("exhaustive", checked, failures, [], 0.0)
            continue

        if h == 0:
            checked += 1
            continue
        for extras in itertools.combinations(range(len(candidates)), h):
            if capped and _cap_hit(candidates, extras, h_local):
                continue
            checked += 1
            if not _columns_full_rank(F, [candidates[i][1] for i in extras], h):
                pat = ErasurePattern(
                    tuple(sorted(selected_cols + [candidates[i][0] for i in extras]))
                )
                failures.append(pat)
                if len(failures) >= max_failures:
                    return VerificationReport("exhaustive", checked, failures, [], 0.0)
    return VerificationReport("exhaustive", checked, failures, [], 0.0)


def _cap_hit(candidates, extras, h_local):
    counts = {}
    for i in extras:
        gi = candidates[i][2]
        if gi is not None:
            counts[gi] = counts.get(gi, 0) + 1
            if counts[gi] > h_local:
                return True
    return False


def _verify_sampled(code, samples, seed, h_local, max_failures):
    p = code.params
    rng = CounterRng(seed)
    failures = []
    checked = 0
    for _ in range(samples):
        while True:
            cols = set()
            for s, e in code.groups:
                for idx in rng.sample(p.r, p.a):
                    cols.add(s + idx)
            rest = [c for c in range(p.n) if c not in cols]
            for idx in rng.sample(len(rest), p.h):
                cols.add(rest[idx])
            if is_admissible(code, cols, h_local):
                break
        checked += 1
        pat = ErasurePattern(tuple(sorted(cols)))
        sub = code.H.submatrix_cols(sorted(cols))
        if sub.rank() < len(cols):
            failures.append(pat)
            if len(failures) >= max_failures:
                break
    return VerificationReport(f"sampled({samples},{seed})", checked, failures, [], 0.0)


# ---------------------------------------------------------------------------
# decoding


def decode_erasures(code: LrcCode, received):
    word, _ = decode_with_stats(code, received)
    return word


def decode_with_stats(code: LrcCode, received):
    """Fill in erased (None) positions of a punctured codeword.

    When every erasure is local (at most `a` per group, none in the global
    parity columns) each affected group is repaired from its own local
    parity rows, reading only that group's surviving symbols.  Otherwise the
    full parity-check system is solved.  Stats report the repair path and
    how many symbols were read.
    """
    p = code.params
    tw = code.tower
    n = p.n
    if len(received) != n:
        raise Uncorrectable(f"received word must have {n} entries")
    erased = [i for i, v in enumerate(received) if v is None]
    stats = {"erased": len(erased), "local": False, "symbols_read": 0, "groups": []}
    if not erased:
        if not all(v == 0 for v in code.H.matvec(received)):
            raise NotACodeword("received word fails the parity checks")
        return list(received), stats

    per_group = {}
    outside = []
    for c in erased:
        gi = code.group_of(c)
        if gi is None:
            outside.append(c)
        else:
            per_group.setdefault(gi, []).append(c)

    local_ok = not outside and all(len(v) <= p.a for v in per_group.values()) and p.a
    word = list(received)
    if local_ok:
        stats["local"] = True
        for gi, cols in sorted(per_group.items()):
            s, e = code.groups[gi]
            A = code.a_block(gi)
            idxs = [c - s for c in cols]
            sub = A.submatrix_cols(idxs)
            rhs = [0] * p.a
            read = 0
            for j in range(p.r):
                if s + j in cols:
                    continue
                v = received[s + j]
                read += 1
                for row in range(p.a):
                    if A[row, j] and v:
                        rhs[row] = tw.sub(rhs[row], tw.mul(A[row, j], v))
            x = sub.solve(rhs)
            if x is None or sub.rank() < len(idxs):
                raise Uncorrectable(f"local block of group {gi} cannot repair")
            for c, v in zip(cols, x):
                word[c] = v
            stats["symbols_read"] += read
            stats["groups"].append({"group": gi, "erased": len(cols), "read": read})
        return word, stats

    sub = code.H.submatrix_cols(erased)
    rhs = [0] * code.H.rows
    read = 0
    for j in range(n):
        if received[j] is None:
            continue
        v = received[j]
        read += 1
        if v:
            for row in range(code.H.rows):
                if code.H[row, j]:
                    rhs[row] = tw.sub(rhs[row], tw.mul(code.H[row, j], v))
    if sub.rank() < len(erased):
        raise Uncorrectable("erased columns are dependent; pattern not correctable")
    x = sub.solve(rhs)
    if x is None:
        raise NotACodeword("parity system inconsistent with received symbols")
    for c, v in zip(erased, x):
        word[c] = v
    stats["symbols_read"] = read
    return word, stats


# ---------------------------------------------------------------------------
# independent oracle


def bruteforce_mr_check(code: LrcCode, h_local=None):
    """First-principles MR check: classify ALL column subsets of size
    g*a + h as admissible or not, rank-test the admissible ones.  Intended
    for n <= 12 cross-checks of the structured verifier."""
    p = code.params
    if p.n > 12:
        raise BudgetExceeded("brute-force oracle is limited to n <= 12")
    size = p.g * p.a + p.h
    admissible = []
    failures = []
    for cols in itertools.combinations(range(p.n), size):
        if not is_admissible(code, cols, h_local):
            continue
        admissible.append(cols)
        sub = code.H.submatrix_cols(list(cols))
        if sub.rank() < size:
            failures.append(ErasurePattern(cols))
    return {"admissible": admissible, "failures": failures}
