"""Skew polynomial ring K[t; sigma] over K = F_{q0^m}, sigma the q0-Frobenius.

Coefficients are written on the left, and multiplication follows the twist
rule t*a = sigma(a)*t.  Over finite fields this endomorphism type is the
only skew polynomial ring there is, so no derivation parameter is exposed.

The zero polynomial has no degree; its degree() is None and every degree
comparison special-cases it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConjugateByZero,
    DivisionByZeroPolynomial,
    FieldTooLarge,
    TowerMismatch,
    ZeroPolynomial,
)
from .fields import FieldTower

ROOT_SCAN_LIMIT = 1 << 20


@dataclass(frozen=True)
class SkewPolynomial:
    tower: FieldTower
    coeffs: tuple  # coefficient of t^i at index i; trailing coefficient nonzero

    @staticmethod
    def from_coeffs(tower, coeffs) -> "SkewPolynomial":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return SkewPolynomial(tower, tuple(c))

    @staticmethod
    def zero(tower):
        return SkewPolynomial(tower, ())

    @staticmethod
    def constant(tower, c):
        return SkewPolynomial.from_coeffs(tower, [c])

    @staticmethod
    def one(tower):
        return SkewPolynomial(tower, (1,))

    @staticmethod
    def t_minus(tower, a):
        """The linear polynomial t - a."""
        return SkewPolynomial(tower, (tower.neg(a), 1))

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if self.tower is not other.tower:
            raise TowerMismatch("operands live in different towers")

    def __add__(self, other):
        self._check(other)
        tw = self.tower
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            x = self.coeffs[i] if i < len(self.coeffs) else 0
            y = other.coeffs[i] if i < len(other.coeffs) else 0
            out.append(tw.add(x, y))
        return SkewPolynomial.from_coeffs(tw, out)

    def __neg__(self):
        tw = self.tower
        return SkewPolynomial(tw, tuple(tw.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return skew_mul(self, other)

    def __repr__(self):
        if not self.coeffs:
            return "SkewPoly(0)"
        terms = " + ".join(f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c)
        return f"SkewPoly({terms})"


def skew_mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    """Product in K[t;sigma]: (f_i t^i)(g_j t^j) = f_i sigma^i(g_j) t^(i+j)."""
    f._check(g)
    tw = f.tower
    if f.is_zero() or g.is_zero():
        return SkewPolynomial.zero(tw)
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, fi in enumerate(f.coeffs):
        if fi == 0:
            continue
        for j, gj in enumerate(g.coeffs):
            if gj:
                out[i + j] = tw.add(out[i + j], tw.mul(fi, tw.frobenius(gj, i)))
    return SkewPolynomial.from_coeffs(tw, out)


def right_div(f: SkewPolynomial, g: SkewPolynomial):
    """Unique (quotient, remainder) with f = quotient*g + remainder.

    The remainder is zero or has degree strictly below deg(g).
    """
    f._check(g)
    if g.is_zero():
        raise DivisionByZeroPolynomial("right division by the zero polynomial")
    tw = f.tower
    rem = list(f.coeffs)
    dg = g.degree()
    quo = [0] * max(0, len(rem) - dg)
    g_lead = g.coeffs[-1]
    while len(rem) - 1 >= dg and rem:
        s = len(rem) - 1 - dg
        # leading term c*t^s must satisfy c * sigma^s(g_lead) = rem_lead
        c = tw.mul(rem[-1], tw.inv(tw.frobenius(g_lead, s)))
        quo[s] = c
        for j, gj in enumerate(g.coeffs):
            if gj:
                rem[s + j] = tw.sub(rem[s + j], tw.mul(c, tw.frobenius(gj, s)))
        while rem and rem[-1] == 0:
            rem.pop()
    return (
        SkewPolynomial.from_coeffs(tw, quo),
        SkewPolynomial.from_coeffs(tw, rem),
    )


def power_function(tower: FieldTower, i: int, a: int) -> int:
    """N_i(a): N_0 = 1, N_{i+1}(a) = sigma(N_i(a)) * a.

    Closed form a^(1 + q0 + ... + q0^(i-1)); evaluated by the recurrence.
    """
    n = 1
    for _ in range(i):
        n = tower.mul(tower.frobenius(n, 1), a)
    return n


def evaluate(f: SkewPolynomial, a: int) -> int:
    """f(a) = sum_i f_i N_i(a), the remainder of right division by t - a."""
    tw = f.tower
    acc, n = 0, 1
    for i, c in enumerate(f.coeffs):
        if i:
            n = tw.mul(tw.frobenius(n, 1), a)
        if c:
            acc = tw.add(acc, tw.mul(c, n))
    return acc


def conjugate(tower: FieldTower, a: int, c: int) -> int:
    """The c-conjugate sigma(c) * a * c^-1 = c^(q0-1) * a."""
    if c == 0:
        raise ConjugateByZero("conjugation by zero")
    return tower.mul(tower.mul(tower.frobenius(c, 1), a), tower.inv(c))


def conjugacy_class(tower: FieldTower, a: int) -> int:
    """Class index: -1 for the class {0}, else dlog(a) mod (q0 - 1)."""
    if a == 0:
        return -1
    return tower.dlog(a) % (tower.q0 - 1)


def class_representative(tower: FieldTower, class_id: int) -> int:
    """gamma^id for id >= 0, 0 for the class {0}."""
    if class_id == -1:
        return 0
    return tower.pow(tower.generator, class_id)


def product_eval(f: SkewPolynomial, g: SkewPolynomial, a: int) -> int:
    """(fg)(a) via the product rule: 0 if g(a)=0, else f(a^{g(a)}) * g(a)."""
    ga = evaluate(g, a)
    if ga == 0:
        return 0
    return f.tower.mul(evaluate(f, conjugate(f.tower, a, ga)), ga)


def skew_linear_operator(f: SkewPolynomial, a: int, y: int) -> int:
    """D_{f,a}(y) = f(a^y) * y, extended to y = 0 by 0; F_{q0}-linear in y."""
    return evaluate(skew_mul(f, SkewPolynomial.constant(f.tower, y)), a)


@dataclass(frozen=True)
class ClassRoots:
    class_id: int
    representative: int
    basis: tuple  # elements y with f(rep^y) = 0, independent over F_{q0}

    @property
    def dimension(self):
        return len(self.basis)


@dataclass(frozen=True)
class RootStructure:
    per_class: tuple  # ClassRoots entries, ascending class_id

    @property
    def total_dimension(self):
        return sum(c.dimension for c in self.per_class)


def root_structure(f: SkewPolynomial) -> RootStructure:
    """Exhaustive root scan of F_q grouped by conjugacy class.

    For each class with roots, returns an F_{q0}-basis of
    V = {y : f(rep^y) = 0} + {0}; the total dimension never exceeds deg(f)
    (fundamental theorem of skew polynomial roots).
    """
    if f.is_zero():
        raise ZeroPolynomial("root structure of the zero polynomial")
    tw = f.tower
    if tw.q > ROOT_SCAN_LIMIT:
        raise FieldTooLarge(f"exhaustive scan needs q <= {ROOT_SCAN_LIMIT}")
    qm1 = tw.q - 1
    cls_ys: dict[int, list[int]] = {}
    zero_root = False
    for x in range(tw.q):
        if evaluate(f, x) != 0:
            continue
        if x == 0:
            zero_root = True
            continue
        d = tw.dlog(x)
        cid = d % (tw.q0 - 1)
        # x = rep^y with rep = gamma^cid and y = gamma^((dlog(x)-cid)/(q0-1))
        y = tw.pow(tw.generator, ((d - cid) // (tw.q0 - 1)) % qm1)
        cls_ys.setdefault(cid, []).append(y)
    entries = []
    if zero_root:
        # class {0}: centralizer is all of K, V = K has dimension 1 over K
        entries.append(ClassRoots(class_id=-1, representative=0, basis=(1,)))
    for cid in sorted(cls_ys):
        basis = _independent_subset(tw, cls_ys[cid])
        entries.append(
            ClassRoots(
                class_id=cid,
                representative=class_representative(tw, cid),
                basis=tuple(basis),
            )
        )
    rs = RootStructure(per_class=tuple(entries))
    deg = f.degree()
    assert rs.total_dimension <= deg, "fundamental root theorem violated"
    return rs


def _independent_subset(tower, elements):
    """Greedy F_{q0}-basis extraction via elimination on flattened coords."""
    basis_rows = []  # echelonized flattened vectors
    basis_elems = []
    F = tower.base
    for e in elements:
        row = list(tower.flatten(e))
        for pivot_col, pivot_row in basis_rows:
            if row[pivot_col]:
                c = F.mul(row[pivot_col], F.inv(pivot_row[pivot_col]))
                for i in range(len(row)):
                    row[i] = F.sub(row[i], F.mul(c, pivot_row[i]))
        lead = next((i for i, v in enumerate(row) if v), None)
        if lead is not None:
            basis_rows.append((lead, row))
            basis_elems.append(e)
    return basis_elems
