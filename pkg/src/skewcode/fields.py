"""Two-level finite field towers F_p < F_{q0} < F_q with exact arithmetic.

Elements are plain integers: the base-p positional value of the element's
coefficients in the power basis, constant term first.  This is also the
interchange encoding used by every JSON format in the package, so in-memory
values serialize bit-for-bit.

Moduli and generators are chosen deterministically (smallest integer
encoding that works), so two towers built from the same (p, k, m) are
identical across runs and implementations.

Fields up to TABLE_LIMIT elements get exp/log/Zech-log tables, making
multiplication, inversion, addition and Frobenius O(1) lookups; larger
fields fall back to polynomial arithmetic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import sympy

from .errors import (
    DegreeOverflow,
    DivisionByZero,
    LengthMismatch,
    NotPrime,
    ZeroHasNoLog,
)

TABLE_LIMIT = 1 << 16
MAX_Q = 1 << 24


class PrimeField:
    """F_p with elements 0..p-1."""

    def __init__(self, p: int):
        self.p = p
        self.size = p
        self.char = p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def inv(self, x):
        if x == 0:
            raise DivisionByZero("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def pow(self, x, e):
        if x == 0:
            return 0 if e else 1
        return pow(x, e % (self.p - 1) if e else 0, self.p)

    def __repr__(self):
        return f"GF({self.p})"


# ---------------------------------------------------------------------------
# polynomial helpers over an arbitrary coefficient field
# (polynomials are lists of element codes, constant term first, trimmed)


def p_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def p_add(F, a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = F.add(x, y)
    return p_trim(out)


def p_mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return p_trim(out)


def p_divmod(F, a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = F.inv(b[-1])
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lead)
        s = len(a) - len(b)
        q[s] = c
        for i, y in enumerate(b):
            a[s + i] = F.sub(a[s + i], F.mul(c, y))
        p_trim(a)
        if not a:
            break
    return p_trim(q), a


def p_mod(F, a, b):
    return p_divmod(F, list(a), b)[1]


def poly_is_irreducible(F, coeffs):
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if coeffs[0] == 0:  # divisible by x
        return False
    size = F.size
    for d in range(1, deg // 2 + 1):
        for v in range(size**d):
            div, rest = [0] * d + [1], v
            for i in range(d):
                div[i] = rest % size
                rest //= size
            if not p_mod(F, coeffs, div):
                return False
    return True


def smallest_irreducible(F, deg):
    """Lexicographically-smallest monic irreducible of given degree over F.

    Candidates are ordered by the integer encoding of their non-leading
    coefficients, constant term least significant.
    """
    size = F.size
    for v in range(size**deg):
        coeffs, rest = [0] * deg + [1], v
        for i in range(deg):
            coeffs[i] = rest % size
            rest //= size
        if poly_is_irreducible(F, coeffs):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------


class ExtField:
    """Extension field over `base` defined by a monic irreducible modulus.

    `modulus` is the full coefficient tuple (length deg+1, leading 1).
    Element codes are integers in [0, size): base-|base| positional value of
    the power-basis coordinates.
    """

    def __init__(self, base, modulus, table_limit: int = TABLE_LIMIT):
        self.base = base
        self.modulus = tuple(modulus)
        self.deg = len(modulus) - 1
        assert modulus[-1] == 1 and self.deg >= 1
        self.size = base.size**self.deg
        self.char = base.char
        self._minus_one = self.embed(base.sub(0, 1))
        self.generator = self._find_generator()
        self.exp = self.log = self.zech = None
        if self.size <= table_limit:
            self._build_tables()

    # -- digit conversions

    def digits(self, x):
        b = self.base.size
        out = []
        for _ in range(self.deg):
            out.append(x % b)
            x //= b
        return out

    def undigits(self, ds):
        b = self.base.size
        x = 0
        for d in reversed(ds):
            x = x * b + d
        return x

    def embed(self, c):
        """A base-field code is its own extension code (constant digit)."""
        return c

    # -- raw polynomial arithmetic on codes (used to bootstrap tables and
    #    as the fallback for fields too large to table)

    def _raw_add(self, x, y):
        F, b = self.base, self.base.size
        out, mul = 0, 1
        for _ in range(self.deg):
            out += F.add(x % b, y % b) * mul
            x //= b
            y //= b
            mul *= b
        return out

    def _raw_mul(self, x, y):
        F = self.base
        a = p_trim(self.digits(x))
        c = p_trim(self.digits(y))
        prod = p_mod(F, p_mul(F, a, c), list(self.modulus))
        return self.undigits(prod + [0] * (self.deg - len(prod)))

    def _raw_pow(self, x, e):
        r, acc = 1, x
        while e:
            if e & 1:
                r = self._raw_mul(r, acc)
            acc = self._raw_mul(acc, acc)
            e >>= 1
        return r

    def _find_generator(self):
        n = self.size - 1
        if n == 1:
            return 1
        prime_divs = list(sympy.factorint(n))
        for cand in range(2, self.size):
            if all(self._raw_pow(cand, n // pr) != 1 for pr in prime_divs):
                return cand
        raise AssertionError("no generator found")  # unreachable

    def _build_tables(self):
        n = self.size - 1
        exp = [0] * n
        x = 1
        for i in range(n):
            exp[i] = x
            x = self._raw_mul(x, self.generator)
        log = [-1] * self.size
        for i, v in enumerate(exp):
            log[v] = i
        zech = [-1] * n  # -1 marks 1 + gamma^i == 0
        for i in range(n):
            s = self._raw_add(1, exp[i])
            zech[i] = log[s] if s else -1
        self.exp, self.log, self.zech = exp, log, zech

    # -- public arithmetic

    def add(self, x, y):
        if self.zech is None:
            return self._raw_add(x, y)
        if x == 0:
            return y
        if y == 0:
            return x
        lx, ly = self.log[x], self.log[y]
        z = self.zech[(ly - lx) % (self.size - 1)]
        if z < 0:
            return 0
        return self.exp[(lx + z) % (self.size - 1)]

    def neg(self, x):
        return self.mul(x, self._minus_one)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        if self.log is None:
            return self._raw_mul(x, y)
        return self.exp[(self.log[x] + self.log[y]) % (self.size - 1)]

    def inv(self, x):
        if x == 0:
            raise DivisionByZero("inverse of zero")
        if self.log is None:
            return self._raw_pow(x, self.size - 2)
        return self.exp[(-self.log[x]) % (self.size - 1)]

    def pow(self, x, e):
        if x == 0:
            return 0 if e else 1
        if self.log is None:
            if e < 0:
                return self._raw_pow(self.inv(x), -e)
            return self._raw_pow(x, e % (self.size - 1))
        return self.exp[(self.log[x] * e) % (self.size - 1)]

    def dlog(self, x):
        if x == 0:
            raise ZeroHasNoLog("dlog(0) undefined")
        if self.log is not None:
            return self.log[x]
        return self._dlog_bsgs(x)

    def _dlog_bsgs(self, x):
        """Baby-step/giant-step discrete log base the field generator."""
        n = self.size - 1
        msqrt = sympy.integer_nthroot(n, 2)[0] + 1
        baby = {}
        cur = 1
        for j in range(msqrt):
            baby.setdefault(cur, j)
            cur = self._raw_mul(cur, self.generator)
        giant_step = self.inv(self._raw_pow(self.generator, msqrt))
        cur = x
        for i in range(msqrt + 1):
            if cur in baby:
                return (i * msqrt + baby[cur]) % n
            cur = self._raw_mul(cur, giant_step)
        raise AssertionError("BSGS failed")  # unreachable

    def __repr__(self):
        return f"GF({self.base.size}^{self.deg})"


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldTower:
    """F_p < F_{q0} = GF(p^k) < F_q = GF(q0^m), immutable after construction."""

    p: int
    k: int
    m: int
    base: ExtField
    ext: ExtField

    @property
    def q0(self):
        return self.base.size

    @property
    def q(self):
        return self.ext.size

    @property
    def generator(self):
        return self.ext.generator

    # element arithmetic in F_q (codes are ints)

    def add(self, x, y):
        return self.ext.add(x, y)

    def sub(self, x, y):
        return self.ext.sub(x, y)

    def neg(self, x):
        return self.ext.neg(x)

    def mul(self, x, y):
        return self.ext.mul(x, y)

    def inv(self, x):
        return self.ext.inv(x)

    def pow(self, x, e):
        return self.ext.pow(x, e)

    def frobenius(self, x, i=1):
        """x -> x^(q0^i); the identity when i is a multiple of m."""
        return self.ext.pow(x, self.q0 ** (i % self.m))

    def dlog(self, x):
        return self.ext.dlog(x)

    def flatten(self, x):
        """Coordinates of x in the power basis of ext_modulus (m base codes)."""
        return tuple(self.ext.digits(x))

    def lift(self, v):
        v = list(v)
        if len(v) != self.m:
            raise LengthMismatch(f"expected {self.m} coordinates, got {len(v)}")
        if any(not 0 <= c < self.q0 for c in v):
            raise LengthMismatch("coordinates must be base-field codes")
        return self.ext.undigits(v)

    def embed(self, c):
        """Base-field code -> extension code (subfield inclusion)."""
        return c

    def element_coeffs(self, x):
        """m x k integer coefficient grid of x over F_p, constant-first."""
        return [self.base_coeffs(d) for d in self.ext.digits(x)]

    def base_coeffs(self, c):
        return list(self.base.digits(c))

    def random_element(self, rng):
        return rng.randbelow(self.q)

    def random_nonzero(self, rng):
        return 1 + rng.randbelow(self.q - 1)

    # serialization

    def to_json(self):
        ext_mod = [self.base_coeffs(c) for c in self.ext.modulus[:-1]]
        return {
            "p": self.p,
            "k": self.k,
            "m": self.m,
            "base_modulus": [int(c) for c in self.base.modulus],
            "ext_modulus": ext_mod,
            "generator": self.element_coeffs(self.generator),
        }

    @staticmethod
    def from_json(obj) -> "FieldTower":
        tower = make_tower(obj["p"], obj["k"], obj["m"])
        # the deterministic construction must reproduce the serialized tower
        if tower.to_json() != obj:
            raise LengthMismatch("tower JSON does not match deterministic construction")
        return tower


@functools.lru_cache(maxsize=None)
def make_tower(p: int, k: int, m: int, max_q: int = MAX_Q) -> FieldTower:
    """Build the canonical tower for (p, k, m).

    Moduli are the lexicographically-smallest monic irreducibles (integer
    encoding order, constant term first); the generator is the smallest
    element code of full multiplicative order.
    """
    if not sympy.isprime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1 or m < 1:
        raise DegreeOverflow("k and m must be positive")
    if p ** (k * m) > max_q:
        raise DegreeOverflow(f"q = {p}^{k * m} exceeds the supported bound {max_q}")
    fp = PrimeField(p)
    base = ExtField(fp, smallest_irreducible(fp, k))
    ext = ExtField(base, smallest_irreducible(base, m))
    return FieldTower(p=p, k=k, m=m, base=base, ext=ext)


def smallest_prime_power_at_least(bound: int, max_q0: int = 1 << 20):
    """Smallest prime power q0 >= bound, returned as (q0, p, k)."""
    q0 = max(2, bound)
    while q0 <= max_q0:
        f = sympy.factorint(q0)
        if len(f) == 1:
            (p, k), = f.items()
            return q0, p, k
        q0 += 1
    from .errors import NoSmallPrimePower

    raise NoSmallPrimePower(f"no prime power in [{bound}, {max_q0}]")


def prime_power_decomposition(q0: int):
    f = sympy.factorint(q0)
    if len(f) != 1:
        from .errors import BadParams

        raise BadParams(f"{q0} is not a prime power")
    (p, k), = f.items()
    return p, k
