"""Exact arithmetic in small finite fields F_q with q = p^k <= 2^16.

Elements are plain ints in [0, q).  For k == 1 an element is a residue
mod p.  For k > 1 the base-p digits of the int are the coefficients of a
polynomial of degree < k, reduced modulo a fixed monic irreducible
modulus of degree k; multiplication and inversion go through log/antilog
tables built once at construction time.
"""

from __future__ import annotations

from functools import lru_cache

MAX_Q = 1 << 16


def _factor(n: int) -> dict:
    """Prime factorization {prime: exponent} by trial division."""
    fac = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def _as_prime_power(q: int):
    fac = _factor(q)
    if len(fac) != 1:
        return None
    ((p, k),) = fac.items()
    return p, k


# Polynomials over F_p as little-endian coefficient lists (index = degree).


def _poly_rem(a, b, p):
    """Remainder of a mod b over F_p; b must be nonzero."""
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p) if b[-1] != 1 else 1
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        shift = len(a) - 1 - db
        factor = (a[-1] * inv_lead) % p
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bc) % p
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, m, p):
    """a*b mod m over F_p."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac == 0:
            continue
        for j, bc in enumerate(b):
            prod[i + j] = (prod[i + j] + ac * bc) % p
    return _poly_rem(prod, m, p)


def _is_irreducible(m, p):
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for idx in range(p**d):
            g = _digits(idx, p, d) + [1]
            if not _poly_rem(m, g, p):
                return False
    return True


def _digits(value, p, width):
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _undigits(digits, p):
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


class Field:
    """The finite field with q = p^k elements; immutable after construction.

    Do not call directly: use :func:`field_make`, which caches so equal q
    always yields the same object (and the same modulus).
    """

    def __init__(self, q: int):
        pk = _as_prime_power(q)
        if pk is None:
            raise ValueError(f"q={q} is not a prime power")
        if not 2 <= q <= MAX_Q:
            raise ValueError(f"q={q} outside supported range [2, {MAX_Q}]")
        self.q = q
        self.p, self.k = pk
        if self.k == 1:
            self.modulus = None
        else:
            self.modulus = self._least_irreducible()
            self._build_tables()

    def _least_irreducible(self):
        # Monic x^k + c_{k-1}x^{k-1} + ... + c_0, scanned in increasing
        # order of the integer encoding of (c_0, ..., c_{k-1}).
        p, k = self.p, self.k
        for idx in range(p**k):
            cand = _digits(idx, p, k) + [1]
            if _is_irreducible(cand, p):
                return cand
        raise AssertionError("no irreducible modulus found")  # unreachable

    def _slow_mul(self, a, b):
        da = _digits(a, self.p, self.k)
        db = _digits(b, self.p, self.k)
        r = _poly_mulmod(da, db, self.modulus, self.p)
        return _undigits(r + [0] * (self.k - len(r)), self.p)

    def _slow_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        q = self.q
        order_facs = _factor(q - 1)
        gen = None
        for cand in range(2, q):
            if all(self._slow_pow(cand, (q - 1) // f) != 1 for f in order_facs):
                gen = cand
                break
        if gen is None:  # q - 1 == 1, i.e. q == 2 with k > 1: impossible
            gen = 1
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._slow_mul(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        da = _digits(a, p, self.k)
        db = _digits(b, p, self.k)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        return _undigits([(-x) % p for x in _digits(a, p, self.k)], p)

    def sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if self.k == 1:
            return (a * pow(b, self.p - 2, self.p)) % self.p
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % (self.q - 1)]

    def pow(self, a, e):
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.k == 1:
            return pow(a, e, self.p)
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def elements(self):
        return range(self.q)

    # -- predicates used by the constructions ------------------------------

    def sqrt_char2(self, a):
        """The unique square root in characteristic 2, a^(q/2)."""
        if self.p != 2:
            raise ValueError("sqrt_char2 requires characteristic 2")
        return self.pow(a, self.q // 2)

    def is_square(self, a):
        """Euler criterion: a^((q-1)/2) in {0, 1} for odd q."""
        if self.p == 2:
            raise ValueError("is_square requires odd characteristic")
        return a == 0 or self.pow(a, (self.q - 1) // 2) == 1

    def artin_schreier_image(self, beta):
        """{gamma^2 + beta*gamma : gamma in F_q} in characteristic 2.

        All of F_q when beta == 0 (squaring is a bijection); exactly q/2
        elements otherwise (gamma and gamma+beta collide).
        """
        if self.p != 2:
            raise ValueError("artin_schreier_image requires characteristic 2")
        return frozenset(
            self.add(self.mul(g, g), self.mul(beta, g)) for g in range(self.q)
        )

    # -- serialization ------------------------------------------------------

    def to_dict(self):
        d = {"q": self.q, "p": self.p, "k": self.k}
        if self.modulus is not None:
            d["modulus"] = list(self.modulus)
        return d

    def __repr__(self):
        return f"Field(q={self.q})"


@lru_cache(maxsize=None)
def field_make(q: int) -> Field:
    """The field with q elements; cached, deterministic modulus choice."""
    return Field(q)


def field_from_dict(d) -> Field:
    f = field_make(d["q"])
    if f.p != d.get("p", f.p) or f.k != d.get("k", f.k):
        raise ValueError("inconsistent field description")
    if "modulus" in d and list(f.modulus or []) != list(d["modulus"]):
        raise ValueError("modulus mismatch: different field representation")
    return f
