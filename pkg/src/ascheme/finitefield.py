"""Small finite fields GF(p^k) with deterministic tables.

Elements are encoded as integers 0..q-1 via base-p digits (digit i is the
coefficient of x^i).  The modulus is the lexicographically first monic
irreducible of degree k over GF(p), so the same (p, k) always yields the
same field, the same generator, and hence the same discrete-log table.
Field sizes are capped at 257: large enough for every bundled scheme,
small enough that dense q x q tables stay trivial.
"""

from dataclasses import dataclass

import numpy as np
from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

from .errors import NotPrime, TooLarge

MAX_Q = 257


def _int_to_poly(e, p, k):
    # sympy gf polys are coefficient lists, highest degree first, no leading zeros
    digits = []
    for _ in range(k):
        digits.append(e % p)
        e //= p
    coeffs = list(reversed(digits))
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    return [ZZ(c) for c in coeffs]


def _poly_to_int(f, p):
    e = 0
    for c in f:
        e = e * p + int(c)
    return e


def _lex_first_irreducible(p, k):
    if k == 1:
        return [ZZ(1), ZZ(0)]
    for low in range(p ** k):
        digits = []
        e = low
        for _ in range(k):
            digits.append(e % p)
            e //= p
        f = [ZZ(1)] + [ZZ(c) for c in reversed(digits)]
        if gf_irreducible_p(f, p, ZZ):
            return f
    raise AssertionError("no irreducible polynomial found")


@dataclass(frozen=True)
class Field:
    """GF(p^k) with exp/log tables for the fixed generator."""

    p: int
    k: int
    q: int
    modulus: tuple
    generator: int
    exp: tuple  # exp[t] = generator^t, t in 0..q-2
    log: tuple  # log[e] for e in 1..q-1 (index e-1)

    def add(self, a, b):
        out, pw = 0, 1
        for _ in range(self.k):
            out += ((a + b) % self.p) * pw
            a //= self.p
            b //= self.p
            pw *= self.p
        return out

    def neg(self, a):
        out, pw = 0, 1
        for _ in range(self.k):
            out += ((-a) % self.p) * pw
            a //= self.p
            pw *= self.p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        f = gf_mul(
            _int_to_poly(a, self.p, self.k),
            _int_to_poly(b, self.p, self.k),
            self.p,
            ZZ,
        )
        return _poly_to_int(gf_rem(f, list(self.modulus), self.p, ZZ), self.p)

    def digit_matrix(self):
        """q x k matrix of base-p digits, digit i = coefficient of x^i."""
        e = np.arange(self.q)
        digits = np.empty((self.q, self.k), dtype=np.int64)
        for i in range(self.k):
            digits[:, i] = e % self.p
            e = e // self.p
        return digits


def _order(mul, e, q):
    t, cur = 1, e
    while cur != 1:
        cur = mul(cur, e)
        t += 1
        if t > q:
            raise AssertionError("element order overflow")
    return t


def field(p, k=1):
    """Build GF(p^k); deterministic modulus and generator."""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be positive")
    q = p ** k
    if q > MAX_Q:
        raise TooLarge(f"field size {q} exceeds {MAX_Q}")
    modulus = tuple(int(c) for c in _lex_first_irreducible(p, k))

    def mul(a, b):
        f = gf_mul(_int_to_poly(a, p, k), _int_to_poly(b, p, k), p, ZZ)
        return _poly_to_int(gf_rem(f, [ZZ(c) for c in modulus], p, ZZ), p)

    gen = None
    for e in range(2 if q > 2 else 1, q):
        if _order(mul, e, q) == q - 1:
            gen = e
            break
    assert gen is not None, "multiplicative group has a generator"
    exp = [1]
    for _ in range(q - 2):
        exp.append(mul(exp[-1], gen))
    log = [0] * (q - 1)
    for t, e in enumerate(exp):
        log[e - 1] = t
    return Field(p, k, q, modulus, gen, tuple(exp), tuple(log))
