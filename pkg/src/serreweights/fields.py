"""Small finite fields ``F_q = F_l[x]/(P)``.

Elements are integer codes ``c = sum_k c_k l**k`` where ``c_k`` is the
coefficient of ``x**k``; the prime field is the codes below ``l``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

# Monic moduli, coefficients from the constant term up (leading 1 omitted).
FIELD_MODULI = {
    (3, 2): (1, 0),  # x^2 + 1
    (3, 3): (1, 2, 0),  # x^3 + 2x + 1
    (3, 4): (2, 0, 0, 2),  # x^4 + 2x^3 + 2
    (5, 2): (2, 4),  # x^2 + 4x + 2
    (5, 3): (3, 3, 0),  # x^3 + 3x + 3
    (7, 2): (3, 6),  # x^2 + 6x + 3
}


def _polymulmod(a, b, mod, l):
    m = len(mod)
    out = [0] * (2 * m - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    for k in range(2 * m - 2, m - 1, -1):
        c = out[k] % l
        if c:
            for j in range(m):
                out[k - m + j] -= c * mod[j]
        out[k] = 0
    return [x % l for x in out[:m]]


def _is_irreducible(mod, l) -> bool:
    # trial division by every monic polynomial of degree <= m/2
    m = len(mod)
    for deg in range(1, m // 2 + 1):
        for coeffs in itertools.product(range(l), repeat=deg):
            g = list(coeffs) + [1]
            # remainder of mod by g
            r = list(mod) + [1]
            for k in range(len(r) - 1, deg - 1, -1):
                c = r[k] % l
                if c:
                    for j in range(deg + 1):
                        r[k - deg + j] -= c * g[j]
            if all(x % l == 0 for x in r[:deg]):
                return False
    return True


def find_modulus(l: int, m: int) -> tuple[int, ...]:
    if (l, m) in FIELD_MODULI:
        return FIELD_MODULI[(l, m)]
    for coeffs in itertools.product(range(l), repeat=m):
        if coeffs[0] and _is_irreducible(coeffs, l):
            return coeffs
    raise ValueError(f"no irreducible polynomial of degree {m} over F_{l}")


@dataclass(frozen=True)
class FiniteField:
    l: int
    m: int = 1
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.modulus and self.m > 1:
            object.__setattr__(self, "modulus", find_modulus(self.l, self.m))
        if self.m > 1 and (len(self.modulus) != self.m or not _is_irreducible(self.modulus, self.l)):
            raise ValueError(f"modulus {self.modulus} is not irreducible of degree {self.m}")

    @property
    def q(self) -> int:
        return self.l**self.m

    def __repr__(self):
        return f"F_{self.q}"

    def coeffs(self, c: int) -> list[int]:
        return [(c // self.l**k) % self.l for k in range(self.m)]

    def code(self, coeffs) -> int:
        if isinstance(coeffs, (int, np.integer)):
            coeffs = [coeffs]
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        if len(coeffs) > self.m:
            raise ValueError(f"too many coefficients for {self}")
        return sum((int(x) % self.l) * self.l**k for k, x in enumerate(coeffs))

    @cached_property
    def _tables(self):
        q, l = self.q, self.l
        C = np.array([self.coeffs(c) for c in range(q)], dtype=np.int64)
        w = l ** np.arange(self.m)
        add = ((C[:, None, :] + C[None, :, :]) % l) @ w
        mul = np.zeros((q, q), dtype=np.int64)
        mod = list(self.modulus) if self.m > 1 else [0]
        for a in range(q):
            for b in range(a, q):
                if self.m == 1:
                    v = a * b % l
                else:
                    v = self.code(_polymulmod(C[a], C[b], mod, l))
                mul[a, b] = mul[b, a] = v
        neg = ((-C) % l) @ w
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        return add, mul, neg, inv

    def add(self, a: int, b: int) -> int:
        return int(self._tables[0][a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self._tables[1][a, b])

    def neg(self, a: int) -> int:
        return int(self._tables[2][a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self._tables[3][a])

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != 1:
            x, k = self.mul(x, a), k + 1
        return k

    @cached_property
    def primitive_element(self) -> int:
        for a in range(1, self.q):
            if self.element_order(a) == self.q - 1:
                return a
        raise AssertionError("no primitive element")

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.l)

    @cached_property
    def regular(self) -> np.ndarray:
        """``regular[c]`` is the matrix of multiplication by ``c`` on coefficient vectors."""
        q, m = self.q, self.m
        R = np.zeros((q, m, m), dtype=np.int64)
        basis = [self.l**k for k in range(m)]
        for c in range(q):
            for k, b in enumerate(basis):
                R[c, :, k] = self.coeffs(self.mul(c, b))
        return R

    # matrices over F_q <-> block matrices over F_l

    def blowup(self, M) -> np.ndarray:
        """``n x n`` code matrix -> ``nm x nm`` matrix over ``F_l``."""
        M = np.asarray(M, dtype=np.int64)
        n, m = M.shape[0], self.m
        return self.regular[M].transpose(0, 2, 1, 3).reshape(n * m, n * m)

    def blowdown(self, B: np.ndarray) -> np.ndarray:
        m = self.m
        n = B.shape[-1] // m
        cols = B.reshape(B.shape[:-2] + (n, m, n, m))[..., :, :, :, 0]  # first column of each block
        w = self.l ** np.arange(m)
        return np.einsum("...ikj,k->...ij", cols, w)

    def contains_prime_field_codes(self, M) -> bool:
        return bool(np.all(np.asarray(M) < self.l))
