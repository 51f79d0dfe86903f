"""Characters of tame inertia written in terms of fundamental characters.

A character of niveau ``f'`` is a power of a single fundamental character
``omega_0`` of order ``M = l**f' - 1``.  The ``f'`` fundamental characters
are labelled by positions ``p = 0, ..., f'-1`` with

    omega_p = omega_{p+1} ** l        (indices mod f')

so that the position ``p`` contributes ``l**(f'-1-p)`` to the scalar
exponent.  The last position is the anchor (weight 1).  Every character is
stored through its canonical residue in ``Z/M``; the exponent vector given
at construction is kept only for display.

At niveau ``2f`` the two positions ``q`` and ``q+f`` restrict to the same
embedding of the degree-``f`` residue field, which sits at position ``q``
one level down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import LengthMismatch, OddNiveau, ParamMismatch


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldParams:
    """Prime ``l`` and niveau ``f_prime``."""

    l: int
    f_prime: int

    def __post_init__(self):
        if self.l < 3 or not _is_prime(self.l):
            raise ValueError(f"l must be an odd prime, got {self.l}")
        if self.f_prime < 1:
            raise ValueError(f"f_prime must be >= 1, got {self.f_prime}")

    @property
    def modulus(self) -> int:
        return self.l**self.f_prime - 1

    def position_weight(self, p: int) -> int:
        """Contribution of ``omega_p`` to the canonical exponent."""
        return pow(self.l, self.f_prime - 1 - (p % self.f_prime), self.modulus)

    def doubled(self) -> FieldParams:
        return FieldParams(self.l, 2 * self.f_prime)

    def halved(self) -> FieldParams:
        if self.f_prime % 2:
            raise OddNiveau(f"niveau {self.f_prime} is odd")
        return FieldParams(self.l, self.f_prime // 2)


@dataclass(frozen=True)
class InertialChar:
    params: FieldParams
    canonical: int
    exponents: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "canonical", self.canonical % self.params.modulus)

    @property
    def l(self) -> int:
        return self.params.l

    @property
    def f_prime(self) -> int:
        return self.params.f_prime

    def is_trivial(self) -> bool:
        return self.canonical == 0

    def __mul__(self, other: InertialChar) -> InertialChar:
        return mul(self, other)

    def __pow__(self, n: int) -> InertialChar:
        return pow_(self, n)

    def __invert__(self) -> InertialChar:
        return inv(self)

    def __repr__(self):
        d = "".join(str(x) if self.l <= 10 else f"{x}," for x in digits(self))
        return f"InertialChar(l={self.l}, f'={self.f_prime}, E={self.canonical}, digits={d})"


def char_from_exponents(params: FieldParams, b: Sequence[int]) -> InertialChar:
    """The character prod_p omega_p ** b[p]."""
    b = tuple(int(x) for x in b)
    if len(b) != params.f_prime:
        raise LengthMismatch(f"expected {params.f_prime} exponents, got {len(b)}")
    E = sum(x * params.position_weight(p) for p, x in enumerate(b))
    return InertialChar(params, E, b)


def trivial(params: FieldParams) -> InertialChar:
    return InertialChar(params, 0, (0,) * params.f_prime)


def fundamental(params: FieldParams, p: int) -> InertialChar:
    """The fundamental character omega_p."""
    b = [0] * params.f_prime
    b[p % params.f_prime] = 1
    return char_from_exponents(params, b)


def _check(a: InertialChar, b: InertialChar) -> None:
    if a.params != b.params:
        raise ParamMismatch(f"{a.params} != {b.params}")


def mul(a: InertialChar, b: InertialChar) -> InertialChar:
    _check(a, b)
    return InertialChar(a.params, a.canonical + b.canonical)


def inv(a: InertialChar) -> InertialChar:
    return InertialChar(a.params, -a.canonical)


def pow_(a: InertialChar, n: int) -> InertialChar:
    return InertialChar(a.params, a.canonical * n)


def digits(chi: InertialChar) -> tuple[int, ...]:
    """Base-``l`` exponents in ``[0, l-1]`` representing ``chi``.

    The trivial character gets all zeros; see :func:`digits_alt`.
    """
    l, n = chi.l, chi.f_prime
    E = chi.canonical
    out = [0] * n
    for p in range(n - 1, -1, -1):
        E, out[p] = divmod(E, l)
    return tuple(out)


def digits_alt(chi: InertialChar) -> tuple[int, ...]:
    """Like :func:`digits`, but the trivial character maps to all ``l-1``."""
    if chi.is_trivial():
        return (chi.l - 1,) * chi.f_prime
    return digits(chi)


def frobenius_twist(chi: InertialChar) -> InertialChar:
    """``chi ** l``: the exponent vector shifts one position to the left."""
    b = digits(chi)
    return char_from_exponents(chi.params, b[1:] + b[:1])


def conjugate_c(psi: InertialChar) -> InertialChar:
    """``psi ** (l**f)`` for a character of even niveau ``2f``."""
    f = psi.params.halved().f_prime
    b = digits(psi)
    return char_from_exponents(psi.params, b[f:] + b[:f])


def inflate(chi: InertialChar) -> InertialChar:
    """View a niveau-``f`` character as a niveau-``2f`` character."""
    f = chi.f_prime
    return InertialChar(chi.params.doubled(), chi.canonical * (chi.l**f + 1))


@dataclass(frozen=True)
class CrysCharData:
    """Hodge-Tate integers ``table[sigma][slot]`` of a crystalline character.

    Rows are residue embeddings (positions), columns the ``e`` embeddings
    of ``K`` above each of them.
    """

    params: FieldParams
    e: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        if len(table) != self.params.f_prime or any(len(r) != self.e for r in table):
            raise LengthMismatch(
                f"table must have shape {self.params.f_prime} x {self.e}"
            )
        object.__setattr__(self, "table", table)

    def __add__(self, other: CrysCharData) -> CrysCharData:
        if (self.params, self.e) != (other.params, other.e):
            raise ParamMismatch("tables of different shape")
        return CrysCharData(
            self.params,
            self.e,
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.table, other.table)),
        )


def crystalline_reduction(A: CrysCharData) -> InertialChar:
    """Inertial restriction of the reduction of a crystalline character.

    The exponent at each residue embedding is the sum of the Hodge-Tate
    weights of the embeddings above it.
    """
    return char_from_exponents(A.params, [sum(row) for row in A.table])
