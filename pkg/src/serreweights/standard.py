"""Named finite subgroups of ``GL_2`` over small fields."""

from __future__ import annotations

import re

import numpy as np

from .errors import UnsupportedSpec
from .fields import FiniteField
from .groups import DEFAULT_CAP, MatGroup, extend_scalars, group_closure

# Inside SL_2(F_9), F_9 = F_3[x]/(x^2+1): a^2 = b^3 = (ab)^5 = -1.
# Codes: 2 = -1, 7 = 1 + 2x.
BINARY_ICOSAHEDRAL_F9 = (
    ((0, 1), (2, 0)),
    ((2, 7), (0, 2)),
)

_SPEC = re.compile(r"^\s*([A-Z_0-9]+)\s*\(\s*([^)]*)\)\s*$")


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                break
            return p, m
    raise UnsupportedSpec(f"{q} is not a prime power")


def _field(q: str | int) -> FiniteField:
    try:
        q = int(str(q).strip().lstrip("Fq_"))
    except ValueError as exc:
        raise UnsupportedSpec(f"bad field size {q!r}") from exc
    l, m = _prime_power(q)
    if l == 2:
        raise UnsupportedSpec("characteristic 2 is not supported")
    return FiniteField(l, m)


def sl2_generators(F: FiniteField) -> list[np.ndarray]:
    a = F.primitive_element
    return [
        np.array([[1, 1], [0, 1]]),
        np.array([[0, 1], [F.neg(1), 0]]),
        np.array([[a, 0], [0, F.inv(a)]]),
    ]


def gl2_generators(F: FiniteField) -> list[np.ndarray]:
    return sl2_generators(F) + [np.array([[F.primitive_element, 0], [0, 1]])]


def dihedral_generators(F: FiniteField, order: int) -> list[np.ndarray]:
    """``diag(z, 1/z)`` with ``z`` of order ``order/2`` and the coordinate swap."""
    if order % 2 or (F.q - 1) % (order // 2) or order < 4:
        raise UnsupportedSpec(f"dihedral group of order {order} needs order/2 >= 2 dividing {F.q - 1}")
    N = order // 2
    z = F.pow(F.primitive_element, (F.q - 1) // N)
    return [np.array([[z, 0], [0, F.inv(z)]]), np.array([[0, 1], [1, 0]])]


def standard_group(spec: str, over: int | None = None, cap: int = DEFAULT_CAP) -> MatGroup:
    """Build a named group.

    ``spec`` is one of ``SL2(q)``, ``GL2(q)``, ``SCALARS(q)``,
    ``DIHEDRAL(q, order)`` or ``BINARY_ICOSAHEDRAL(9)``.  With ``over`` a
    group defined over a prime field is viewed inside ``GL_2(F_over)``.
    """
    m = _SPEC.match(spec.upper())
    if not m:
        raise UnsupportedSpec(f"cannot parse group spec {spec!r}")
    name, args = m.group(1), [a.strip() for a in m.group(2).split(",") if a.strip()]
    if not args:
        raise UnsupportedSpec(f"{name} needs a field size")
    F = _field(args[0])
    if name == "SL2" and len(args) == 1:
        gens = sl2_generators(F)
    elif name == "GL2" and len(args) == 1:
        gens = gl2_generators(F)
    elif name == "SCALARS" and len(args) == 1:
        gens = [np.diag([F.primitive_element] * 2)]
    elif name == "DIHEDRAL" and len(args) == 2:
        gens = dihedral_generators(F, int(args[1]))
    elif name == "BINARY_ICOSAHEDRAL" and len(args) == 1:
        if F.q != 9:
            raise UnsupportedSpec("binary icosahedral group is only modelled inside SL2(F9)")
        gens = [np.array(g) for g in BINARY_ICOSAHEDRAL_F9]
    else:
        raise UnsupportedSpec(f"unknown group spec {spec!r}")
    G = group_closure(2, F, gens, cap)
    if over is not None and over != F.q:
        G = extend_scalars(G, _field(over), cap)
    return G


__all__ = ["standard_group", "BINARY_ICOSAHEDRAL_F9"]
