"""Adequacy of finite subgroups of ``GL_n`` over a finite field of characteristic ``l``.

A finite ``H`` is adequate when

1. ``H`` has no nontrivial quotient of ``l``-power order,
2. ``l`` does not divide ``n``,
3. the elements of order prime to ``l`` span ``M_n``,
4. ``H^1(H, gl_n) = 0``.

Condition 1 is tested as ``l`` not dividing ``|H / [H, H]|``: an ``l``-group
quotient is nilpotent, so it has a nontrivial abelian ``l``-quotient
whenever it is nontrivial.  Dimensions are computed over the entry field
``F_q``; they do not change over the algebraic closure.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .cohomology import fixed_subspace_dim, h1_adjoint
from .errors import CharMismatch
from .fields import FiniteField
from .groups import (
    DEFAULT_CAP,
    MatGroup,
    abelianization_l_part,
    closure_blown,
    group_closure,
    span_rank_prime_to_l,
)


@dataclass(frozen=True)
class AdequacyReport:
    n: int
    l: int
    q: int
    order: int
    cond1: bool
    l_part: int
    cond2: bool
    cond3: bool
    span_rank: int
    cond4: bool
    h1: int
    fixed_dim: int

    @property
    def verdict(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3 and self.cond4

    @property
    def failed(self) -> list[str]:
        names = ("cond1", "cond2", "cond3", "cond4")
        return [c for c in names if not getattr(self, c)]

    def as_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict
        d["failed"] = self.failed
        return d


def is_adequate(G: MatGroup, l: int | None = None, cap: int = DEFAULT_CAP) -> AdequacyReport:
    l = G.l if l is None else l
    if l != G.l:
        raise CharMismatch(f"group is over {G.field}, not characteristic {l}")
    lp = abelianization_l_part(G, l, cap)
    rank = span_rank_prime_to_l(G)
    h1 = h1_adjoint(G)
    return AdequacyReport(
        n=G.n,
        l=l,
        q=G.field.q,
        order=G.order,
        cond1=lp == 1,
        l_part=lp,
        cond2=G.n % l != 0,
        cond3=rank == G.n * G.n,
        span_rank=rank,
        cond4=h1 == 0,
        h1=h1,
        fixed_dim=fixed_subspace_dim(G),
    )


def scalar_saturate(G: MatGroup, degree: int | None = None, cap: int = DEFAULT_CAP) -> MatGroup:
    """``k^x G`` for the subfield ``k`` of degree ``degree`` (default: the whole entry field)."""
    F = G.field
    d = F.m if degree is None else degree
    if F.m % d:
        raise ValueError(f"F_{F.l}^{d} is not a subfield of {F}")
    z = F.pow(F.primitive_element, (F.q - 1) // (F.l**d - 1))
    scalar = F.blowup(np.diag([z] * G.n))
    return closure_blown(F, G.n, list(G.generators) + [scalar], cap)


def kron_codes(F: FiniteField, A, B) -> np.ndarray:
    """Kronecker product of code matrices, row-major: ``(A x B)[i*n2+k, j*n2+l] = A[i,j] B[k,l]``."""
    A, B = np.asarray(A), np.asarray(B)
    mul = F._tables[1]
    P = mul[A[:, None, :, None], B[None, :, None, :]]
    n1, n2 = A.shape[0], B.shape[0]
    return P.reshape(n1 * n2, n1 * n2)


def tensor_image(G1: MatGroup, G2: MatGroup, pairs=None, cap: int = DEFAULT_CAP) -> MatGroup:
    """Image of ``r1 x r2`` on a group given by paired generators.

    Without ``pairs`` the group is ``G1 x G2``, generated by ``(s, 1)`` and
    ``(1, t)``.
    """
    if G1.field != G2.field:
        raise ValueError("tensor factors must share the entry field")
    F = G1.field
    g1 = list(F.blowdown(G1.generators))
    g2 = list(F.blowdown(G2.generators))
    if pairs is None:
        I1, I2 = np.eye(G1.n, dtype=np.int64), np.eye(G2.n, dtype=np.int64)
        pairs = [(s, I2) for s in g1] + [(I1, t) for t in g2]
    gens = [kron_codes(F, a, b) for a, b in pairs]
    return group_closure(G1.n * G2.n, F, gens, cap)


__all__ = ["AdequacyReport", "is_adequate", "scalar_saturate", "tensor_image", "kron_codes"]
