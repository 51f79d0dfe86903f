"""Finite matrix groups over small finite fields, enumerated by breadth-first closure.

An ``n x n`` matrix over ``F_q`` (``q = l**m``) is stored through its
``nm x nm`` image over ``F_l`` (see :meth:`FiniteField.blowup`), so group
arithmetic is plain integer matrix multiplication mod ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .errors import CapExceeded, SingularGenerator
from .fields import FiniteField
from .linalg import rank_mod_p

DEFAULT_CAP = 20000


def _key(M: np.ndarray) -> bytes:
    return M.astype(np.uint8).tobytes()


def _bmul(A: np.ndarray, B: np.ndarray, l: int) -> np.ndarray:
    return np.matmul(A, B) % l


@dataclass(eq=False)
class MatGroup:
    """A finite subgroup of ``GL_n(F_q)`` with its full element table.

    ``parent[x]`` and ``via[x]`` record the spanning tree of the Cayley
    graph: ``elements[x] = elements[parent[x]] @ generators[via[x]]``.
    ``right_mult[x, s]`` is the index of ``elements[x] @ generators[s]``.
    """

    n: int
    field: FiniteField
    generators: np.ndarray
    elements: np.ndarray
    parent: np.ndarray
    via: np.ndarray
    right_mult: np.ndarray
    index: dict = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    @property
    def l(self) -> int:
        return self.field.l

    @property
    def dim(self) -> int:
        return self.n * self.field.m

    def __contains__(self, M) -> bool:
        return _key(np.asarray(M)) in self.index

    def find(self, M) -> int:
        return self.index[_key(np.asarray(M))]

    def code_matrices(self) -> np.ndarray:
        """Elements as ``n x n`` matrices of field codes."""
        return self.field.blowdown(self.elements)

    def tree_order(self) -> list[int]:
        """Element indices with every parent before its children."""
        return list(np.argsort(self._depth(), kind="stable"))

    def _depth(self) -> np.ndarray:
        d = np.zeros(self.order, dtype=np.int64)
        for x in range(1, self.order):
            d[x] = d[self.parent[x]] + 1  # parents are always discovered first
        return d


def closure_blown(field: FiniteField, n: int, gens, cap: int = DEFAULT_CAP) -> MatGroup:
    """Closure of matrices already given over ``F_l`` (``nm x nm``)."""
    l, N = field.l, n * field.m
    gens = np.array([np.asarray(g, dtype=np.int64) % l for g in gens], dtype=np.int64).reshape(-1, N, N)
    for g in gens:
        if rank_mod_p(g, l) != N:
            raise SingularGenerator(f"generator is not invertible over {field}")
    k = len(gens)
    ident = np.eye(N, dtype=np.int64)
    elems = [ident]
    index = {_key(ident): 0}
    parent, via = [-1], [-1]
    right = [[-1] * k]
    frontier = [0]
    while frontier:
        X = np.stack([elems[i] for i in frontier])
        nxt = []
        for s in range(k):
            Y = _bmul(X, gens[s], l)
            for i, y in zip(frontier, Y):
                kb = _key(y)
                j = index.get(kb)
                if j is None:
                    if len(elems) >= cap:
                        raise CapExceeded(cap, len(elems) + 1)
                    j = len(elems)
                    index[kb] = j
                    elems.append(y)
                    parent.append(i)
                    via.append(s)
                    right.append([-1] * k)
                    nxt.append(j)
                right[i][s] = j
        frontier = nxt
    return MatGroup(
        n=n,
        field=field,
        generators=gens,
        elements=np.stack(elems),
        parent=np.array(parent),
        via=np.array(via),
        right_mult=np.array(right, dtype=np.int64).reshape(len(elems), k),
        index=index,
    )


def group_closure(n: int, field: FiniteField, generators, cap: int = DEFAULT_CAP) -> MatGroup:
    """Group generated by ``n x n`` matrices of field codes."""
    blown = []
    for g in generators:
        g = np.asarray(g, dtype=np.int64)
        if g.shape != (n, n) or np.any(g < 0) or np.any(g >= field.q):
            raise SingularGenerator(f"generator must be an {n}x{n} matrix of codes in [0, {field.q})")
        blown.append(field.blowup(g))
    return closure_blown(field, n, blown, cap)


def extend_scalars(G: MatGroup, field: FiniteField, cap: int = DEFAULT_CAP) -> MatGroup:
    """The same group with entries viewed in a larger field of the same characteristic.

    Only groups defined over the prime field are supported.
    """
    codes = G.field.blowdown(G.generators)
    if G.field.m != 1 or field.l != G.l:
        raise ValueError("can only extend scalars from the prime field")
    return group_closure(G.n, field, list(codes), cap)


# ---------------------------------------------------------------- orders


def element_orders(G: MatGroup) -> np.ndarray:
    """Multiplicative order of every element, by batched powering."""
    l = G.l
    ident = np.eye(G.dim, dtype=np.int64)
    orders = np.zeros(G.order, dtype=np.int64)
    P = G.elements.copy()
    k = 1
    todo = np.arange(G.order)
    while todo.size:
        done = np.all(P == ident, axis=(1, 2))
        orders[todo[done]] = k
        todo, P = todo[~done], P[~done]
        P = _bmul(P, G.elements[todo], l)
        k += 1
    return orders


def element_order(M: np.ndarray, l: int) -> int:
    M = np.asarray(M, dtype=np.int64) % l
    ident = np.eye(M.shape[0], dtype=np.int64)
    P, k = M, 1
    while not np.array_equal(P, ident):
        P, k = P @ M % l, k + 1
    return k


def prime_to_l_elements(G: MatGroup) -> np.ndarray:
    """Indices of the elements whose order is prime to ``l``."""
    orders = element_orders(G)
    return np.nonzero(orders % G.l != 0)[0]


def span_rank_prime_to_l(G: MatGroup) -> int:
    """``F_q``-dimension of the span of the prime-to-``l`` elements in ``M_n(F_q)``."""
    idx = prime_to_l_elements(G)
    F = G.field
    m = F.m
    # F_q-span = F_l-span of the F_q-multiples by a basis of F_q over F_l
    rows = []
    for k in range(m):
        S = F.blowup(np.diag([F.l**k] * G.n))
        rows.append(_bmul(S, G.elements[idx], F.l))
    X = np.concatenate(rows)
    coords = _coords(F, X)
    r = rank_mod_p(coords, F.l)
    assert r % m == 0
    return r // m


def _coords(F: FiniteField, X: np.ndarray) -> np.ndarray:
    """``F_l`` coordinates (length ``n*n*m``) of blown-up matrices."""
    m = F.m
    N = X.shape[-1]
    n = N // m
    cols = X.reshape(X.shape[:-2] + (n, m, n, m))[..., :, :, :, 0]
    # order (i, j, k)
    return np.moveaxis(cols, -2, -1).reshape(X.shape[:-2] + (n * n * m,))


# ---------------------------------------------------------------- derived subgroup


def _power(M: np.ndarray, e: int, l: int) -> np.ndarray:
    P = np.eye(M.shape[0], dtype=np.int64)
    while e:
        if e & 1:
            P = P @ M % l
        M = M @ M % l
        e >>= 1
    return P


def _inverse_indices(G: MatGroup) -> np.ndarray:
    """``inv[x]`` with ``elements[inv[x]] = elements[x]^-1``."""
    orders = element_orders(G)
    return np.array([G.find(_power(G.elements[x], int(orders[x]) - 1, G.l)) for x in range(G.order)])


def _inv(M: np.ndarray, l: int) -> np.ndarray:
    return _power(M, element_order(M, l) - 1, l)


def subgroup(G: MatGroup, gens, cap: int = DEFAULT_CAP) -> MatGroup:
    return closure_blown(G.field, G.n, list(gens), cap)


def derived_subgroup(G: MatGroup, cap: int = DEFAULT_CAP) -> MatGroup:
    """``[G, G]`` as the normal closure of the generator commutators."""
    l = G.l
    gens = list(G.generators)
    invs = [_inv(g, l) for g in gens]
    comm = [a @ b % l @ ai % l @ bi % l for a, ai in zip(gens, invs) for b, bi in zip(gens, invs)]
    N = subgroup(G, comm, cap)
    while True:
        extra = {}
        for g, gi in zip(gens, invs):
            for h in N.generators:
                c = g @ h % l @ gi % l
                if c not in N:
                    extra.setdefault(_key(c), c)
        if not extra:
            return N
        N = subgroup(G, list(N.generators) + list(extra.values()), cap)


def derived_subgroup_bruteforce(G: MatGroup, cap: int = DEFAULT_CAP) -> MatGroup:
    """Closure of all commutators ``x y x^-1 y^-1``: quadratic, for small groups only."""
    l = G.l
    inv = _inverse_indices(G)
    E = G.elements
    seen = {}
    for x in range(G.order):
        C = _bmul(_bmul(_bmul(E[x][None], E, l), E[inv[x]][None], l), E[inv], l)
        for c in C:
            seen.setdefault(_key(c), c)
    return subgroup(G, list(seen.values()), cap)


def l_part(n: int, l: int) -> int:
    out = 1
    while n % l == 0:
        n //= l
        out *= l
    return out


def abelianization_l_part(G: MatGroup, l: int | None = None, cap: int = DEFAULT_CAP) -> int:
    l = G.l if l is None else l
    D = derived_subgroup(G, cap)
    assert G.order % D.order == 0
    return l_part(G.order // D.order, l)


def is_coprime_order(G: MatGroup) -> bool:
    return gcd(G.order, G.l) == 1
