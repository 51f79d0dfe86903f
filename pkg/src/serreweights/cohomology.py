"""``H^0`` and ``H^1`` of a finite matrix group with coefficients in ``gl_n``.

The adjoint module ``gl_n(F_q)`` is handled as an ``F_l``-space of
dimension ``D = n*n*m``; every ``F_l``-dimension is divided by ``m`` at the
end to get ``F_q``-dimensions.  Cocycles follow ``f(gh) = f(g) + g.f(h)``.
"""

from __future__ import annotations

import numpy as np

from .groups import MatGroup, _coords, _inv
from .linalg import RowSpace, matmul_mod, rank_mod_p


def _conj_matrix(G: MatGroup, g: np.ndarray) -> np.ndarray:
    """``D x D`` matrix over ``F_l`` of ``X -> g X g^-1`` on coordinates."""
    F, n, m, l = G.field, G.n, G.field.m, G.l
    D = n * n * m
    basis = np.zeros((D, n, n), dtype=np.int64)
    for b in range(D):
        i, rest = divmod(b, n * m)
        j, k = divmod(rest, m)
        basis[b, i, j] = l**k
    Xb = np.stack([F.blowup(B) for B in basis])
    gi = _inv(g, l)
    Y = np.matmul(np.matmul(g, Xb) % l, gi) % l
    return _coords(F, Y).T.copy()


def generator_actions(G: MatGroup) -> np.ndarray:
    return np.stack([_conj_matrix(G, s) for s in G.generators]) if len(G.generators) else np.zeros((0,))


def all_actions(G: MatGroup) -> np.ndarray:
    """Action matrix of every element, built along the spanning tree."""
    gens = generator_actions(G)
    D = G.n * G.n * G.field.m
    A = np.zeros((G.order, D, D), dtype=np.int64)
    A[0] = np.eye(D, dtype=np.int64)
    for x in G.tree_order()[1:]:
        A[x] = matmul_mod(A[G.parent[x]], gens[G.via[x]], G.l)
    return A


def fixed_subspace_dim(G: MatGroup) -> int:
    """``F_q``-dimension of ``gl_n^G``."""
    D = G.n * G.n * G.field.m
    if len(G.generators) == 0:
        return G.n * G.n
    gens = generator_actions(G)
    M = np.concatenate([a - np.eye(D, dtype=np.int64) for a in gens]) % G.l
    r = D - rank_mod_p(M, G.l)
    assert r % G.field.m == 0
    return r // G.field.m


def coboundary_dim(G: MatGroup) -> int:
    return G.n * G.n - fixed_subspace_dim(G)


def cocycle_dim(G: MatGroup, chunk: int = 512) -> int:
    """``F_q``-dimension of ``Z^1`` by propagating generator values along the tree.

    The unknowns are the values on the generators.  Every element gets
    ``f(x) = C[x] u`` from its tree path, and every Cayley edge
    ``x -> x s`` must then satisfy the cocycle rule.
    """
    l, m = G.l, G.field.m
    k = len(G.generators)
    D = G.n * G.n * m
    if k == 0:
        return 0
    A = all_actions(G).astype(np.int16)
    C = np.zeros((G.order, D, D * k), dtype=np.int16)
    for x in G.tree_order()[1:]:
        p, s = G.parent[x], G.via[x]
        C[x] = C[p]
        C[x][:, s * D : (s + 1) * D] = (C[x][:, s * D : (s + 1) * D] + A[p]) % l
    rs = RowSpace(D * k, l)
    for start in range(0, G.order, chunk):
        xs = np.arange(start, min(start + chunk, G.order))
        for s in range(k):
            R = C[G.right_mult[xs, s]].astype(np.int64) - C[xs]
            R[:, :, s * D : (s + 1) * D] -= A[xs]
            rs.add((R % l).reshape(-1, D * k))
            if rs.rank == D * k:
                break
    z = D * k - rs.rank
    assert z % m == 0
    return z // m


def h1_adjoint(G: MatGroup) -> int:
    """``dim H^1(G, gl_n)`` over the entry field."""
    return cocycle_dim(G) - coboundary_dim(G)


def _mult_table(G: MatGroup) -> np.ndarray:
    l = G.l
    T = np.zeros((G.order, G.order), dtype=np.int64)
    for x in range(G.order):
        Y = np.matmul(G.elements[x], G.elements) % l
        T[x] = [G.find(y) for y in Y]
    return T


def h1_bruteforce(T: np.ndarray, A: np.ndarray, p: int) -> int:
    """``F_p``-dimension of ``H^1`` from every function and every cocycle equation.

    ``T`` is the multiplication table (identity need not be first) and
    ``A[g]`` the action matrix of ``g`` on the module ``F_p^D``.
    """
    order, D = A.shape[0], A.shape[1]
    N = order * D
    eye = np.eye(D, dtype=np.int64)
    rs = RowSpace(N, p)
    hs = np.arange(order)
    for g in range(order):
        # rows for f(gh) - f(g) - A_g f(h) over all h
        R = np.zeros((order, D, N), dtype=np.int64)
        cols = np.arange(D)
        for h in hs:
            R[h, cols, T[g, h] * D + cols] += 1
            R[h, cols, g * D + cols] -= 1
            R[h, :, h * D : (h + 1) * D] -= A[g]
        rs.add((R % p).reshape(-1, N))
    z = N - rs.rank
    # coboundaries: f(g) = g.X - X
    b = rank_mod_p(np.concatenate([(A[g] - eye) % p for g in range(order)]), p)
    return z - b


def h1_adjoint_bruteforce(G: MatGroup, max_order: int = 400) -> int:
    """``dim H^1(G, gl_n)`` by :func:`h1_bruteforce`.

    Independent of the generators and of the spanning tree; quadratic in
    ``|G|`` so only meant for small groups.
    """
    if G.order > max_order:
        raise ValueError(f"group of order {G.order} too large for the brute-force oracle")
    # actions computed directly by conjugation, not along the tree
    A = np.stack([_conj_matrix(G, g) for g in G.elements])
    h = h1_bruteforce(_mult_table(G), A, G.l)
    assert h % G.field.m == 0
    return h // G.field.m
