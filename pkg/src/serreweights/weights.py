"""Serre weights and the explicit weight sets of a local mod-l representation.

Characters are handled through :mod:`serreweights.chars`.  A local
representation is only described by its restriction to inertia, so every
set computed here is a set of weight *classes* (weights up to
equivalence), and membership is decided by matching inertial characters.

Witnesses ``(J, delta)``:

* niveau 1 (reducible input): ``J[q] == 1`` iff the embedding at position
  ``q`` lies in ``J``;
* niveau 2 (irreducible input): ``J[q]`` selects which extension of the
  embedding at position ``q`` lies in ``J`` -- ``0`` for the niveau-``2f``
  position ``q``, ``1`` for ``q + f``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, Sequence

import numpy as np

from .chars import (
    CrysCharData,
    FieldParams,
    InertialChar,
    char_from_exponents,
    conjugate_c,
    crystalline_reduction,
    digits,
    inflate,
    inv,
    mul,
    trivial,
)
from .errors import (
    InvalidWitness,
    NonSemisimpleInput,
    NotALift,
    NotASerreWeight,
    ParamMismatch,
    PreconditionViolated,
    RamifiedField,
    ReducibleInduction,
)

IRREDUCIBLE = "irreducible"
SPLIT = "split"
NONSPLIT = "nonsplit"


@dataclass(frozen=True, order=True)
class WeightClass:
    """A Serre weight up to equivalence: difference vector and twist residue."""

    l: int
    f: int
    d: tuple[int, ...]
    t: int

    def representative(self) -> SerreWeight:
        a2 = digits(InertialChar(FieldParams(self.l, self.f), self.t))
        return SerreWeight(self.l, self.f, tuple((y + x, y) for x, y in zip(self.d, a2)))

    def __str__(self):
        return f"d={list(self.d)} t={self.t}"


@dataclass(frozen=True)
class SerreWeight:
    l: int
    f: int
    a: tuple[tuple[int, int], ...]

    def __post_init__(self):
        a = tuple((int(x), int(y)) for x, y in self.a)
        if len(a) != self.f:
            raise ParamMismatch(f"weight has {len(a)} pairs, expected f={self.f}")
        if any(x < y for x, y in a):
            raise NotASerreWeight(f"need a_1 >= a_2 in every pair, got {a}")
        object.__setattr__(self, "a", a)

    @classmethod
    def of(cls, l: int, pairs: Sequence[Sequence[int]]) -> SerreWeight:
        return cls(l, len(pairs), tuple(tuple(p) for p in pairs))

    @property
    def params(self) -> FieldParams:
        return FieldParams(self.l, self.f)

    @property
    def diffs(self) -> tuple[int, ...]:
        return tuple(x - y for x, y in self.a)

    def is_serre_weight(self) -> bool:
        return all(d <= self.l - 1 for d in self.diffs)

    def require_serre(self) -> None:
        if not self.is_serre_weight():
            raise NotASerreWeight(f"{self.a} has a difference above l-1={self.l - 1}")

    def twist(self) -> int:
        return char_from_exponents(self.params, [y for _, y in self.a]).canonical

    def __str__(self):
        return "(" + ",".join(f"({x},{y})" for x, y in self.a) + ")"


def weight_class(a: SerreWeight) -> WeightClass:
    a.require_serre()
    return WeightClass(a.l, a.f, a.diffs, a.twist())


def weights_equivalent(a: SerreWeight, b: SerreWeight) -> bool:
    if (a.l, a.f) != (b.l, b.f):
        raise ParamMismatch("weights for different (l, f)")
    a.require_serre()
    b.require_serre()
    if a.diffs != b.diffs:
        return False
    shift = [x[1] - y[1] for x, y in zip(a.a, b.a)]
    return char_from_exponents(a.params, shift).is_trivial()


def enumerate_weight_classes(l: int, f: int) -> Iterator[WeightClass]:
    """All ``l**f * (l**f - 1)`` classes, sorted by ``(d, t)``."""
    M = l**f - 1
    for d in itertools.product(range(l), repeat=f):
        for t in range(M):
            yield WeightClass(l, f, d, t)


def is_regular(a: SerreWeight) -> bool:
    a.require_serre()
    return all(d <= a.l - 3 for d in a.diffs)


def is_e_regular(a: SerreWeight, e: int) -> bool:
    a.require_serre()
    return all(d <= a.l - 1 - e for d in a.diffs)


def det_char(a: SerreWeight, e: int) -> InertialChar:
    """Inertial determinant forced on crystalline lifts of Hodge type a lift of ``a``."""
    a.require_serre()
    return char_from_exponents(a.params, [x + y + e for x, y in a.a])


def det_weight_set(chi: InertialChar, e: int) -> frozenset[WeightClass]:
    """Classes of Serre weights ``a`` with ``det_char(a, e) == chi``."""
    P = chi.params
    l, f, M = P.l, P.f_prime, P.modulus
    unit = char_from_exponents(P, [1] * f).canonical
    out = set()
    for d in itertools.product(range(l), repeat=f):
        c = (chi.canonical - char_from_exponents(P, d).canonical - e * unit) % M
        if c % 2:
            continue
        for t in (c // 2, c // 2 + M // 2):
            out.add(WeightClass(l, f, d, t))
    return frozenset(out)


# ---------------------------------------------------------------- representations


@dataclass(frozen=True)
class LocalModRep:
    """Inertial shape of ``rhobar : G_K -> GL_2``.

    ``chars`` is ``(psi,)`` at niveau ``2f`` for irreducible input,
    ``(chi1, chi2)`` at niveau ``f`` otherwise; for non-split input
    ``chi1`` is the sub and ``chi2`` the quotient.
    """

    l: int
    f: int
    e: int
    kind: str
    chars: tuple[InertialChar, ...]

    def __post_init__(self):
        if self.e < 1:
            raise ValueError(f"e must be >= 1, got {self.e}")
        if self.kind == IRREDUCIBLE:
            (psi,) = self.chars
            if psi.params != FieldParams(self.l, 2 * self.f):
                raise ParamMismatch(f"psi must have niveau 2f={2 * self.f}")
            if conjugate_c(psi) == psi:
                raise ReducibleInduction("psi == psi^c, the induction is reducible")
        elif self.kind in (SPLIT, NONSPLIT):
            if len(self.chars) != 2:
                raise ValueError("reducible input needs two characters")
            for c in self.chars:
                if c.params != FieldParams(self.l, self.f):
                    raise ParamMismatch(f"characters must have niveau f={self.f}")
        else:
            raise ValueError(f"unknown shape {self.kind!r}")

    @classmethod
    def irreducible(cls, l, f, e, psi: InertialChar) -> LocalModRep:
        return cls(l, f, e, IRREDUCIBLE, (psi,))

    @classmethod
    def split(cls, l, f, e, chi1: InertialChar, chi2: InertialChar) -> LocalModRep:
        return cls(l, f, e, SPLIT, (chi1, chi2))

    @classmethod
    def nonsplit(cls, l, f, e, sub: InertialChar, quotient: InertialChar) -> LocalModRep:
        return cls(l, f, e, NONSPLIT, (sub, quotient))

    @property
    def semisimple(self) -> bool:
        return self.kind != NONSPLIT

    def with_e(self, e: int) -> LocalModRep:
        return LocalModRep(self.l, self.f, e, self.kind, self.chars)

    def det(self) -> InertialChar:
        """Determinant restricted to inertia, at niveau ``f``.

        For irreducible input ``psi * psi^c`` is the inflation of a unique
        niveau-``f`` character, which is returned.
        """
        if self.kind != IRREDUCIBLE:
            return mul(*self.chars)
        psi = self.chars[0]
        E = (psi.canonical * (1 + self.l**self.f)) % psi.params.modulus
        q, r = divmod(E, self.l**self.f + 1)
        assert r == 0
        return InertialChar(FieldParams(self.l, self.f), q)


@dataclass(frozen=True)
class WitnessJD:
    niveau: int
    J: tuple[int, ...]
    delta: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"niveau": self.niveau, "J": list(self.J), "delta": list(self.delta)}


# ---------------------------------------------------------------- defining formulas


def niveau1_pair(a: SerreWeight, e: int, J: Sequence[int], delta: Sequence[int]):
    """Diagonal characters ``(chi1, chi2)`` attached to ``(a, J, delta)`` at niveau 1."""
    b1, b2 = [], []
    for (x, y), j, dl in zip(a.a, J, delta):
        if j:
            b1.append(x + 1 + dl)
            b2.append(y + e - 1 - dl)
        else:
            b1.append(y + dl)
            b2.append(x + e - dl)
    return char_from_exponents(a.params, b1), char_from_exponents(a.params, b2)


def niveau2_char(a: SerreWeight, e: int, J: Sequence[int], delta: Sequence[int]) -> InertialChar:
    """The niveau-``2f`` character ``psi`` attached to ``(a, J, delta)``.

    The second diagonal entry is its conjugate.
    """
    f = a.f
    b = [0] * (2 * f)
    for q, ((x, y), j, dl) in enumerate(zip(a.a, J, delta)):
        jpos, cpos = (q, q + f) if j == 0 else (q + f, q)
        b[jpos] = x + 1 + dl
        b[cpos] = y + e - 1 - dl
    return char_from_exponents(FieldParams(a.l, 2 * f), b)


def verify_witness(rep: LocalModRep, a: SerreWeight, w: WitnessJD) -> bool:
    """Definitional check that ``w`` realises ``rep`` restricted to inertia."""
    if len(w.J) != a.f or len(w.delta) != a.f:
        return False
    if any(not 0 <= d <= rep.e - 1 for d in w.delta):
        return False
    if rep.kind == IRREDUCIBLE:
        if w.niveau != 2:
            return False
        psi = niveau2_char(a, rep.e, w.J, w.delta)
        return psi in (rep.chars[0], conjugate_c(rep.chars[0]))
    if w.niveau != 1:
        return False
    pair = niveau1_pair(a, rep.e, w.J, w.delta)
    if rep.kind == NONSPLIT:
        return pair == rep.chars
    return pair in (rep.chars, rep.chars[::-1])


# ---------------------------------------------------------------- search


def delta_cap(rep: LocalModRep) -> int:
    """Number of ``delta_sigma`` values that need to be searched."""
    fp = 2 * rep.f if rep.kind == IRREDUCIBLE else rep.f
    return min(rep.e, rep.l**fp - 1)


class _Reach:
    """Residues ``sum_q delta_q * units[q] mod M`` with ``0 <= delta_q < cap``.

    Keeps, per stage, the smallest ``delta`` that first reaches each
    residue so that a witness can be read back.
    """

    def __init__(self, units: Sequence[int], cap: int, M: int):
        self.units = [u % M for u in units]
        self.M = M
        cur = np.zeros(M, dtype=bool)
        cur[0] = True
        self.back = []
        for u in self.units:
            order = M // gcd(u, M)
            best = np.full(M, -1, dtype=np.int64)
            for d in range(min(cap, order)):
                mask = np.roll(cur, (d * u) % M) & (best < 0)
                best[mask] = d
            self.back.append(best)
            cur = best >= 0
        self.reach = cur

    def __contains__(self, r: int) -> bool:
        return bool(self.reach[r % self.M])

    def delta_for(self, r: int) -> tuple[int, ...]:
        r %= self.M
        out = []
        for u, best in zip(reversed(self.units), reversed(self.back)):
            d = int(best[r])
            out.append(d)
            r = (r - d * u) % self.M
        assert r == 0
        return tuple(reversed(out))


def _choices(f: int) -> list[tuple[int, ...]]:
    return list(itertools.product((0, 1), repeat=f))


class _Searcher:
    """Witness search for one representation; reachable tables built once per ``J``."""

    def __init__(self, rep: LocalModRep):
        self.rep = rep
        l, f = rep.l, rep.f
        cap = delta_cap(rep)
        if rep.kind == IRREDUCIBLE:
            self.P = FieldParams(l, 2 * f)
            w = [self.P.position_weight(p) for p in range(2 * f)]
            self.reach = {}
            for J in _choices(f):
                units = [w[q + j * f] - w[q + (1 - j) * f] for q, j in enumerate(J)]
                self.reach[J] = _Reach(units, cap, self.P.modulus)
        else:
            self.P = FieldParams(l, f)
            units = [self.P.position_weight(q) for q in range(f)]
            shared = _Reach(units, cap, self.P.modulus)
            # prefer large J: with J everything the sub is the first entry
            self.reach = {J: shared for J in reversed(_choices(f))}
            self.det = rep.det()

    def find(self, a: SerreWeight) -> WitnessJD | None:
        rep = self.rep
        M = self.P.modulus
        if rep.kind == IRREDUCIBLE:
            target = rep.chars[0].canonical
            for J, R in self.reach.items():
                base = niveau2_char(a, rep.e, J, (0,) * a.f).canonical
                if (target - base) in R:
                    return WitnessJD(2, J, R.delta_for(target - base))
            return None
        if det_char(a, rep.e) != self.det:
            return None
        targets = [rep.chars[0]]
        if rep.kind == SPLIT and rep.chars[1] != rep.chars[0]:
            targets.append(rep.chars[1])
        for J, R in self.reach.items():
            base = niveau1_pair(a, rep.e, J, (0,) * a.f)[0].canonical
            for chi in targets:
                if (chi.canonical - base) in R:
                    return WitnessJD(1, J, R.delta_for(chi.canonical - base))
        return None


def _check_weight(rep: LocalModRep, a: SerreWeight) -> None:
    if (a.l, a.f) != (rep.l, rep.f):
        raise ParamMismatch(f"weight for (l={a.l}, f={a.f}) vs rep (l={rep.l}, f={rep.f})")
    a.require_serre()


def find_witness(rep: LocalModRep, a: SerreWeight) -> WitnessJD | None:
    """A pair ``(J, delta)`` realising ``rep`` on inertia, or ``None``."""
    _check_weight(rep, a)
    return _Searcher(rep).find(a)


@dataclass(frozen=True)
class WeightSet:
    """A set of weight classes plus a flag marking an inertial over-approximation."""

    classes: frozenset[WeightClass]
    superset: bool = False
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)

    def __contains__(self, item) -> bool:
        if isinstance(item, SerreWeight):
            item = weight_class(item)
        return item in self.classes

    def __iter__(self):
        return iter(sorted(self.classes))

    def __len__(self):
        return len(self.classes)


def _scan(rep: LocalModRep, classes: list[WeightClass]) -> dict:
    s = _Searcher(rep)
    out = {}
    for wc in classes:
        w = s.find(wc.representative())
        if w is not None:
            out[wc] = w
    return out


def _weight_set(rep: LocalModRep, superset: bool, jobs: int = 1) -> WeightSet:
    classes = list(enumerate_weight_classes(rep.l, rep.f))
    if jobs > 1 and len(classes) > 1:
        chunks = [classes[i::jobs] for i in range(jobs)]
        found = {}
        with ProcessPoolExecutor(jobs) as ex:
            for part in ex.map(_scan, [rep] * jobs, chunks):
                found.update(part)
    else:
        found = _scan(rep, classes)
    found = dict(sorted(found.items()))
    return WeightSet(frozenset(found), superset, found)


def schein_set(rep: LocalModRep, jobs: int = 1) -> WeightSet:
    if not rep.semisimple:
        raise NonSemisimpleInput("non-split input: use ghs_inertial_set")
    return _weight_set(rep, False, jobs)


def ghs_inertial_set(rep: LocalModRep, jobs: int = 1) -> WeightSet:
    """Classes passing the ordered inertial condition for a non-split extension.

    Always flagged ``superset``: whether the extension class itself lifts
    is not decided.
    """
    if rep.kind != NONSPLIT:
        raise ValueError("ghs_inertial_set takes non-split input")
    return _weight_set(rep, True, jobs)


def bdj_set(rep: LocalModRep, jobs: int = 1) -> WeightSet:
    if rep.e != 1:
        raise RamifiedField(f"K/Q_l must be unramified, got e={rep.e}")
    if rep.semisimple:
        return schein_set(rep, jobs)
    return ghs_inertial_set(rep, jobs)


def explicit_set(rep: LocalModRep, jobs: int = 1) -> WeightSet:
    if rep.semisimple:
        return schein_set(rep, jobs)
    return ghs_inertial_set(rep, jobs)


# ---------------------------------------------------------------- e >= l solvers


def _omega_power(P: FieldParams, exps: dict[int, int]) -> InertialChar:
    b = [0] * P.f_prime
    for p, x in exps.items():
        b[p % P.f_prime] += x
    return char_from_exponents(P, b)


def solve_niveau1_big_e(
    chi1: InertialChar, chi2: InertialChar, a: SerreWeight, e: int
) -> WitnessJD:
    """Witness with ``J`` everything for a split representation when ``e >= l``."""
    a.require_serre()
    if e < a.l:
        raise PreconditionViolated(f"need e >= l, got e={e} < {a.l}")
    if mul(chi1, chi2) != det_char(a, e):
        raise PreconditionViolated("determinant condition fails")
    shift = char_from_exponents(a.params, [x + 1 for x, _ in a.a])
    delta = digits(mul(chi1, inv(shift)))
    return WitnessJD(1, (1,) * a.f, delta)


def solve_niveau2_big_e(psi: InertialChar, a: SerreWeight, e: int) -> WitnessJD:
    """Witness for an induced representation when ``e >= l``.

    Residue embeddings of the quadratic extension are indexed ``i mod 2f``
    with ``omega_i = omega_{i+1} ** l``; index ``i`` lives at position
    ``i - 1`` and restricts to position ``(i - 1) mod f`` one level down.
    """
    a.require_serre()
    l, f = a.l, a.f
    P = FieldParams(l, 2 * f)
    if psi.params != P:
        raise ParamMismatch(f"psi must have niveau {2 * f}")
    if e < l:
        raise PreconditionViolated(f"need e >= l, got e={e} < {l}")
    if mul(psi, conjugate_c(psi)) != inflate(det_char(a, e)):
        raise PreconditionViolated("determinant condition fails")

    def pos(i):
        return (i - 1) % (2 * f)

    def A(i, j):
        return a.a[(i - 1) % f][j - 1]

    twist = {}
    for i in range(1, f + 1):
        twist[pos(i)] = -A(i, 1) - 1
    for i in range(f + 1, 2 * f + 1):
        twist[pos(i)] = -A(i, 2) - e + l
    phi1 = mul(psi, _omega_power(P, twist))

    if not phi1.is_trivial():
        eta = digits(phi1)
        J = (0,) * f
        delta = tuple(eta[pos(i)] for i in range(1, f + 1))
        return WitnessJD(2, J, delta)

    # phi' is trivial: perturb at index 0 and f
    k = A(0, 1) + 1 - A(0, 2)
    phi2 = mul(phi1, _omega_power(P, {pos(0): -k, pos(f): k}))
    assert not phi2.is_trivial()
    eta2 = digits(phi2)
    # J = indices {0, ..., f-1}; index 0 extends the embedding at position f-1
    J = tuple(1 if q == f - 1 else 0 for q in range(f))
    delta = [0] * f
    for i in range(1, f):
        delta[pos(i)] = eta2[pos(i)]
    delta[pos(f)] = e - 1 - eta2[pos(f)]
    return WitnessJD(2, J, tuple(delta))


def big_e_witness(rep: LocalModRep, a: SerreWeight) -> WitnessJD:
    """Constructive witness for semisimple ``rep`` with ``e >= l``."""
    _check_weight(rep, a)
    if rep.kind == IRREDUCIBLE:
        psi = rep.chars[0]
        return solve_niveau2_big_e(psi, a, rep.e)
    if rep.kind != SPLIT:
        raise NonSemisimpleInput("constructive solvers need semisimple input")
    return solve_niveau1_big_e(*rep.chars, a, rep.e)


# ---------------------------------------------------------------- lifts and HT data


@dataclass(frozen=True)
class HodgeTypeLift:
    weight: SerreWeight
    e: int
    slot: tuple[int, ...]

    def __post_init__(self):
        if len(self.slot) != self.weight.f or any(not 0 <= s < self.e for s in self.slot):
            raise NotALift(f"slots {self.slot} invalid for e={self.e}")

    def lam(self, q: int, j: int) -> tuple[int, int]:
        return self.weight.a[q] if j == self.slot[q] else (0, 0)

    def hodge_type(self, q: int, j: int) -> tuple[int, int]:
        """Sorted Hodge-Tate multiset ``{lambda_1 + 1, lambda_2}`` at ``(q, j)``."""
        x, y = self.lam(q, j)
        return tuple(sorted((x + 1, y)))


def lifts_of(a: SerreWeight, e: int) -> Iterator[HodgeTypeLift]:
    a.require_serre()
    for slot in itertools.product(range(e), repeat=a.f):
        yield HodgeTypeLift(a, e, slot)


def _k_sigma(lam: HodgeTypeLift, q: int, size: int) -> set[int]:
    others = [j for j in range(lam.e) if j != lam.slot[q]]
    return set(others[:size])


def _check_lift(a: SerreWeight, w: WitnessJD, lam: HodgeTypeLift, niveau: int) -> None:
    if lam.weight != a:
        raise NotALift("lift is for a different weight")
    if w.niveau != niveau or len(w.delta) != a.f or len(w.J) != a.f:
        raise InvalidWitness(f"witness {w} is not a niveau-{niveau} witness for f={a.f}")
    if any(not 0 <= d < lam.e for d in w.delta):
        raise InvalidWitness(f"delta {w.delta} outside [0, {lam.e - 1}]")


def ht_data_niveau1(a: SerreWeight, w: WitnessJD, lam: HodgeTypeLift):
    """Hodge-Tate tables ``(B, C)`` of the two characters of a diagonal lift.

    For embeddings outside ``J`` the set of slots carrying weight ``1`` on
    the second character has size ``e - 1 - delta``, matching the diagonal
    characters as parametrised by :func:`niveau1_pair`.
    """
    _check_lift(a, w, lam, 1)
    e = lam.e
    B = [[0] * e for _ in range(a.f)]
    C = [[0] * e for _ in range(a.f)]
    for q, ((x, y), inJ, dl) in enumerate(zip(a.a, w.J, w.delta)):
        s = lam.slot[q]
        first, second = (B, C) if inJ else (C, B)
        Ks = _k_sigma(lam, q, dl if inJ else e - 1 - dl)
        first[q][s], second[q][s] = x + 1, y
        for j in range(e):
            if j == s:
                continue
            first[q][j], second[q][j] = (1, 0) if j in Ks else (0, 1)
    P = a.params
    return CrysCharData(P, e, tuple(map(tuple, B))), CrysCharData(P, e, tuple(map(tuple, C)))


def ht_data_niveau2(a: SerreWeight, w: WitnessJD, lam: HodgeTypeLift) -> CrysCharData:
    """Hodge-Tate table, at niveau ``2f``, of the character inducing the lift."""
    _check_lift(a, w, lam, 2)
    e, f = lam.e, a.f
    B = [[0] * e for _ in range(2 * f)]
    for q, ((x, y), j, dl) in enumerate(zip(a.a, w.J, w.delta)):
        r1, r2 = (q, q + f) if j == 0 else (q + f, q)
        s = lam.slot[q]
        Ks = _k_sigma(lam, q, dl)
        B[r1][s], B[r2][s] = x + 1, y
        for t in range(e):
            if t == s:
                continue
            B[r1][t], B[r2][t] = (1, 0) if t in Ks else (0, 1)
    return CrysCharData(FieldParams(a.l, 2 * f), e, tuple(map(tuple, B)))


# ---------------------------------------------------------------- global sets


@dataclass(frozen=True)
class GlobalWeightSet:
    tuples: frozenset[tuple[WeightClass, ...]]
    superset: bool = False

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(sorted(self.tuples))


def global_weight_set(local_sets: Sequence[WeightSet | Iterable[WeightClass]]) -> GlobalWeightSet:
    """Product of local sets, one factor per chosen place above ``l``."""
    factors = []
    superset = False
    for s in local_sets:
        superset |= bool(getattr(s, "superset", False))
        factors.append(sorted(s.classes if isinstance(s, WeightSet) else s))
    return GlobalWeightSet(frozenset(itertools.product(*factors)), superset)


__all__ = [
    "IRREDUCIBLE",
    "SPLIT",
    "NONSPLIT",
    "WeightClass",
    "SerreWeight",
    "LocalModRep",
    "WitnessJD",
    "WeightSet",
    "HodgeTypeLift",
    "GlobalWeightSet",
    "weight_class",
    "weights_equivalent",
    "enumerate_weight_classes",
    "is_regular",
    "is_e_regular",
    "det_char",
    "det_weight_set",
    "niveau1_pair",
    "niveau2_char",
    "verify_witness",
    "delta_cap",
    "find_witness",
    "schein_set",
    "ghs_inertial_set",
    "bdj_set",
    "explicit_set",
    "solve_niveau1_big_e",
    "solve_niveau2_big_e",
    "big_e_witness",
    "lifts_of",
    "ht_data_niveau1",
    "ht_data_niveau2",
    "global_weight_set",
    "crystalline_reduction",
    "trivial",
]
