"""YAML input documents for the command line.

A representation document::

    l: 7
    f: 2
    e: 6
    shape: split            # irreducible | split | nonsplit
    characters:             # one niveau-2f vector, or sub then quotient
      - [6, 4]
      - [6, 3]
    weight: [[6, 0], [1, 0]]   # optional query weight

A group document either names a standard group::

    named: SL2(5)
    over: 25                # optional larger field

or lists generators, each entry a coefficient vector over the prime field
(constant term first) or a plain integer::

    n: 2
    l: 3
    m: 2
    modulus: [1, 0]         # optional, x^2 + 1
    generators:
      - [[[0], [1]], [[2], [0]]]
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import yaml

from .chars import FieldParams, char_from_exponents
from .errors import ParseError, SerreWeightsError
from .fields import FiniteField
from .groups import DEFAULT_CAP, MatGroup, group_closure
from .standard import standard_group
from .weights import IRREDUCIBLE, NONSPLIT, SPLIT, LocalModRep, SerreWeight


class _Doc:
    """Top-level mapping plus the line of each key, for error messages."""

    def __init__(self, text: str):
        try:
            node = yaml.compose(text)
            data = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            mark = getattr(exc, "problem_mark", None)
            raise ParseError(f"invalid YAML: {getattr(exc, 'problem', exc)}", line=mark.line + 1 if mark else None)
        if not isinstance(data, dict) or node is None:
            raise ParseError("document must be a mapping")
        self.data = data
        self.lines = {k.value: k.start_mark.line + 1 for k, _ in node.value}

    def has(self, key: str) -> bool:
        return key in self.data

    def get(self, key: str, kind=None, default=...):
        if key not in self.data:
            if default is ...:
                raise ParseError("missing required field", field=key)
            return default
        value = self.data[key]
        if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
            raise ParseError(f"expected an integer, got {value!r}", field=key, line=self.lines.get(key))
        if kind is str and not isinstance(value, str):
            raise ParseError(f"expected a string, got {value!r}", field=key, line=self.lines.get(key))
        return value

    def error(self, key: str, message: str) -> ParseError:
        return ParseError(message, field=key, line=self.lines.get(key))


def _int_vector(doc: _Doc, key: str, value, length: int | None = None) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise doc.error(key, f"expected a list of integers, got {value!r}")
    if length is not None and len(value) != length:
        raise doc.error(key, f"expected {length} entries, got {len(value)}")
    return tuple(value)


def _weight(doc: _Doc, key: str, l: int, f: int | None = None) -> SerreWeight:
    raw = doc.get(key)
    if not isinstance(raw, list) or not raw:
        raise doc.error(key, "expected a list of [a1, a2] pairs")
    pairs = tuple(_int_vector(doc, key, p, 2) for p in raw)
    if f is not None and len(pairs) != f:
        raise doc.error(key, f"expected {f} pairs, got {len(pairs)}")
    try:
        return SerreWeight.of(l, pairs)
    except SerreWeightsError as exc:
        raise doc.error(key, str(exc))


@dataclass(frozen=True)
class RepSpec:
    l: int
    f: int
    e: int
    shape: str
    characters: tuple[tuple[int, ...], ...]
    weight: tuple[tuple[int, int], ...] | None = None

    def to_rep(self) -> LocalModRep:
        fp = 2 * self.f if self.shape == IRREDUCIBLE else self.f
        chars = tuple(char_from_exponents(FieldParams(self.l, fp), c) for c in self.characters)
        return LocalModRep(self.l, self.f, self.e, self.shape, chars)

    def query(self) -> SerreWeight | None:
        return None if self.weight is None else SerreWeight.of(self.l, self.weight)

    def dump(self) -> str:
        d = {"l": self.l, "f": self.f, "e": self.e, "shape": self.shape, "characters": [list(c) for c in self.characters]}
        if self.weight is not None:
            d["weight"] = [list(p) for p in self.weight]
        return yaml.safe_dump(d, default_flow_style=None, sort_keys=False)


def parse_rep_spec(text: str) -> RepSpec:
    doc = _Doc(text)
    l, f, e = doc.get("l", int), doc.get("f", int), doc.get("e", int)
    try:
        FieldParams(l, f)
    except ValueError as exc:
        raise doc.error("l", str(exc))
    if e < 1:
        raise doc.error("e", "e must be >= 1")
    shape = doc.get("shape", str).lower()
    if shape not in (IRREDUCIBLE, SPLIT, NONSPLIT):
        raise doc.error("shape", f"unknown shape {shape!r}")
    raw = doc.get("characters")
    want, fp = (1, 2 * f) if shape == IRREDUCIBLE else (2, f)
    if not isinstance(raw, list) or len(raw) != want:
        raise doc.error("characters", f"{shape} needs {want} exponent vector(s)")
    chars = tuple(_int_vector(doc, "characters", c, fp) for c in raw)
    weight = None
    if doc.has("weight"):
        weight = _weight(doc, "weight", l, f).a
    spec = RepSpec(l, f, e, shape, chars, weight)
    try:
        spec.to_rep()
    except SerreWeightsError as exc:
        raise doc.error("characters", str(exc))
    return spec


@dataclass(frozen=True)
class CharSpec:
    l: int
    f: int
    e: int
    character: tuple[int, ...]

    def to_char(self):
        return char_from_exponents(FieldParams(self.l, self.f), self.character)


def parse_char_spec(text: str) -> CharSpec:
    doc = _Doc(text)
    l, f, e = doc.get("l", int), doc.get("f", int), doc.get("e", int)
    try:
        FieldParams(l, f)
    except ValueError as exc:
        raise doc.error("l", str(exc))
    return CharSpec(l, f, e, _int_vector(doc, "character", doc.get("character"), f))


def parse_equiv_spec(text: str) -> tuple[SerreWeight, SerreWeight]:
    doc = _Doc(text)
    l = doc.get("l", int)
    try:
        FieldParams(l, 1)
    except ValueError as exc:
        raise doc.error("l", str(exc))
    return _weight(doc, "a", l), _weight(doc, "b", l)


@dataclass(frozen=True)
class GroupSpec:
    named: str | None = None
    over: int | None = None
    n: int | None = None
    l: int | None = None
    m: int | None = None
    modulus: tuple[int, ...] | None = None
    generators: tuple = field(default=())

    def build(self, cap: int = DEFAULT_CAP) -> MatGroup:
        if self.named is not None:
            return standard_group(self.named, self.over, cap)
        F = FiniteField(self.l, self.m, self.modulus or ())
        gens = [np.array([[F.code(x) for x in row] for row in g], dtype=np.int64) for g in self.generators]
        return group_closure(self.n, F, gens, cap)

    def dump(self) -> str:
        if self.named is not None:
            d = {"named": self.named}
            if self.over is not None:
                d["over"] = self.over
        else:
            d = {"n": self.n, "l": self.l, "m": self.m}
            if self.modulus is not None:
                d["modulus"] = list(self.modulus)
            d["generators"] = [[[list(x) for x in row] for row in g] for g in self.generators]
        return yaml.safe_dump(d, default_flow_style=None, sort_keys=False)


def parse_group_spec(text: str) -> GroupSpec:
    doc = _Doc(text)
    if doc.has("named"):
        over = doc.get("over", int, None)
        return GroupSpec(named=doc.get("named", str), over=over)
    n, l = doc.get("n", int), doc.get("l", int)
    m = doc.get("m", int, 1)
    if n < 1:
        raise doc.error("n", "n must be positive")
    try:
        FieldParams(l, m)
    except ValueError as exc:
        raise doc.error("l", str(exc))
    modulus = None
    if doc.has("modulus"):
        modulus = _int_vector(doc, "modulus", doc.get("modulus"), m)
    raw = doc.get("generators")
    if not isinstance(raw, list):
        raise doc.error("generators", "expected a list of matrices")
    gens = []
    for g in raw:
        if not isinstance(g, list) or len(g) != n or any(not isinstance(r, list) or len(r) != n for r in g):
            raise doc.error("generators", f"each generator must be an {n}x{n} matrix")
        rows = []
        for r in g:
            row = []
            for x in r:
                c = [x] if isinstance(x, int) and not isinstance(x, bool) else x
                c = _int_vector(doc, "generators", c)
                if len(c) > m:
                    raise doc.error("generators", f"entry {x!r} has more than m={m} coefficients")
                row.append(tuple(v % l for v in c) + (0,) * (m - len(c)))
            rows.append(tuple(row))
        gens.append(tuple(rows))
    return GroupSpec(n=n, l=l, m=m, modulus=modulus, generators=tuple(gens))
