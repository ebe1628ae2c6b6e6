"""Conjugacy classes of the determinant-one group over GF(q).

Every class gets a compact canonical label:

* ``Z(r)``          scalar r*I with r*r == 1 (the center);
* ``D(r)``          diagonalizable over GF(q) with eigenvalue pair
                    {r, 1/r}, r not +-1, keyed by the smaller code;
* ``U(s,+)/U(s,-)`` non-scalar with repeated eigenvalue s (s*s == 1),
                    split by the square class of the off-diagonal
                    parameter (the ``-`` variant exists only for odd q);
* ``W(w)``          characteristic polynomial x**2 - w*x + 1 irreducible
                    over GF(q), keyed by the trace w.

Labels biject with conjugacy classes, so label equality is the similarity
test.  The eigenvalue analysis is done by a linear scan over GF(q) rather
than discriminant formulas: it is uniform across characteristics (the
char-2 discriminant degenerates) and O(q) is negligible here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .field import Field
from .matrices import Mat2, det, mat, sl2_order

_KIND_ORDER = {"Z": 0, "D": 1, "U": 2, "W": 3}
_LABEL_RE = re.compile(r"^([ZDUW])\((\d+)(?:,([+-]))?\)$")


class ClassLabel(NamedTuple):
    kind: str
    x: int
    square: bool = True

    def __str__(self) -> str:
        if self.kind == "U":
            return f"U({self.x},{'+' if self.square else '-'})"
        return f"{self.kind}({self.x})"

    @staticmethod
    def parse(text: str) -> "ClassLabel":
        m = _LABEL_RE.match(text.strip())
        if not m:
            raise ValueError(f"bad class label {text!r}")
        kind, x, sign = m.group(1), int(m.group(2)), m.group(3)
        if (kind == "U") != (sign is not None):
            raise ValueError(f"bad class label {text!r}: the +/- marker belongs to U labels only")
        return ClassLabel(kind, x, sign != "-")


def label_sort_key(label: ClassLabel) -> tuple[int, int, int]:
    """Deterministic output order: kind, then payload codes."""
    return (_KIND_ORDER[label.kind], label.x, 0 if label.square else 1)


@dataclass(frozen=True)
class ClassEntry:
    label: ClassLabel
    rep: Mat2
    size: int


@dataclass(frozen=True)
class ClassTable:
    """All conjugacy classes over GF(q) in deterministic order
    (central, then D, U, W families, each by ascending code)."""

    q: int
    entries: tuple[ClassEntry, ...]

    def __post_init__(self):
        assert sum(e.size for e in self.entries) == sl2_order(self.q)

    @cached_property
    def _by_label(self) -> dict[ClassLabel, ClassEntry]:
        return {e.label: e for e in self.entries}

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, label: ClassLabel) -> ClassEntry:
        try:
            return self._by_label[label]
        except KeyError:
            raise ValueError(f"no conjugacy class {label} over GF({self.q})") from None

    def rep(self, label: ClassLabel) -> Mat2:
        return self.entry(label).rep

    def size(self, label: ClassLabel) -> int:
        return self.entry(label).size

    def labels(self) -> list[ClassLabel]:
        return [e.label for e in self.entries]

    def noncentral_labels(self) -> list[ClassLabel]:
        return [e.label for e in self.entries if e.label.kind != "Z"]

    def to_json(self, F: Field) -> dict:
        return {
            "q": self.q,
            "p": F.p,
            "m": F.m,
            "modulus": list(F.modulus),
            "order": sl2_order(self.q),
            "classes": [
                {"label": str(e.label), "rep": e.rep.rows(), "size": e.size}
                for e in self.entries
            ],
        }


def _trace_kinds(F: Field) -> list[tuple]:
    """Per-trace eigenvalue analysis: index t holds ('D', min_eigenvalue),
    ('U', s), or ('W',).

    Built by running r over the nonzero codes: x**2 - t*x + 1 has root pair
    {r, 1/r} exactly when t = r + 1/r, a repeated root forces r*r == 1, and
    traces hit by no pair are the irreducible ones.
    """
    got = F._cache.get("trace_kinds")
    if got is not None:
        return got
    add, inv = F._add, F._inv
    kinds: list[tuple] = [("W",)] * F.q
    for r in range(1, F.q):
        ri = inv[r]
        t = add[r][ri]
        if r == ri:
            kinds[t] = ("U", r)
        elif r < ri:
            kinds[t] = ("D", r)
    F._cache["trace_kinds"] = kinds
    return kinds


def irreducible_traces(F: Field) -> list[int]:
    """Ascending w with x**2 - w*x + 1 irreducible over GF(q).

    There are (q-1)/2 of them for odd q and q/2 for even q.
    """
    kinds = _trace_kinds(F)
    return [t for t in range(F.q) if kinds[t] == ("W",)]


def class_table(F: Field) -> ClassTable:
    """Canonical representatives and class sizes, cached per field.

    Sizes are the closed counts (central 1, D: q(q+1), U: (q*q-1)/2 for odd
    q and q*q-1 for even q, W: q(q-1)); the test suite validates them
    against brute-force orbits for small q.
    """
    got = F._cache.get("class_table")
    if got is not None:
        return got
    q = F.q
    neg1 = F._neg[1]
    roots_of_one = [1] if q % 2 == 0 else sorted({1, neg1})
    entries = []
    for r in roots_of_one:
        entries.append(ClassEntry(ClassLabel("Z", r), mat(F, r, 0, 0, r), 1))
    for r in range(2, q):
        ri = F._inv[r]
        if r < ri:
            entries.append(ClassEntry(ClassLabel("D", r), mat(F, r, 0, 0, ri), q * (q + 1)))
    u_size = q * q - 1 if q % 2 == 0 else (q * q - 1) // 2
    u_params = (1,) if q % 2 == 0 else (1, F.least_nonsquare)
    for s in roots_of_one:
        for u in u_params:
            entries.append(ClassEntry(ClassLabel("U", s, u == 1), mat(F, s, u, 0, s), u_size))
    for w in irreducible_traces(F):
        entries.append(ClassEntry(ClassLabel("W", w), mat(F, 0, 1, neg1, w), q * (q - 1)))
    table = ClassTable(q, tuple(entries))
    F._cache["class_table"] = table
    return table


def classify(F: Field, M: Mat2) -> ClassLabel:
    """Canonical label of M's conjugacy class; requires det(M) == 1.

    For the repeated-eigenvalue non-scalar case the off-diagonal square
    class is read from m12 when m21 == 0 and from -m21 otherwise: every
    conjugate of [[s,u],[0,s]] has m12 = u*d*d and m21 = -u*c*c, so both
    entries carry u's square class.
    """
    if det(F, M) != 1:
        raise ValueError("classify requires determinant 1")
    if M.b == 0 and M.c == 0 and M.a == M.d:
        return ClassLabel("Z", M.a)
    kinds = _trace_kinds(F)
    t = F._add[M.a][M.d]
    info = kinds[t]
    if info[0] == "D":
        return ClassLabel("D", info[1])
    if info[0] == "W":
        return ClassLabel("W", t)
    u = F._neg[M.c] if M.c else M.b
    return ClassLabel("U", info[1], F._sq[u])


def are_conjugate(F: Field, M: Mat2, N: Mat2) -> bool:
    return classify(F, M) == classify(F, N)
