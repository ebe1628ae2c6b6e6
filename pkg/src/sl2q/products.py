"""Products of conjugacy classes.

The product of two conjugacy classes is closed under conjugation, hence a
union of whole classes.  These helpers compute which classes appear, how
many, and the group-wide minimum of that count over noncentral pairs.

Fixing the second factor is enough: conjugating both factors only
conjugates the product, so the class set of {X*B : X in A's orbit} equals
that of the full double product (the tests verify this against double
enumeration for small q).

Orbits come from a breadth-first closure under conjugation by the
transvection generators [[1,x],[0,1]] and [[1,0],[x,1]], x running over a
GF(p)-basis; that is O(orbit size) instead of O(group order) per class.
The conjugate-by-every-element construction stays available as an oracle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .classes import ClassLabel, _trace_kinds, class_table, label_sort_key
from .field import Field
from .matrices import Mat2, _conj4, _mul4, _same_field, det, enumerate_sl2

CSV_HEADER = "q,p,m,a,b,eta,n_traces,elapsed_ms"


@dataclass(frozen=True)
class ProductReport:
    """One class-product computation: operands, class count, classes seen,
    traces seen, and wall time."""

    q: int
    p: int
    m: int
    modulus: tuple[int, ...]
    label_a: ClassLabel
    label_b: ClassLabel
    num_classes: int
    labels: tuple[ClassLabel, ...]
    traces: tuple[int, ...]
    elapsed_ms: float

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "m": self.m,
            "modulus": list(self.modulus),
            "a": str(self.label_a),
            "b": str(self.label_b),
            "eta": self.num_classes,
            "labels": [str(l) for l in self.labels],
            "traces": list(self.traces),
            "elapsed_ms": self.elapsed_ms,
        }

    @staticmethod
    def from_json(d: dict) -> "ProductReport":
        return ProductReport(
            d["q"], d["p"], d["m"], tuple(d["modulus"]),
            ClassLabel.parse(d["a"]), ClassLabel.parse(d["b"]),
            d["eta"], tuple(ClassLabel.parse(s) for s in d["labels"]),
            tuple(d["traces"]), d["elapsed_ms"],
        )

    def csv_row(self) -> str:
        return (
            f"{self.q},{self.p},{self.m},{self.label_a},{self.label_b},"
            f"{self.num_classes},{len(self.traces)},{self.elapsed_ms:.3f}"
        )


def _generator_pairs(F: Field):
    neg = F._neg
    gens = []
    for k in range(F.m):
        x = F.p**k
        gens.append(((1, x, 0, 1), (1, neg[x], 0, 1)))
        gens.append(((1, 0, x, 1), (1, 0, neg[x], 1)))
    return gens


def _orbit_bfs(F: Field, a4: tuple) -> list[tuple]:
    cache = F._cache.setdefault("orbits", {})
    orbit = cache.get(a4)
    if orbit is None:
        mul, add = F._mul, F._add
        gens = _generator_pairs(F)
        seen = {a4}
        stack = [a4]
        while stack:
            cur = stack.pop()
            for g, gi in gens:
                y = _mul4(mul, add, _mul4(mul, add, gi, cur), g)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        orbit = list(seen)
        cache[a4] = orbit
    return orbit


def _orbit_full(F: Field, a4: tuple) -> set[tuple]:
    mul, add, neg = F._mul, F._add, F._neg
    return {
        _conj4(mul, add, neg, (C.a, C.b, C.c, C.d), a4)
        for C in enumerate_sl2(F)
    }


def conjugacy_orbit(F: Field, A: Mat2, method: str = "generators") -> frozenset[Mat2]:
    """The conjugation orbit of a determinant-one matrix.

    ``generators`` is the BFS closure; ``full`` conjugates by every group
    element and exists as the oracle the BFS is checked against.
    """
    _same_field(F, A)
    if det(F, A) != 1:
        raise ValueError("orbits are computed for determinant-one matrices")
    a4 = (A.a, A.b, A.c, A.d)
    if method == "generators":
        tuples = _orbit_bfs(F, a4)
    elif method == "full":
        tuples = _orbit_full(F, a4)
    else:
        raise ValueError(f"unknown orbit method {method!r}")
    q = F.q
    return frozenset(Mat2(t[0], t[1], t[2], t[3], q) for t in tuples)


def _label_tuples(F: Field, orbit: list[tuple], b4: tuple) -> set[tuple]:
    # label every X*B without building Mat2 objects; see classify() for the
    # branch logic (scalars only ever land in the repeated-root bucket)
    mul, add, neg, sq = F._mul, F._add, F._neg, F._sq
    kinds = _trace_kinds(F)
    ba, bb, bc, bd = b4
    out: set[tuple] = set()
    for xa, xb, xc, xd in orbit:
        pa = add[mul[xa][ba]][mul[xb][bc]]
        pb = add[mul[xa][bb]][mul[xb][bd]]
        pc = add[mul[xc][ba]][mul[xd][bc]]
        pd = add[mul[xc][bb]][mul[xd][bd]]
        info = kinds[add[pa][pd]]
        k = info[0]
        if k == "U":
            if pc:
                out.add(("U", info[1], sq[neg[pc]]))
            elif pb:
                out.add(("U", info[1], sq[pb]))
            else:
                out.add(("Z", pa, True))
        elif k == "D":
            out.add(("D", info[1], True))
        else:
            out.add(("W", add[pa][pd], True))
    return out


def class_product_labels(F: Field, A: Mat2, B: Mat2) -> frozenset[ClassLabel]:
    """Labels of every conjugacy class appearing in the product of A's and
    B's classes."""
    _same_field(F, A, B)
    if det(F, A) != 1 or det(F, B) != 1:
        raise ValueError("class products are defined for determinant-one matrices")
    orbit = _orbit_bfs(F, (A.a, A.b, A.c, A.d))
    return frozenset(ClassLabel(*t) for t in _label_tuples(F, orbit, (B.a, B.b, B.c, B.d)))


def product_trace_set(F: Field, A: Mat2, B: Mat2) -> frozenset[int]:
    """Traces occurring in the product of the two classes; never more values
    than there are classes in it."""
    _same_field(F, A, B)
    if det(F, A) != 1 or det(F, B) != 1:
        raise ValueError("class products are defined for determinant-one matrices")
    mul, add = F._mul, F._add
    ba, bb, bc, bd = B.a, B.b, B.c, B.d
    out = set()
    for xa, xb, xc, xd in _orbit_bfs(F, (A.a, A.b, A.c, A.d)):
        out.add(add[add[mul[xa][ba]][mul[xb][bc]]][add[mul[xc][bb]][mul[xd][bd]]])
    return frozenset(out)


def label_trace(F: Field, label: ClassLabel) -> int:
    """The trace shared by every matrix in the labelled class."""
    if label.kind == "Z" or label.kind == "U":
        return F._add[label.x][label.x]
    if label.kind == "D":
        return F._add[label.x][F._inv[label.x]]
    return label.x


def product_report(F: Field, label_a: ClassLabel, label_b: ClassLabel) -> ProductReport:
    """Compute the class decomposition of the product of two labelled
    classes, using the canonical representatives (the result is
    class-invariant)."""
    table = class_table(F)
    rep_a, rep_b = table.rep(label_a), table.rep(label_b)
    t0 = time.perf_counter()
    labels = class_product_labels(F, rep_a, rep_b)
    elapsed = (time.perf_counter() - t0) * 1000.0
    ordered = tuple(sorted(labels, key=label_sort_key))
    traces = tuple(sorted({label_trace(F, l) for l in ordered}))
    return ProductReport(
        F.q, F.p, F.m, F.modulus, label_a, label_b,
        len(ordered), ordered, traces, elapsed,
    )


def min_product_classes(F: Field) -> tuple[int, tuple[ClassLabel, ClassLabel]]:
    """Minimum number of classes in a product over unordered noncentral
    pairs, with the first witness pair in table order.

    Products are symmetric in their operands, so unordered pairs suffice.
    """
    table = class_table(F)
    labels = table.noncentral_labels()
    best_n: int | None = None
    best_pair: tuple[ClassLabel, ClassLabel] | None = None
    for i, la in enumerate(labels):
        ra = table.rep(la)
        orbit = _orbit_bfs(F, (ra.a, ra.b, ra.c, ra.d))
        for lb in labels[i:]:
            rb = table.rep(lb)
            n = len(_label_tuples(F, orbit, (rb.a, rb.b, rb.c, rb.d)))
            if best_n is None or n < best_n:
                best_n, best_pair = n, (la, lb)
    assert best_n is not None and best_pair is not None
    return best_n, best_pair
