"""Long linkages in 3-connected graphs, via cycles and hammocks.

A linkage from X to Y is a pair of disjoint paths, each with one end in X and
one in Y; its length is the total number of edges.  A hammock adds two cross
paths R1, R2 from P1 to P2; its length is |E(R1)|.  The pipeline turns a long
path into a long cycle, the cycle into a linkage or a hammock, a singular
hammock into a non-singular one or a linkage, and a non-singular hammock into
a linkage.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from .errors import (InvalidHammock, InvalidWitness, NotSufficientlyConnected, NotThreeConnected,
                     OverlappingXY, SingularInput)
from .flows import DisjointPaths, augment_paths, menger_paths
from .graph_core import CycleWitness, Graph, PathWitness, check_path, is_three_connected
from .oracles import longest_cycle_exact, longest_path_exact, max_linkage_bruteforce

Path = Tuple[int, ...]


# path helpers ------------------------------------------------------------------------

def seg(path: Sequence[int], a: int, b: int) -> Path:
    """Subpath of ``path`` from a to b, in that direction."""
    i, j = path.index(a), path.index(b)
    return tuple(path[i:j + 1]) if i <= j else tuple(path[j:i + 1][::-1])


def cat(*parts: Sequence[int]) -> Path:
    """Concatenate paths where each part starts at the previous part's last vertex."""
    out = list(parts[0])
    for p in parts[1:]:
        if not p:
            continue
        if p[0] != out[-1]:
            raise InvalidWitness(f"cannot join {out[-1]} to {p[0]}")
        out.extend(p[1:])
    return tuple(out)


def rev(p: Sequence[int]) -> Path:
    return tuple(reversed(p))


def _len(p: Sequence[int]) -> int:
    return len(p) - 1


# witnesses ----------------------------------------------------------------------------

@dataclass
class StageRecord:
    stage: str
    input_length: int
    output_kind: str
    output_length: int
    required: str
    ok: bool


@dataclass
class Linkage:
    P1: Path
    P2: Path
    X: Tuple[int, int]
    Y: Tuple[int, int]
    stages: List[StageRecord] = field(default_factory=list)

    @property
    def paths(self) -> Tuple[PathWitness, PathWitness]:
        return (PathWitness(self.P1), PathWitness(self.P2))

    @property
    def length(self) -> int:
        return _len(self.P1) + _len(self.P2)

    def validate(self, g: Graph) -> "Linkage":
        for p in (self.P1, self.P2):
            check_path(g, p)
        if set(self.P1) & set(self.P2):
            raise InvalidWitness("linkage paths intersect")
        if {self.P1[0], self.P2[0]} != set(self.X) or {self.P1[-1], self.P2[-1]} != set(self.Y):
            raise InvalidWitness(f"linkage ends {self.P1[0]},{self.P2[0]} -> {self.P1[-1]},{self.P2[-1]} "
                                 f"do not match X={self.X}, Y={self.Y}")
        return self

    def to_json(self) -> dict:
        return {"kind": "linkage", "P1": list(self.P1), "P2": list(self.P2), "length": self.length}


def _linkage(g: Graph, X, Y, p: Path, q: Path) -> Linkage:
    """Orient two disjoint X-Y paths so that both start in X."""
    X, Y = tuple(X), tuple(Y)
    p = p if p[0] in X else rev(p)
    q = q if q[0] in X else rev(q)
    if p[0] != X[0]:
        p, q = q, p
    return Linkage(p, q, X, Y).validate(g)


@dataclass
class Hammock:
    """P1, P2 run from ``src`` to ``dst``; R1, R2 run from P1 to P2."""
    P1: Path
    P2: Path
    R1: Path
    R2: Path
    src: Tuple[int, int]
    dst: Tuple[int, int]

    x1 = property(lambda self: self.P1[0])
    y1 = property(lambda self: self.P1[-1])
    x2 = property(lambda self: self.P2[0])
    y2 = property(lambda self: self.P2[-1])
    s1 = property(lambda self: self.R1[0])
    t1 = property(lambda self: self.R1[-1])
    s2 = property(lambda self: self.R2[0])
    t2 = property(lambda self: self.R2[-1])

    @property
    def singular(self) -> bool:
        return self.s1 == self.s2

    @property
    def length(self) -> int:
        return _len(self.R1)

    def validate(self, g: Graph) -> "Hammock":
        try:
            for p in (self.P1, self.P2, self.R1, self.R2):
                check_path(g, p)
        except InvalidWitness as e:
            raise InvalidHammock(str(e)) from None
        P1, P2 = set(self.P1), set(self.P2)
        if P1 & P2:
            raise InvalidHammock("P1 and P2 intersect")
        if {self.x1, self.x2} != set(self.src) or {self.y1, self.y2} != set(self.dst):
            raise InvalidHammock("P1, P2 do not run from src to dst")
        for R in (self.R1, self.R2):
            if R[0] not in P1 or R[-1] not in P2 or set(R[1:-1]) & (P1 | P2):
                raise InvalidHammock(f"cross path {R} is not a P1-P2 path")
        common = set(self.R1) & set(self.R2)
        if common and common != {self.s1} | ({self.s2} if self.singular else set()):
            raise InvalidHammock("R1 and R2 meet outside a shared P1 end")
        if not self.singular and common:
            raise InvalidHammock("R1 and R2 intersect")
        if self.P1.index(self.s1) > self.P1.index(self.s2):
            raise InvalidHammock("s1, s2 out of order on P1")
        if self.P2.index(self.t1) > self.P2.index(self.t2):
            raise InvalidHammock("t1, t2 out of order on P2")
        return self

    def swapped(self) -> "Hammock":
        """(P2, P1, R1 reversed, R2 reversed); a hammock again when non-singular."""
        return Hammock(self.P2, self.P1, rev(self.R1), rev(self.R2), self.src, self.dst)

    def to_json(self) -> dict:
        return {"kind": "hammock", "P1": list(self.P1), "P2": list(self.P2), "R1": list(self.R1),
                "R2": list(self.R2), "singular": self.singular, "length": self.length}


def _require_3connected(g: Graph):
    if not is_three_connected(g):
        raise NotThreeConnected("graph is not 3-connected")


def _require_disjoint(X, Y):
    if len(set(X)) != 2 or len(set(Y)) != 2:
        raise ValueError("X and Y must be pairs of distinct vertices")
    if set(X) & set(Y):
        raise OverlappingXY(f"X={tuple(X)} and Y={tuple(Y)} intersect")


# long cycle ---------------------------------------------------------------------------

def long_cycle_3connected(g: Graph, budget: int = 10 ** 8) -> CycleWitness:
    """A cycle of length at least 2L/5, L the longest path length, from the exact oracle."""
    _require_3connected(g)
    L = longest_path_exact(g, budget).length
    c = longest_cycle_exact(g, budget)
    need = -(-2 * L // 5)
    if c.length < need:
        raise AssertionError(f"cycle {c.length} below 2L/5 = {need}")
    c.claimed_length = need
    c.trace = [f"longest path {L}; cycle {c.length} >= ceil(2*{L}/5) = {need}"]
    return c


# cycle -> linkage or hammock ------------------------------------------------------------

def _arc(cycle: Sequence[int], a: int, b: int, avoid=()) -> Path:
    """The a-b arc of the cycle that misses every vertex in ``avoid``."""
    n = len(cycle)
    i, j = cycle.index(a), cycle.index(b)
    fwd = tuple(cycle[(i + s) % n] for s in range((j - i) % n + 1))
    bwd = tuple(cycle[(i - s) % n] for s in range((i - j) % n + 1))
    bad = set(avoid)
    for p in (fwd, bwd):
        if not bad & set(p):
            return p
    raise ValueError("no arc avoids the given vertices")


def cycle_to_linkage_or_hammock(g: Graph, X, Y, C) -> Union[Linkage, Hammock]:
    """A linkage of length >= l/5 or a hammock (either direction) of length >= 2l/5."""
    _require_disjoint(X, Y)
    _require_3connected(g)
    X, Y = tuple(X), tuple(Y)
    cyc = tuple(C.vertices if isinstance(C, CycleWitness) else C)
    l = len(cyc)
    res = menger_paths(g, set(X) | set(Y), cyc, 4, strict=True)
    if isinstance(res, DisjointPaths):
        out = _four_paths(g, X, Y, cyc, res.paths)
    else:
        out = _three_paths(g, X, Y, cyc, res.vertices)
    if isinstance(out, Linkage):
        assert 5 * out.length >= l, (out.length, l)
    else:
        assert 5 * out.length >= 2 * l, (out.length, l)
    return out


def _four_paths(g, X, Y, cyc, paths):
    l = len(cyc)
    by_end = sorted(paths, key=lambda p: cyc.index(p[-1]))
    labels = ["X" if p[0] in X else "Y" for p in by_end]
    if labels in (["X", "Y", "X", "Y"], ["Y", "X", "Y", "X"]):
        u = [p[-1] for p in by_end]
        best = None
        for i in (0, 1):
            a, b, c, d = (by_end[(i + j) % 4] for j in range(4))
            link = (cat(a, _arc(cyc, a[-1], b[-1], (c[-1], d[-1])), rev(b)),
                    cat(c, _arc(cyc, c[-1], d[-1], (a[-1], b[-1])), rev(d)))
            cand = _linkage(g, X, Y, *link)
            if best is None or cand.length > best.length:
                best = cand
        return best
    # rotate so the cyclic order is X, X, Y, Y
    for r in range(4):
        if [labels[(r + j) % 4] for j in range(4)] == ["X", "X", "Y", "Y"]:
            P1, P2, P3, P4 = (by_end[(r + j) % 4] for j in range(4))
            break
    u1, u2, u3, u4 = P1[-1], P2[-1], P3[-1], P4[-1]
    C12 = _arc(cyc, u1, u2, (u3, u4))
    C23 = _arc(cyc, u2, u3, (u1, u4))
    C34 = _arc(cyc, u3, u4, (u1, u2))
    C14 = _arc(cyc, u1, u4, (u2, u3))
    if 5 * (_len(C14) + _len(C23)) >= l:
        return _linkage(g, X, Y, cat(P1, C14, rev(P4)), cat(P2, C23, rev(P3)))
    if _len(C12) >= _len(C34):
        h = Hammock(cat(P1, C14, rev(P4)), cat(P2, C23, rev(P3)), C12, rev(C34), X, Y)
    else:
        h = Hammock(cat(P4, rev(C14), rev(P1)), cat(P3, rev(C23), rev(P2)), rev(C34), C12, Y, X)
    return h.validate(g)


def _three_paths(g, X, Y, cyc, sep):
    res = menger_paths(g, set(X) | set(Y), cyc, 3, strict=True)
    if not isinstance(res, DisjointPaths):
        raise NotThreeConnected("fewer than three disjoint paths to the cycle")
    paths = list(res.paths)
    A, B = X, Y
    if sum(p[0] in X for p in paths) < 2:
        A, B = Y, X                       # two paths start in A, one in B
    P1, P2 = [p for p in paths if p[0] in A]
    (P3,) = [p for p in paths if p[0] in B]
    w = {}
    for name, p in (("1", P1), ("2", P2), ("3", P3)):
        hits = [v for v in p if v in sep]
        if len(hits) != 1:
            raise AssertionError(f"path {p} meets the 3-separator {sorted(sep)} {len(hits)} times")
        w[name] = hits[0]
    w3 = w["3"]
    targets = set(P1) | set(P2) | {w3}
    Q = augment_paths(g, B, targets, [seg(P3, P3[0], w3)], strict=True)
    (Q2,) = [q for q in Q if q[-1] == w3]
    (Q1,) = [q for q in Q if q[-1] != w3]
    if Q1[-1] in P2:
        P1, P2 = P2, P1
    q = Q1[-1]
    u1, u2, u3 = P1[-1], P2[-1], P3[-1]
    l = len(cyc)
    C12 = _arc(cyc, u1, u2, (u3,))
    C13 = _arc(cyc, u1, u3, (u2,))
    C23 = _arc(cyc, u2, u3, (u1,))
    tail3 = cat(seg(P3, u3, w3), rev(Q2))                 # u3 ... w3 ... into B
    first = cat(seg(P1, P1[0], q), rev(Q1))
    if 5 * _len(C23) >= l:
        return _linkage(g, X, Y, first, cat(P2, C23, tail3))
    if q != u1:
        return _linkage(g, X, Y, first, cat(P2, rev(C12), C13, tail3))
    P1h = cat(P1, rev(Q1))
    P2h = cat(P2, C23, tail3)
    if _len(C12) >= _len(C13):
        h = Hammock(P1h, P2h, C12, C13, A, B)
    else:
        h = Hammock(rev(P1h), rev(P2h), C13, C12, B, A)
    return h.validate(g)


# singular -> non-singular ----------------------------------------------------------------

def hammock_to_nonsingular(g: Graph, h: Hammock) -> Union[Hammock, Linkage]:
    """A non-singular hammock or a linkage, each of length >= l/2."""
    h.validate(g)
    if not h.singular:
        return h
    _require_3connected(g)
    l = h.length
    out = _resolve_singular(g, h)
    if isinstance(out, Hammock):
        out.validate(g)
        assert not out.singular
    assert 2 * out.length >= l, (out.length, l)
    return out


def _resolve_singular(g, h: Hammock):
    P1, P2, R1, R2 = h.P1, h.P2, h.R1, h.R2
    s, t1, t2 = h.s1, h.t1, h.t2
    x1, y1, x2, y2 = h.x1, h.y1, h.x2, h.y2
    i = P1.index(s)
    A, Bset = P1[:i], P1[i + 1:]
    link = lambda p, q: _linkage(g, h.src, h.dst, p, q)
    on_R1 = set(R1[1:-1])
    if A:
        targets = (set(P2) | set(R1) | set(R2) | set(P1[i:])) - {s, t1}
        Q = g.bfs_path(A, targets, avoid={s, t1})
        a, b = Q[0], Q[-1]
        if b in R2 or (b in P2 and P2.index(b) > P2.index(t1)):
            tail = cat(seg(R2, b, t2), seg(P2, t2, y2)) if b in R2 else seg(P2, b, y2)
            return link(cat(seg(P1, x1, a), Q, tail), cat(seg(P2, x2, t1), rev(R1), seg(P1, s, y1)))
        if b in P2:                                            # before t1
            return Hammock(rev(P1), rev(P2), R1, Q, h.dst, h.src)
        if b in Bset:
            return link(cat(seg(P1, x1, a), Q, seg(P1, b, y1)),
                        cat(seg(P2, x2, t1), rev(R1), R2, seg(P2, t2, y2)))
        assert b in on_R1
        if _len(seg(R1, b, t1)) >= _len(seg(R1, s, b)):
            return Hammock(P1, P2, cat(Q, seg(R1, b, t1)), R2, h.src, h.dst)
        return link(P2, cat(seg(P1, x1, a), Q, seg(R1, b, s), seg(P1, s, y1)))
    # A is empty, so B is not: search from B avoiding s and t1 (t2 stays reachable)
    targets = (set(P2) | set(R1) | set(R2)) - {s, t1}
    Q = g.bfs_path(Bset, targets, avoid={s, t1})
    b, c = Q[0], Q[-1]
    if c in R2:
        return Hammock(P1, P2, R1, cat(Q, seg(R2, c, t2)), h.src, h.dst)
    if c in P2 and P2.index(c) > P2.index(t1):
        return Hammock(P1, P2, R1, Q, h.src, h.dst)
    if c in P2:                                                # before t1
        return link(cat(seg(P1, x1, s), R1, seg(P2, t1, y2)),
                    cat(seg(P2, x2, c), rev(Q), seg(P1, b, y1)))
    assert c in on_R1
    first = link(cat(seg(P1, x1, s), seg(R1, s, c), rev(Q), seg(P1, b, y1)), P2)
    second = link(cat(seg(P2, x2, t1), seg(R1, t1, c), rev(Q), seg(P1, b, y1)),
                  cat(seg(P1, x1, s), R2, seg(P2, t2, y2)))
    return first if first.length >= second.length else second


# non-singular -> linkage --------------------------------------------------------------

def nonsingular_to_linkage(g: Graph, h: Hammock) -> Linkage:
    """A linkage of length >= l/2 from a non-singular hammock of length l."""
    if h.singular:
        raise SingularInput("hammock is singular")
    h.validate(g)
    l = h.length
    out = _nonsingular(g, h)
    assert 2 * out.length >= l, (out.length, l)
    return out


def _nonsingular(g, h: Hammock) -> Linkage:
    P1, P2, R1, R2 = h.P1, h.P2, h.R1, h.R2
    s1, s2, t1, t2 = h.s1, h.s2, h.t1, h.t2
    x1, x2 = h.x1, h.x2
    link = lambda p, q: _linkage(g, h.src, h.dst, p, q)
    A = set(seg(P1, x1, s1)) | set(R1) | set(seg(P2, x2, t1))
    B = set(seg(P1, s2, h.y1)) | set(R2) | set(seg(P2, t2, h.y2))
    try:
        paths = augment_paths(g, A, B, [seg(P1, s1, s2), seg(P2, t1, t2)], strict=True)
    except NotSufficientlyConnected:
        # only possible when A or B has two vertices, e.g. R2 is the edge y1y2
        if 2 * (_len(P1) + _len(P2)) >= h.length:
            return link(P1, P2)
        found = max_linkage_bruteforce(g, h.src, h.dst)
        return link(found[1], found[2])
    (Q1,) = [p for p in paths if p[0] == s1]
    (Q2,) = [p for p in paths if p[0] == t1]
    (Q,) = [p for p in paths if p[0] not in (s1, t1)]
    # rebuild the hammock around Q1, Q2 so that Q misses both paths
    Bseq = cat(rev(seg(P1, s2, h.y1)), R2, seg(P2, t2, h.y2))
    e1, e2 = Q1[-1], Q2[-1]

    def away(a, b):
        i, j = Bseq.index(a), Bseq.index(b)
        return Bseq[i::-1] if i < j else Bseq[i:]

    P1 = cat(seg(P1, x1, s1), Q1, away(e1, e2))
    P2 = cat(seg(P2, x2, t1), Q2, away(e2, e1))
    R2 = seg(Bseq, e1, e2)
    s2, t2 = e1, e2
    y1, y2 = P1[-1], P2[-1]
    a, b = Q[0], Q[-1]
    if a in P2 or (a in R1 and _len(seg(R1, a, t1)) < _len(seg(R1, s1, a))):
        P1, P2, R1, R2 = P2, P1, rev(R1), rev(R2)
        s1, s2, t1, t2 = R1[0], R2[0], R1[-1], R2[-1]
        x1, x2, y1, y2 = x2, x1, y2, y1
    l = _len(R1)

    def from_b():
        """Path from b along B to the end of P2 (b on R2 or on t2 P2 y2)."""
        if b in R2:
            return cat(seg(R2, b, t2), seg(P2, t2, y2))
        return seg(P2, b, y2)

    if a in P1:
        if b in P1:
            return link(cat(seg(P1, x1, a), Q, seg(P1, b, y1)),
                        cat(seg(P2, x2, t1), rev(R1), seg(P1, s1, s2), R2, seg(P2, t2, y2)))
        return link(cat(seg(P2, x2, t1), rev(R1), seg(P1, s1, y1)),
                    cat(seg(P1, x1, a), Q, from_b()))
    assert a in R1 and 2 * _len(seg(R1, a, t1)) >= l
    if b in P1:
        return link(cat(seg(P1, x1, s2), R2, seg(P2, t2, y2)),
                    cat(seg(P2, x2, t1), seg(R1, t1, a), Q, seg(P1, b, y1)))
    return link(P1, cat(seg(P2, x2, t1), seg(R1, t1, a), Q, from_b()))


# whole pipeline -------------------------------------------------------------------------

def find_linkage(g: Graph, X, Y, P) -> Linkage:
    """A linkage from X to Y of length >= l/25, l the length of the given path."""
    _require_disjoint(X, Y)
    _require_3connected(g)
    path = tuple(P.vertices if isinstance(P, PathWitness) else P)
    check_path(g, path)
    l = _len(path)
    stages = []
    C = long_cycle_3connected(g)
    stages.append(StageRecord("long cycle", l, "cycle", C.length, "2l/5", 5 * C.length >= 2 * l))
    lc = C.length
    out = cycle_to_linkage_or_hammock(g, X, Y, C)
    if isinstance(out, Linkage):
        stages.append(StageRecord("cycle to linkage or hammock", lc, "linkage", out.length, "l/5",
                                  5 * out.length >= lc))
    else:
        stages.append(StageRecord("cycle to linkage or hammock", lc, "hammock", out.length, "2l/5",
                                  5 * out.length >= 2 * lc))
        lh = out.length
        kind = "singular hammock" if out.singular else "non-singular hammock"
        out = hammock_to_nonsingular(g, out)
        stages.append(StageRecord(f"{kind} to non-singular", lh,
                                  "linkage" if isinstance(out, Linkage) else "hammock",
                                  out.length, "l/2", 2 * out.length >= lh))
        if isinstance(out, Hammock):
            ln = out.length
            out = nonsingular_to_linkage(g, out)
            stages.append(StageRecord("non-singular hammock to linkage", ln, "linkage", out.length,
                                      "l/2", 2 * out.length >= ln))
    result = _linkage(g, X, Y, out.P1, out.P2)
    result.stages = stages
    if 25 * result.length < l:
        raise AssertionError(f"linkage {result.length} below l/25 for l={l}")
    return result
