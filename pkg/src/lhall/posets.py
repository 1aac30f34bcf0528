"""Finite labeled posets on the ground set {1, ..., p}.

The ground set is always an initial segment of the positive integers, and the
integer value of an element doubles as its label: a cover x -< y with x > y is
the "strict" kind in everything built on top (partitions, descents), while
x < y gives the weak kind.  ``epsilon`` pins that convention down in one place.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import InvalidInputError, ResourceLimitError

DEFAULT_EXTENSION_CAP = 10
DEFAULT_COUNT_CAP = 16


def epsilon(x: int, y: int) -> int:
    """Sign of a cover x -< y: +1 when the labels ascend, -1 when they descend."""
    if x == y:
        raise InvalidInputError("epsilon needs two distinct elements")
    return 1 if x < y else -1


def _bits(mask):
    """Yield the elements packed into a bitmask (bit k-1 stands for element k)."""
    x = 1
    while mask:
        if mask & 1:
            yield x
        mask >>= 1
        x += 1


def _toposort(p, covers):
    succ = [[] for _ in range(p + 1)]
    indeg = [0] * (p + 1)
    for x, y in covers:
        succ[x].append(y)
        indeg[y] += 1
    ready = [x for x in range(p, 0, -1) if indeg[x] == 0]
    out = []
    while ready:
        x = ready.pop()
        out.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    if len(out) != p:
        raise InvalidInputError("cover relations contain a cycle")
    return out


def _above_masks(p, covers, topo):
    succ = [[] for _ in range(p + 1)]
    for x, y in covers:
        succ[x].append(y)
    above = [0] * (p + 1)
    for x in reversed(topo):
        m = 0
        for y in succ[x]:
            m |= (1 << (y - 1)) | above[y]
        above[x] = m
    return above


@dataclass(frozen=True)
class LabeledPoset:
    """Partial order on {1, ..., p}, stored by its cover pairs.

    ``covers`` holds pairs (x, y) meaning x -< y: x strictly below y with
    nothing in between.  Construction checks that the pairs are in range,
    acyclic, and irredundant (each pair really is a cover), so two equal
    posets always compare equal.
    """

    p: int
    covers: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool) or self.p < 0:
            raise InvalidInputError("p must be a nonnegative integer")
        pairs = set()
        for pair in self.covers:
            try:
                x, y = pair
            except (TypeError, ValueError):
                raise InvalidInputError(f"cover {pair!r} is not a pair") from None
            for v in (x, y):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise InvalidInputError(f"cover {pair!r} must contain integers")
            if not (1 <= x <= self.p and 1 <= y <= self.p):
                raise InvalidInputError(
                    f"cover ({x}, {y}) falls outside {{1, ..., {self.p}}}")
            if x == y:
                raise InvalidInputError(f"cover ({x}, {y}) is reflexive")
            pairs.add((x, y))
        object.__setattr__(self, "covers", frozenset(pairs))
        topo = _toposort(self.p, pairs)
        above = _above_masks(self.p, pairs, topo)
        succ = [[] for _ in range(self.p + 1)]
        for x, y in pairs:
            succ[x].append(y)
        for x, y in pairs:
            for z in succ[x]:
                if z != y and above[z] >> (y - 1) & 1:
                    raise InvalidInputError(
                        f"({x}, {y}) is implied by other covers; pass cover pairs only")
        object.__setattr__(self, "_topo", tuple(topo))
        object.__setattr__(self, "_above", tuple(above))

    def __repr__(self):
        return f"LabeledPoset({self.p}, {sorted(self.covers)})"

    @property
    def elements(self):
        return range(1, self.p + 1)

    def _check(self, x):
        if not isinstance(x, int) or not 1 <= x <= self.p:
            raise InvalidInputError(f"{x!r} is not an element of {{1, ..., {self.p}}}")

    def less(self, x, y):
        """True when x is strictly below y in the order."""
        self._check(x)
        self._check(y)
        return bool(self._above[x] >> (y - 1) & 1)

    def leq(self, x, y):
        return x == y or self.less(x, y)

    def above(self, x):
        """Elements strictly above x."""
        self._check(x)
        return frozenset(_bits(self._above[x]))

    def below(self, x):
        """Elements strictly below x."""
        self._check(x)
        return frozenset(y for y in self.elements if self._above[y] >> (x - 1) & 1)

    def minimal_elements(self):
        tops = {y for _, y in self.covers}
        return tuple(x for x in self.elements if x not in tops)

    def maximal_elements(self):
        bottoms = {x for x, _ in self.covers}
        return tuple(x for x in self.elements if x not in bottoms)

    def is_naturally_labeled(self):
        """True when every relation ascends, i.e. x -< y implies x < y."""
        return all(x < y for x, y in self.covers)

    def dual(self):
        """The same order with labels mirrored through x -> p + 1 - x.

        x -< y turns into (p+1-x) -< (p+1-y), so every cover keeps its
        direction while its sign flips: weak constraints trade places with
        strict ones in the partition regions.
        """
        n = self.p + 1
        return LabeledPoset(self.p, frozenset((n - x, n - y) for x, y in self.covers))


def make_chain(labels):
    """Chain labels[0] -< labels[1] -< ... where labels is a permutation of 1..p."""
    labels = tuple(labels)
    p = len(labels)
    if sorted(labels) != list(range(1, p + 1)):
        raise InvalidInputError("labels must be a permutation of 1..p")
    return LabeledPoset(p, frozenset(zip(labels, labels[1:])))


def make_antichain(p):
    """Antichain on {1, ..., p}: no relations at all."""
    return LabeledPoset(p, frozenset())


def ordinal_sum(P, Q):
    """P on {1..p}, Q relabeled up to {p+1..p+q}, all of P below all of Q."""
    p = P.p
    covers = set(P.covers)
    covers.update((x + p, y + p) for x, y in Q.covers)
    covers.update((x, y + p) for x in P.maximal_elements() for y in Q.minimal_elements())
    return LabeledPoset(p + Q.p, frozenset(covers))


def disjoint_union(P, Q):
    """P on {1..p} next to Q relabeled up to {p+1..p+q}, no relations between."""
    p = P.p
    covers = set(P.covers)
    covers.update((x + p, y + p) for x, y in Q.covers)
    return LabeledPoset(p + Q.p, frozenset(covers))


def ordinal_sum_of_antichains(sizes):
    """Antichain blocks stacked bottom to top; labels run in block order."""
    P = make_antichain(0)
    for a in sizes:
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise InvalidInputError("block sizes must be positive integers")
        P = ordinal_sum(P, make_antichain(a))
    return P


def from_relations(p, relations):
    """Build a poset from arbitrary strict relations x < y.

    The input need not be transitively closed or reduced; cycles are rejected.
    """
    adj = [0] * (p + 1)
    for pair in relations:
        try:
            x, y = pair
        except (TypeError, ValueError):
            raise InvalidInputError(f"relation {pair!r} is not a pair") from None
        if not (isinstance(x, int) and isinstance(y, int)
                and 1 <= x <= p and 1 <= y <= p and x != y):
            raise InvalidInputError(
                f"relation {pair!r} is not a pair of distinct elements of [{p}]")
        adj[x] |= 1 << (y - 1)
    for k in range(1, p + 1):
        kb = 1 << (k - 1)
        for x in range(1, p + 1):
            if adj[x] & kb:
                adj[x] |= adj[k]
    for x in range(1, p + 1):
        if adj[x] >> (x - 1) & 1:
            raise InvalidInputError("relations contain a cycle")
    covers = set()
    for x in range(1, p + 1):
        for y in _bits(adj[x]):
            if not any(adj[z] >> (y - 1) & 1 for z in _bits(adj[x])):
                covers.add((x, y))
    return LabeledPoset(p, frozenset(covers))


def _cap(value, env, default):
    if value is not None:
        return value
    raw = os.environ.get(env)
    return int(raw) if raw else default


def linear_extensions(P, max_p=None):
    """Yield the linear extensions of P as tuples, in lexicographic order.

    pi is a linear extension when pi_i -< pi_j in P forces i < j.  There can
    be p! of them, so p is capped up front (default DEFAULT_EXTENSION_CAP,
    overridable by max_p or the LHALL_MAX_P environment variable).
    """
    limit = _cap(max_p, "LHALL_MAX_P", DEFAULT_EXTENSION_CAP)
    if P.p > limit:
        raise ResourceLimitError(f"p = {P.p} exceeds the extension cap {limit}")
    indeg = [0] * (P.p + 1)
    succ = [[] for _ in range(P.p + 1)]
    for x, y in P.covers:
        succ[x].append(y)
        indeg[y] += 1
    prefix = []

    def rec(ready):
        if len(prefix) == P.p:
            yield tuple(prefix)
            return
        for x in sorted(ready):
            prefix.append(x)
            nxt = ready - {x}
            for y in succ[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    nxt.add(y)
            yield from rec(nxt)
            for y in succ[x]:
                indeg[y] += 1
            prefix.pop()

    yield from rec({x for x in P.elements if indeg[x] == 0})


def count_linear_extensions(P, max_p=None):
    """Number of linear extensions, by dynamic programming over down-sets.

    f(S) counts orderings of S that keep every element's down-set behind it;
    summing over possible last elements gives the recursion.
    """
    limit = _cap(max_p, "LHALL_MAX_P_COUNT", DEFAULT_COUNT_CAP)
    if P.p > limit:
        raise ResourceLimitError(f"p = {P.p} exceeds the counting cap {limit}")
    below = [0] * (P.p + 1)
    for x in P.elements:
        for y in _bits(P._above[x]):
            below[y] |= 1 << (x - 1)
    f = [0] * (1 << P.p)
    f[0] = 1
    for S in range(1, 1 << P.p):
        total = 0
        for x in _bits(S):
            if below[x] & ~S == 0:
                total += f[S ^ (1 << (x - 1))]
        f[S] = total
    return f[-1]


@dataclass(frozen=True)
class RankInfo:
    """Outcome of the rank computation.

    ranked   -- the cover constraints rho(y) - rho(x) = epsilon(x, y), with
                rho = 0 on minimal elements, admit a solution
    rho      -- that solution as a tuple indexed by element - 1, or None
    graded   -- ranked, and every maximal element has the same rho
    rank     -- the common value over maximal elements when graded, else None
    conflict -- two covers forcing different values when not ranked, else None
    """

    ranked: bool
    rho: tuple | None
    graded: bool
    rank: int | None
    conflict: tuple | None


def sign_rank(P):
    """Solve for the rank function rho, if it exists.

    rho is pinned to 0 on minimal elements and forced along covers: an
    ascending cover raises it by one, a descending cover lowers it by one.
    Processing elements in topological order either determines rho everywhere
    or exposes two lower covers that disagree.
    """
    lower = {y: [] for y in P.elements}
    for x, y in P.covers:
        lower[y].append(x)
    rho = {}
    for y in P._topo:
        if not lower[y]:
            rho[y] = 0
            continue
        vals = {x: rho[x] + epsilon(x, y) for x in sorted(lower[y])}
        first = next(iter(vals.items()))
        for x, v in vals.items():
            if v != first[1]:
                return RankInfo(False, None, False, None, ((first[0], y), (x, y)))
        rho[y] = first[1]
    maxima = P.maximal_elements()
    ranks = {rho[m] for m in maxima} if maxima else {0}
    graded = len(ranks) == 1
    rank = ranks.pop() if graded else None
    return RankInfo(True, tuple(rho[x] for x in P.elements), graded, rank, None)


def poset_to_document(P):
    """JSON-ready dict with deterministic key and cover ordering."""
    return {"p": P.p, "covers": [list(c) for c in sorted(P.covers)]}


def poset_from_document(doc):
    try:
        p = doc["p"]
        covers = doc["covers"]
    except (KeyError, TypeError):
        raise InvalidInputError("poset document needs 'p' and 'covers'") from None
    return LabeledPoset(p, frozenset(tuple(c) for c in covers))


def validate_smap(P, s):
    """Normalize a color-count map to a tuple indexed by element - 1.

    Accepts a sequence of length p or a dict keyed by the elements; every
    value must be a positive integer.
    """
    if isinstance(s, dict):
        if set(s) != set(P.elements):
            raise InvalidInputError("s must assign a value to every element")
        seq = [s[x] for x in P.elements]
    else:
        seq = list(s)
        if len(seq) != P.p:
            raise InvalidInputError(f"s has {len(seq)} entries for p = {P.p}")
    for v in seq:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InvalidInputError(f"s value {v!r} is not a positive integer")
    return tuple(seq)
