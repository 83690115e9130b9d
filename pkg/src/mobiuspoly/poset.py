"""Finite posets with rank functions, automorphisms, and the Möbius recursion.

Elements are identified by label strings; internally they are indices
0..n-1 in the order the labels were supplied.  The order relation is held
as reflexive up-sets (`up[i]` = indices of everything >= element i), from
which cover pairs and a deterministic linear extension are derived.  The
linear extension breaks topological ties by input position, so matrix
layouts downstream are reproducible.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import InputError

RANKED = "ranked"
GENERALIZED = "generalized"


class Poset:
    """Immutable finite partial order on labeled elements."""

    __slots__ = ("labels", "index", "up", "covers", "linext")

    def __init__(self, labels, up):
        """Internal; use closure_from_covers or the construction helpers."""
        self.labels = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.up = tuple(frozenset(s) for s in up)
        n = len(self.labels)
        for i in range(n):
            if i not in self.up[i]:
                raise InputError(f"relation not reflexive at {self.labels[i]!r}")
            for j in self.up[i]:
                if j != i and i in self.up[j]:
                    raise InputError(
                        f"relation not antisymmetric: {self.labels[i]!r} and {self.labels[j]!r}"
                    )
        self.covers = self._derive_covers()
        self.linext = self._derive_linext()

    def _derive_covers(self):
        covers = []
        for i, ups in enumerate(self.up):
            strict = ups - {i}
            for j in sorted(strict):
                if not any(k != j and j in self.up[k] for k in strict):
                    covers.append((i, j))
        covers.sort()
        return tuple(covers)

    def _derive_linext(self):
        n = len(self.labels)
        succ = [[] for _ in range(n)]
        indeg = [0] * n
        for i, j in self.covers:
            succ[i].append(j)
            indeg[j] += 1
        ready = [i for i in range(n) if indeg[i] == 0]
        heapq.heapify(ready)
        order = []
        while ready:
            i = heapq.heappop(ready)
            order.append(i)
            for j in succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(ready, j)
        if len(order) != n:  # cannot happen once up-sets passed antisymmetry
            raise InputError("order relation is cyclic")
        return tuple(order)

    def __len__(self):
        return len(self.labels)

    def _idx(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise InputError(f"unknown element {label!r}") from None

    def leq(self, a: str, b: str) -> bool:
        return self._idx(b) in self.up[self._idx(a)]

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def basis_labels(self) -> tuple:
        """Labels in linear-extension order (the matrix basis)."""
        return tuple(self.labels[i] for i in self.linext)

    def covers_labels(self) -> tuple:
        return tuple((self.labels[i], self.labels[j]) for i, j in self.covers)

    def minimal_labels(self) -> tuple:
        uppers = {j for _, j in self.covers}
        return tuple(lab for i, lab in enumerate(self.labels) if i not in uppers)

    def interval_labels(self, p: str, q: str) -> list:
        """Elements r with p <= r <= q, in linear-extension order."""
        pi, qi = self._idx(p), self._idx(q)
        members = {r for r in self.up[pi] if qi in self.up[r]}
        return [self.labels[i] for i in self.linext if i in members]

    def subposet(self, keep_labels) -> "Poset":
        """Restriction to the given labels, keeping their original order."""
        keep = [self._idx(lab) for lab in keep_labels]
        if not keep:
            raise InputError("empty poset")
        keep_sorted = sorted(keep)
        renumber = {old: new for new, old in enumerate(keep_sorted)}
        labels = [self.labels[i] for i in keep_sorted]
        up = [
            frozenset(renumber[j] for j in self.up[i] if j in renumber)
            for i in keep_sorted
        ]
        return Poset(labels, up)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.up == other.up

    def __repr__(self):
        return f"Poset({len(self.labels)} elements)"


def closure_from_covers(labels, covers) -> Poset:
    """Build a poset as the reflexive-transitive closure of cover pairs.

    `covers` may contain redundant (transitive) pairs; the stored cover set
    is recomputed canonically.  Rejects cycles (naming a witness) and
    unknown labels.
    """
    labels = tuple(labels)
    if not labels:
        raise InputError("empty poset")
    seen = set()
    for lab in labels:
        if lab in seen:
            raise InputError(f"duplicate label {lab!r}")
        seen.add(lab)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    succ = [set() for _ in range(n)]
    for a, b in covers:
        for lab in (a, b):
            if lab not in index:
                raise InputError(f"unknown label {lab!r} in cover ({a!r}, {b!r})")
        succ[index[a]].add(index[b])

    indeg = [0] * n
    for i in range(n):
        for j in succ[i]:
            indeg[j] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(ready)
    order = []
    remaining = set(range(n))
    while ready:
        i = heapq.heappop(ready)
        order.append(i)
        remaining.discard(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, j)
    if remaining:
        raise InputError("cycle detected: " + " < ".join(_cycle_witness(succ, labels, remaining)))

    up = [None] * n
    for i in reversed(order):
        s = {i}
        for j in succ[i]:
            s |= up[j]
        up[i] = frozenset(s)
    return Poset(labels, up)


def _cycle_witness(succ, labels, remaining):
    # Walk successors inside the unresolved set until a node repeats.
    start = min(remaining)
    path = [start]
    positions = {start: 0}
    cur = start
    while True:
        cur = min(j for j in succ[cur] if j in remaining)
        if cur in positions:
            cycle = path[positions[cur]:] + [cur]
            return [labels[i] for i in cycle]
        positions[cur] = len(path)
        path.append(cur)


@dataclass(frozen=True)
class RankAssignment:
    """Rank function on a poset's elements plus a ranked/generalized flag."""

    ranks: dict
    kind: str

    def __post_init__(self):
        if self.kind not in (RANKED, GENERALIZED):
            raise InputError(f"rank kind must be {RANKED!r} or {GENERALIZED!r}")

    def rank(self, label: str) -> int:
        try:
            return self.ranks[label]
        except KeyError:
            raise InputError(f"no rank for element {label!r}") from None


def classify_ranks(poset: Poset, ranks: dict) -> RankAssignment:
    """Wrap a rank dict, flagging it ranked iff the ranked axioms hold.

    Rank-axiom violations are not rejected here; validate() reports them.
    """
    minimal = set(poset.minimal_labels())
    zero_iff_min = all(
        (ranks.get(lab, -1) == 0) == (lab in minimal) for lab in poset.labels
    )
    steps_one = all(
        ranks.get(b, 0) == ranks.get(a, 0) + 1 for a, b in poset.covers_labels()
    )
    kind = RANKED if (zero_iff_min and steps_one) else GENERALIZED
    return RankAssignment(dict(ranks), kind)


def infer_ranks(poset: Poset) -> RankAssignment:
    """Longest-chain ranks: rank(p) = longest chain length from a minimal element.

    This is the unique candidate whenever a ranked structure exists; the
    result always satisfies the generalized axioms, and is flagged ranked
    iff every cover steps by exactly 1.
    """
    lower = {lab: [] for lab in poset.labels}
    for a, b in poset.covers_labels():
        lower[b].append(a)
    ranks: dict = {}
    for i in poset.linext:
        lab = poset.labels[i]
        parents = lower[lab]
        ranks[lab] = max((ranks[p] for p in parents), default=-1) + 1
    return classify_ranks(poset, ranks)


def validate(poset: Poset, ranks: RankAssignment) -> list:
    """Check every poset and rank axiom; return one diagnostic per violation."""
    diags = []
    n = len(poset)
    labels = poset.labels
    up = poset.up
    if n < 1:
        diags.append("poset has no elements")
    for i in range(n):
        if i not in up[i]:
            diags.append(f"not reflexive at {labels[i]}")
    for i in range(n):
        for j in up[i]:
            if j != i and i in up[j]:
                diags.append(f"not antisymmetric: {labels[i]} and {labels[j]}")
            if not up[j] <= up[i]:
                for k in up[j] - up[i]:
                    diags.append(
                        f"not transitive: {labels[i]} <= {labels[j]} <= {labels[k]} "
                        f"but not {labels[i]} <= {labels[k]}"
                    )
    if poset.covers != poset._derive_covers():
        diags.append("stored covers disagree with the order relation")
    pos = {i: t for t, i in enumerate(poset.linext)}
    for i in range(n):
        for j in up[i]:
            if pos[j] < pos[i]:
                diags.append(
                    f"linear extension violates order: {labels[i]} <= {labels[j]} "
                    f"but {labels[j]} is listed first"
                )

    for lab in labels:
        if lab not in ranks.ranks:
            diags.append(f"no rank for element {lab}")
        elif not isinstance(ranks.ranks[lab], int) or ranks.ranks[lab] < 0:
            diags.append(f"rank of {lab} is not a nonnegative integer")
    if any(lab not in ranks.ranks for lab in labels):
        return diags

    minimal = set(poset.minimal_labels())
    for lab in labels:
        r = ranks.ranks[lab]
        if r == 0 and lab not in minimal:
            diags.append(f"rank 0 requires a minimal element: {lab}")
        if lab in minimal and r != 0:
            diags.append(f"minimal element must have rank 0: {lab} has rank {r}")
    for i in range(n):
        ri = ranks.ranks[labels[i]]
        for j in up[i]:
            if j != i and ranks.ranks[labels[j]] <= ri:
                diags.append(
                    f"p<q requires rank(p)<rank(q): {labels[i]} < {labels[j]} "
                    f"with ranks {ri}, {ranks.ranks[labels[j]]}"
                )
    if ranks.kind == RANKED:
        for a, b in poset.covers_labels():
            if ranks.ranks[b] != ranks.ranks[a] + 1:
                diags.append(
                    f"cover must raise rank by exactly 1: ({a}, {b}) "
                    f"has ranks {ranks.ranks[a]}, {ranks.ranks[b]}"
                )
    return diags


def mobius_recursive(poset: Poset, p: str, q: str) -> int:
    """Möbius function by the interval recursion (the matrix-free oracle).

    mu(p,p) = 1, mu(p,q) = -sum_{p <= r < q} mu(p,r), and 0 when p is not
    below q.
    """
    pi, qi = poset._idx(p), poset._idx(q)
    if qi not in poset.up[pi]:
        return 0
    interval = [i for i in poset.linext if i in poset.up[pi] and qi in poset.up[i]]
    mu = {pi: 1}
    for r in interval[1:]:
        mu[r] = -sum(mu[s] for s in interval if s != r and r in poset.up[s])
    return mu[qi]


@dataclass(frozen=True)
class PosetAutomorphism:
    """Order- and rank-preserving permutation of a poset's elements."""

    poset: Poset
    ranks: RankAssignment
    image: dict

    def apply(self, label: str) -> str:
        return self.image[label]

    def fixed_labels(self) -> tuple:
        return tuple(lab for lab in self.poset.labels if self.image[lab] == lab)


def automorphism(poset: Poset, ranks: RankAssignment, image: dict) -> PosetAutomorphism:
    """Validate and wrap an explicit element map as a PosetAutomorphism."""
    for lab in image:
        if lab not in poset.index:
            raise InputError(f"unknown element {lab!r} in automorphism")
    missing = [lab for lab in poset.labels if lab not in image]
    if missing:
        raise InputError(f"automorphism gives no image for {missing[0]!r}")
    targets = set(image.values())
    if len(targets) != len(poset) or any(t not in poset.index for t in targets):
        raise InputError("automorphism image is not a bijection on the elements")
    for lab in poset.labels:
        if ranks.rank(image[lab]) != ranks.rank(lab):
            raise InputError(
                f"automorphism does not preserve rank at {lab!r}: "
                f"{ranks.rank(lab)} -> {ranks.rank(image[lab])}"
            )
    for a in poset.labels:
        for b in poset.labels:
            if poset.leq(a, b) != poset.leq(image[a], image[b]):
                raise InputError(
                    f"automorphism does not preserve order on ({a!r}, {b!r})"
                )
    return PosetAutomorphism(poset, ranks, dict(image))


def identity_automorphism(poset: Poset, ranks: RankAssignment) -> PosetAutomorphism:
    return PosetAutomorphism(poset, ranks, {lab: lab for lab in poset.labels})


def fixed_subposet(aut: PosetAutomorphism):
    """Subposet of fixed elements with inherited order and ranks.

    The inherited ranks are only guaranteed to be generalized (covers of
    the subposet may jump), so the result is flagged generalized.
    """
    fixed = aut.fixed_labels()
    if not fixed:
        raise InputError("fixed subposet empty")
    sub = aut.poset.subposet(fixed)
    ranks = RankAssignment({lab: aut.ranks.rank(lab) for lab in fixed}, GENERALIZED)
    return sub, ranks


def _profile(poset: Poset, ranks: RankAssignment):
    n = len(poset)
    down_deg = [0] * n
    up_deg = [0] * n
    for i, j in poset.covers:
        up_deg[i] += 1
        down_deg[j] += 1
    downsize = [0] * n
    for i in range(n):
        for j in poset.up[i]:
            if j != i:
                downsize[j] += 1
    return [
        (
            ranks.rank(poset.labels[i]),
            down_deg[i],
            up_deg[i],
            downsize[i],
            len(poset.up[i]) - 1,
        )
        for i in range(n)
    ]


def find_isomorphism(pa: Poset, ra: RankAssignment, pb: Poset, rb: RankAssignment):
    """Rank-preserving order isomorphism as a label map, or None.

    Backtracking in linear-extension order, pruned by per-element profiles
    (rank, cover degrees, up/down-set sizes).  Meant for small posets.
    """
    if len(pa) != len(pb):
        return None
    prof_a = _profile(pa, ra)
    prof_b = _profile(pb, rb)
    if sorted(prof_a) != sorted(prof_b):
        return None
    candidates = {
        i: [j for j in range(len(pb)) if prof_b[j] == prof_a[i]] for i in range(len(pa))
    }
    order = list(pa.linext)
    assigned: dict = {}
    used = set()

    def extend(t: int) -> bool:
        if t == len(order):
            return True
        i = order[t]
        for j in candidates[i]:
            if j in used:
                continue
            ok = True
            for i2, j2 in assigned.items():
                if (j2 in pb.up[j]) != (i2 in pa.up[i]) or (j in pb.up[j2]) != (i in pa.up[i2]):
                    ok = False
                    break
            if ok:
                assigned[i] = j
                used.add(j)
                if extend(t + 1):
                    return True
                del assigned[i]
                used.discard(j)
        return False

    if not extend(0):
        return None
    return {pa.labels[i]: pb.labels[j] for i, j in assigned.items()}


def is_isomorphic(pa: Poset, ra: RankAssignment, pb: Poset, rb: RankAssignment) -> bool:
    return find_isomorphism(pa, ra, pb, rb) is not None
