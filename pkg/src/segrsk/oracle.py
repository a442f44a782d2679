"""Brute-force reference implementations backing the test suite and checks.

Everything here recomputes a main-path result by exhaustion: Dilworth width
via bipartite matching, permissibility by trying every chain against every
injective increasing assignment, tableau counts by hook lengths, and peeling
determinism by re-running every admissible depth-class enumeration.  Oracles
refuse oversized instances instead of sampling.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from math import comb, factorial

from .errors import PreconditionError, SizeGuardExceeded
from .multisegment import Multisegment, Segment
from .rsk import _depth_classes, _kv_from_classes
from .tableaux import Partition

PERMISSIBLE_GUARD = 8
KV_GUARD = 6


@dataclass(frozen=True, slots=True)
class EnumerationBounds:
    """Closed support interval and a cap on the number of segments."""

    support_min: int
    support_max: int
    max_segments: int

    def __post_init__(self):
        if self.support_min > self.support_max:
            raise ValueError("support_min exceeds support_max")
        if self.max_segments < 0:
            raise ValueError("max_segments must be non-negative")

    def segments(self) -> tuple[Segment, ...]:
        """All segments inside the support box, in lexicographic order."""
        return tuple(
            Segment(b, e)
            for b in range(self.support_min, self.support_max + 1)
            for e in range(b, self.support_max + 1)
        )

    def count(self) -> int:
        """Number of multisegments the bounds enumerate."""
        n = len(self.segments())
        return sum(comb(n + k - 1, k) for k in range(self.max_segments + 1))


def enumerate_multisegments(bounds: EnumerationBounds) -> Iterator[Multisegment]:
    """Every multisegment within the bounds exactly once, smallest sizes first."""
    pool = bounds.segments()
    for size in range(bounds.max_segments + 1):
        for combo in itertools.combinations_with_replacement(pool, size):
            yield Multisegment(combo)


def dilworth_width(m: Multisegment) -> int:
    """Minimum chain cover: occurrences minus a maximum matching on ll-pairs."""
    segs = m.segments
    n = len(segs)
    adj = [[j for j in range(n) if segs[i].ll(segs[j])] for i in range(n)]
    match_right: list[int | None] = [None] * n

    def augment(i: int, seen: list[bool]) -> bool:
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                if match_right[j] is None or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    matching = 0
    for i in range(n):
        if augment(i, [False] * n):
            matching += 1
    return n - matching


def brute_permissible(ladder: Multisegment, m: Multisegment) -> bool:
    """Ground-truth permissibility by exhausting chains and assignments."""
    if not ladder.is_ladder():
        raise PreconditionError(f"first component is not a ladder: {ladder}")
    if len(m) > PERMISSIBLE_GUARD:
        raise SizeGuardExceeded(f"{len(m)} occurrences exceed {PERMISSIBLE_GUARD}")
    intervals = [(s.b, s.e) for s in reversed(ladder.segments)]
    npos = len(intervals)
    values = sorted(set(m.segments), key=Segment.lex_key)
    for size in range(1, len(values) + 1):
        for subset in itertools.combinations(values, size):
            # lex order extends ll, so a chain reads descending right-to-left
            chain = list(reversed(subset))
            if any(not chain[t + 1].ll(chain[t]) for t in range(size - 1)):
                continue
            if size > npos:
                return False
            found = False
            for positions in itertools.combinations(range(1, npos + 1), size):
                if all(
                    intervals[p - 1][0] <= x.e <= intervals[p - 1][1]
                    for x, p in zip(chain, positions)
                ):
                    found = True
                    break
            if not found:
                return False
    return True


def hook_length_count(mu: Partition) -> int:
    """Standard tableau count by the hook length formula."""
    conj = mu.conjugate()
    product = 1
    for i, j in mu.cells():
        product *= (mu.part(i) - j) + (conj.part(j) - i) + 1
    return factorial(mu.size()) // product


def kv_choice_independence(m: Multisegment) -> bool:
    """Re-run one peeling step under every admissible class enumeration."""
    if len(m) > KV_GUARD:
        raise SizeGuardExceeded(f"{len(m)} occurrences exceed {KV_GUARD}")
    if not m:
        raise PreconditionError("cannot peel the empty multisegment")
    segs = m.segments
    classes = _depth_classes(segs)
    per_class: list[list[list[int]]] = []
    for idxs in classes.values():
        valid = []
        for perm in itertools.permutations(idxs):
            ok = all(
                segs[perm[r]].b <= segs[perm[r + 1]].b
                and segs[perm[r]].e >= segs[perm[r + 1]].e
                for r in range(len(perm) - 1)
            )
            if ok:
                valid.append(list(perm))
        per_class.append(valid)
    keys = list(classes.keys())
    outputs = set()
    for choice in itertools.product(*per_class):
        chosen = dict(zip(keys, choice))
        outputs.add(_kv_from_classes(segs, chosen))
        if len(outputs) > 1:
            return False
    return True
