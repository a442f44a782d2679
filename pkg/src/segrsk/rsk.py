"""Knuth-Viennot peeling and the recursive RSK transform of multisegments.

One peeling step computes the depth of every segment occurrence (longest
strictly increasing chain under the ll order starting there), enumerates each
depth class with begins weakly increasing and ends weakly decreasing, recycles
end points along the cycle permutation of each class, and splits off a ladder
from the class-final occurrences.  Iterating until nothing remains yields the
RSK transform; its length is the width, the minimal number of ladders summing
to the input.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import InvariantViolation, PreconditionError, ShapeViolation
from .multisegment import Multisegment, Segment
from .tableaux import BitableauPair, InvertedSSYT


@dataclass(frozen=True, slots=True)
class DepthTable:
    """Depth per occurrence, aligned with the canonical segment order."""

    depths: tuple[int, ...]

    @property
    def entries(self) -> tuple[tuple[int, int], ...]:
        return tuple(enumerate(self.depths))

    def max_depth(self) -> int:
        return max(self.depths)


def _depth_list(segs: Sequence[Segment]) -> list[int]:
    """Longest ll-increasing chain length starting at each occurrence, minus one."""
    n = len(segs)
    # process in decreasing lex order so every ll-larger segment is done first
    order = sorted(range(n), key=lambda i: segs[i].lex_key(), reverse=True)
    depth = [0] * n
    for i in order:
        best = -1
        for j in range(n):
            if segs[i].ll(segs[j]) and depth[j] > best:
                best = depth[j]
        depth[i] = best + 1
    return depth


def depth_function(m: Multisegment) -> DepthTable:
    if not m:
        raise PreconditionError("depth of the empty multisegment is undefined")
    return DepthTable(tuple(_depth_list(m.segments)))


def _depth_classes(segs: Sequence[Segment]) -> dict[int, list[int]]:
    """Occurrence indices per depth, each class sorted (b asc, e desc).

    Same-depth segments are pairwise ll-incomparable, so this stable sort is
    always a valid enumeration; the nested-interval condition is asserted.
    """
    depth = _depth_list(segs)
    classes: dict[int, list[int]] = {}
    for i, d in enumerate(depth):
        classes.setdefault(d, []).append(i)
    for d, idxs in classes.items():
        idxs.sort(key=lambda i: (segs[i].b, -segs[i].e))
        for a, b in zip(idxs, idxs[1:]):
            if segs[a].b > segs[b].b or segs[a].e < segs[b].e:
                raise InvariantViolation(
                    f"depth class {d} admits no nested enumeration: "
                    f"{[str(segs[i]) for i in idxs]}"
                )
    return classes


def _kv_from_classes(
    segs: Sequence[Segment], classes: dict[int, list[int]]
) -> tuple[Multisegment, Multisegment]:
    """One peeling step for a fixed choice of per-class enumerations."""
    succ: dict[int, int] = {}
    finals: list[int] = []
    for idxs in classes.values():
        for a, b in zip(idxs, idxs[1:]):
            succ[a] = b
        succ[idxs[-1]] = idxs[0]
        finals.append(idxs[-1])
    final_set = set(finals)
    ladder_segs = []
    rest_segs = []
    for i in range(len(segs)):
        star = Segment(segs[i].b, segs[succ[i]].e)
        (ladder_segs if i in final_set else rest_segs).append(star)
    return Multisegment(ladder_segs), Multisegment(rest_segs)


def knuth_viennot(m: Multisegment) -> tuple[Multisegment, Multisegment]:
    """One RSK peeling step: (ladder, rest) with wt conserved.

    Postconditions (asserted): the first component is a ladder, the pair is
    permissible, and the weights add back to wt(m).
    """
    if not m:
        raise PreconditionError("cannot peel the empty multisegment")
    segs = m.segments
    ladder, rest = _kv_from_classes(segs, _depth_classes(segs))
    if not ladder.is_ladder():
        raise InvariantViolation(f"peeled component of {m} is not a ladder: {ladder}")
    if ladder.weight() + rest.weight() != m.weight():
        raise InvariantViolation(f"weight not conserved when peeling {m}")
    if not is_permissible_pair(ladder, rest):
        raise InvariantViolation(f"peeling {m} produced a non-permissible pair")
    return ladder, rest


@dataclass(frozen=True, slots=True)
class LadderSequence:
    """Ordered tuple of ladders; empty entries are allowed as explicit gaps."""

    ladders: tuple[Multisegment, ...] = ()

    def __post_init__(self):
        for i, lad in enumerate(self.ladders):
            if lad and not lad.is_ladder():
                raise ShapeViolation(f"entry {i + 1} is not a ladder: {lad}")

    @classmethod
    def rsk_shaped(cls, ladders: Sequence[Multisegment]) -> LadderSequence:
        """Strict constructor for RSK output: no gaps, sizes weakly decreasing."""
        sizes = [len(lad) for lad in ladders]
        if any(s == 0 for s in sizes):
            raise ShapeViolation("RSK output contains an empty ladder")
        if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
            raise ShapeViolation(f"ladder sizes not weakly decreasing: {sizes}")
        return cls(tuple(ladders))

    def __len__(self) -> int:
        return len(self.ladders)

    def __iter__(self):
        return iter(self.ladders)

    def __getitem__(self, i: int) -> Multisegment:
        return self.ladders[i]

    def __str__(self) -> str:
        return " ; ".join(str(lad) for lad in self.ladders)

    def to_json(self) -> list[list[list[int]]]:
        return [lad.to_json() for lad in self.ladders]


def rsk_transform(m: Multisegment) -> LadderSequence:
    """Iterate the peeling map until nothing remains.

    The empty multisegment maps to the empty sequence by convention.
    """
    ladders = []
    rest = m
    while rest:
        ladder, rest = knuth_viennot(rest)
        ladders.append(ladder)
    return LadderSequence.rsk_shaped(ladders)


def width(m: Multisegment) -> int:
    """Minimal number of ladders summing to m; 0 for the empty multisegment."""
    return len(rsk_transform(m))


def is_permissible_pair(ladder: Multisegment, m: Multisegment) -> bool:
    """Every ll-chain of m embeds order-compatibly into the ladder intervals.

    A chain x_1 >> x_2 >> ... needs an increasing injective assignment of
    ladder positions with e(x_t) inside the assigned interval.  Greedy
    earliest-position matching is exact here, so a memoized DFS over
    (chain head, minimal usable position) decides all chains at once.
    """
    if not ladder.is_ladder():
        raise PreconditionError(f"first component is not a ladder: {ladder}")
    if not m:
        return True
    # position s = 1..l walks the ladder from its ll-largest segment down
    intervals = [(s.b, s.e) for s in reversed(ladder.segments)]
    npos = len(intervals)
    values = sorted(set(m.segments), key=Segment.lex_key)
    below: dict[Segment, list[Segment]] = {
        x: [y for y in values if y.ll(x)] for x in values
    }
    memo: dict[tuple[Segment, int], bool] = {}

    def matchable(x: Segment, s: int) -> bool:
        key = (x, s)
        cached = memo.get(key)
        if cached is not None:
            return cached
        star = next(
            (t for t in range(s, npos + 1) if intervals[t - 1][0] <= x.e <= intervals[t - 1][1]),
            None,
        )
        ok = star is not None and all(matchable(y, star + 1) for y in below[x])
        memo[key] = ok
        return ok

    return all(matchable(x, 1) for x in values)


def bitableau_of(m: Multisegment) -> BitableauPair:
    """The bitableau whose rows carry the RSK ladders of m.

    Row i holds the begins of the i-th ladder in strictly decreasing order
    (P) and the matching end-plus-one values (Q).  Validity of the tableaux,
    permissibility of the pair and the round trip through ladders_of are all
    asserted rather than assumed.
    """
    from .tableaux import ladders_of

    if not m:
        raise PreconditionError("empty multisegment has no bitableau")
    ladders = rsk_transform(m)
    p_rows = []
    q_rows = []
    for lad in ladders:
        desc = tuple(reversed(lad.segments))
        p_rows.append(tuple(s.b for s in desc))
        q_rows.append(tuple(s.e + 1 for s in desc))
    pair = BitableauPair(InvertedSSYT(tuple(p_rows)), InvertedSSYT(tuple(q_rows)))
    if not pair.is_permissible():
        raise InvariantViolation(f"bitableau of {m} is not permissible")
    if ladders_of(pair) != tuple(ladders):
        raise InvariantViolation(f"bitableau of {m} does not reproduce its ladders")
    return pair
