"""Segments and multisegments.

A segment [b,e] is the interval of root indices b..e with b <= e; the empty
interval is unrepresentable, so operations that would produce it return None
(segment level) or simply drop it (multisegment level).  A multisegment is a
finite multiset of segments, stored in ascending right-lexicographic order
(end first, then begin), which makes equality structural and RSK inputs
stable.

Text grammar: "[b,e]+[b,e]+..." with "0" for the empty multisegment.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import ParseError, PreconditionError
from .lattice import Weight


@dataclass(frozen=True, slots=True)
class Segment:
    """Interval of root indices b..e, b <= e."""

    b: int
    e: int

    def __post_init__(self):
        if self.b > self.e:
            raise ValueError(f"empty segment [{self.b},{self.e}]")

    def length(self) -> int:
        return self.e - self.b + 1

    def lex_key(self) -> tuple[int, int]:
        return (self.b, self.e)

    def rlex_key(self) -> tuple[int, int]:
        return (self.e, self.b)

    def ll(self, other: Segment) -> bool:
        """Strict partial order: both endpoints strictly smaller."""
        return self.b < other.b and self.e < other.e

    def dagger(self) -> Segment:
        return Segment(-self.e, -self.b)

    def shifted_right(self) -> Segment:
        return Segment(self.b + 1, self.e + 1)

    def derived(self) -> Segment | None:
        """Shrink from the left; point segments vanish."""
        if self.b == self.e:
            return None
        return Segment(self.b + 1, self.e)

    def extended(self) -> Segment:
        """Extend by one to the left."""
        return Segment(self.b - 1, self.e)

    def weight(self) -> Weight:
        return Weight((i, 1) for i in range(self.b, self.e + 1))

    def __str__(self) -> str:
        return f"[{self.b},{self.e}]"


class Multisegment:
    """Finite multiset of segments in canonical right-lexicographic order."""

    __slots__ = ("_segs", "_wt", "_bw")

    def __init__(self, segments: Iterable[Segment] = ()):
        object.__setattr__(self, "_segs", tuple(sorted(segments, key=Segment.rlex_key)))
        object.__setattr__(self, "_wt", None)
        object.__setattr__(self, "_bw", None)

    @classmethod
    def empty(cls) -> Multisegment:
        return cls()

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> Multisegment:
        return cls(Segment(b, e) for b, e in pairs)

    @classmethod
    def parse(cls, text: str) -> Multisegment:
        """Parse "[b,e]+[b,e]+..."; "0" is the empty multisegment."""
        text = text.strip().replace(" ", "")
        if text == "0":
            return cls.empty()
        if not text:
            raise ParseError("empty multisegment text (use '0')")
        segments = []
        for token in text.split("+"):
            if not (token.startswith("[") and token.endswith("]")):
                raise ParseError(f"bad segment token: {token!r}")
            inner = token[1:-1].split(",")
            if len(inner) != 2:
                raise ParseError(f"bad segment token: {token!r}")
            try:
                b, e = int(inner[0]), int(inner[1])
            except ValueError:
                raise ParseError(f"bad segment token: {token!r}") from None
            if b > e:
                raise ParseError(f"segment begin exceeds end in {token!r}")
            segments.append(Segment(b, e))
        return cls(segments)

    @property
    def segments(self) -> tuple[Segment, ...]:
        return self._segs

    def counter(self) -> Counter[Segment]:
        return Counter(self._segs)

    def __len__(self) -> int:
        return len(self._segs)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self._segs)

    def __bool__(self) -> bool:
        return bool(self._segs)

    def __add__(self, other: Multisegment) -> Multisegment:
        return Multisegment(self._segs + other._segs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Multisegment) and self._segs == other._segs

    def __hash__(self) -> int:
        return hash(self._segs)

    def __repr__(self) -> str:
        return f"Multisegment.parse({str(self)!r})"

    def __str__(self) -> str:
        if not self._segs:
            return "0"
        return "+".join(str(s) for s in self._segs)

    def weight(self) -> Weight:
        """Sum of a(b)+...+a(e) over all segments."""
        if self._wt is None:
            coeffs: dict[int, int] = {}
            for s in self._segs:
                for i in range(s.b, s.e + 1):
                    coeffs[i] = coeffs.get(i, 0) + 1
            object.__setattr__(self, "_wt", Weight(coeffs))
        return self._wt

    def begin_weight(self) -> Weight:
        """Sum of a(b) over all segments; its height is the segment count."""
        if self._bw is None:
            object.__setattr__(self, "_bw", Weight((s.b, 1) for s in self._segs))
        return self._bw

    def derived(self) -> Multisegment:
        """Shrink every segment from the left, dropping point segments."""
        out = []
        for s in self._segs:
            d = s.derived()
            if d is not None:
                out.append(d)
        return Multisegment(out)

    def extended(self) -> Multisegment:
        """Extend every segment by one to the left."""
        return Multisegment(s.extended() for s in self._segs)

    def dagger(self) -> Multisegment:
        return Multisegment(s.dagger() for s in self._segs)

    def shifted_right(self) -> Multisegment:
        return Multisegment(s.shifted_right() for s in self._segs)

    def is_ladder(self) -> bool:
        """True iff nonempty and the segments form a chain under ll."""
        if not self._segs:
            return False
        return all(
            self._segs[i].ll(self._segs[i + 1]) for i in range(len(self._segs) - 1)
        )

    def difference(self, other: Multisegment) -> Multisegment:
        """Multiset difference; raises if other is not contained in self."""
        remaining = self.counter()
        remaining.subtract(other.counter())
        if any(c < 0 for c in remaining.values()):
            raise ValueError(f"{other} is not a sub-multisegment of {self}")
        return Multisegment(remaining.elements())

    def to_json(self) -> list[list[int]]:
        return [[s.b, s.e] for s in self._segs]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> Multisegment:
        return cls(Segment(*pair) for pair in data)


def point_multisegment(gamma: Weight) -> Multisegment:
    """Send a positive weight to the sum of point segments [i,i]."""
    if not gamma.is_positive():
        raise PreconditionError(f"weight {gamma} has negative coefficients")
    segs = []
    for i, c in gamma.items():
        segs.extend([Segment(i, i)] * c)
    return Multisegment(segs)
