"""Greedy box selection meeting the generalized pigeonhole bound.

With total = r*n + s objects in n boxes (0 <= s < n), some m boxes always
hold at least r*m + min(s, m) objects; the m largest boxes therefore do.
The greedy selection is also exactly optimal, which the tests verify by
exhaustive subset enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BoxDistribution:
    """Nonnegative object counts, one per box."""

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if not self.counts:
            raise ValueError("need at least one box")
        if any(c < 0 for c in self.counts):
            raise ValueError("box counts must be nonnegative")

    @property
    def n_boxes(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def r(self) -> int:
        return self.total // self.n_boxes

    @property
    def s(self) -> int:
        return self.total % self.n_boxes


def guaranteed_total(dist: BoxDistribution, m: int) -> int:
    """The pigeonhole lower bound r*m + min(s, m) for the best m boxes."""
    return dist.r * m + min(dist.s, m)


def select_boxes(dist: BoxDistribution, m: int) -> tuple[tuple[int, ...], int]:
    """The m largest boxes (ties to the lowest index) and their total.

    The achieved total always meets guaranteed_total(dist, m): some m-subset
    does, and the greedy subset is a maximum one.
    """
    if not 1 <= m <= dist.n_boxes:
        raise ValueError(f"m={m} out of range 1..{dist.n_boxes}")
    order = sorted(range(dist.n_boxes), key=lambda i: (-dist.counts[i], i))
    chosen = tuple(sorted(order[:m]))
    achieved = sum(dist.counts[i] for i in chosen)
    assert achieved >= guaranteed_total(dist, m)
    return chosen, achieved
