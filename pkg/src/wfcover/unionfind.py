"""Disjoint-set forest with an undo journal.

No path compression, so every union can be reverted by restoring a single
parent pointer. Backtracking searches take a ``mark()`` before a tentative
move and ``rollback(mark)`` when they leave the branch.
"""

from __future__ import annotations


class RollbackUnionFind:
    __slots__ = ("parent", "size", "_journal")

    def __init__(self, n: int):
        if n < 0:
            raise ValueError(f"size must be non-negative, got {n}")
        self.parent = list(range(n))
        self.size = [1] * n
        self._journal: list[tuple[int, int]] = []

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self._journal.append((rb, ra))
        return True

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def mark(self) -> int:
        return len(self._journal)

    def rollback(self, mark: int) -> None:
        journal = self._journal
        while len(journal) > mark:
            child, root = journal.pop()
            self.parent[child] = child
            self.size[root] -= self.size[child]
