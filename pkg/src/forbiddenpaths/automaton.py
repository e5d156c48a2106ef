"""Aho-Corasick automaton over vertex-id sequences.

The alphabet is the vertex set, which is large and sparse, so transitions
are stored as per-node dicts and missing transitions are resolved lazily
through failure links instead of being tabulated.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence


class PatternAutomaton:
    """Multi-pattern matcher; pattern ids are their positions in ``patterns``.

    After reading a sequence the automaton sits in an accepting state iff
    some pattern is a suffix of what was read.
    """

    ROOT = 0

    def __init__(self, patterns: Iterable[Sequence[int]]) -> None:
        self.goto: list[dict[int, int]] = [{}]
        self.fail: list[int] = [0]
        self.depth: list[int] = [0]
        # pattern id ending exactly at the node, if any
        self.terminal: list[int | None] = [None]
        count = 0
        for pid, pattern in enumerate(patterns):
            if not pattern:
                raise ValueError("patterns must be non-empty")
            node = 0
            for sym in pattern:
                nxt = self.goto[node].get(sym)
                if nxt is None:
                    nxt = len(self.goto)
                    self.goto[node][sym] = nxt
                    self.goto.append({})
                    self.fail.append(0)
                    self.depth.append(self.depth[node] + 1)
                    self.terminal.append(None)
                node = nxt
            if self.terminal[node] is None:
                self.terminal[node] = pid
            count += 1
        self.pattern_count = count
        # nearest node on the failure chain (self included) that ends a pattern
        self.dict_link: list[int] = [-1] * len(self.goto)
        # lowest pattern id among all patterns that are suffixes at this node
        self.lowest: list[int | None] = [None] * len(self.goto)
        self._link()

    def _link(self) -> None:
        queue: deque[int] = deque()
        for child in self.goto[0].values():
            self.fail[child] = 0
            queue.append(child)
        order = []
        while queue:
            node = queue.popleft()
            order.append(node)
            for sym, child in self.goto[node].items():
                f = self.fail[node]
                while f and sym not in self.goto[f]:
                    f = self.fail[f]
                target = self.goto[f].get(sym, 0)
                self.fail[child] = target if target != child else 0
                queue.append(child)
        # BFS order guarantees a node's failure target is finished before it
        for node in order:
            f = self.fail[node]
            self.dict_link[node] = node if self.terminal[node] is not None else self.dict_link[f]
            own = self.terminal[node]
            inherited = self.lowest[f]
            if own is None:
                self.lowest[node] = inherited
            elif inherited is None:
                self.lowest[node] = own
            else:
                self.lowest[node] = min(own, inherited)

    def __len__(self) -> int:
        return len(self.goto)

    def step(self, state: int, symbol: int) -> int:
        goto, fail = self.goto, self.fail
        while state and symbol not in goto[state]:
            state = fail[state]
        return goto[state].get(symbol, 0)

    def accepting(self, state: int) -> bool:
        return self.lowest[state] is not None

    def matches(self, state: int) -> Iterator[int]:
        """Ids of every pattern that is a suffix of the input read to reach ``state``."""
        node = self.dict_link[state]
        while node > 0:
            yield self.terminal[node]
            node = self.dict_link[self.fail[node]]

    def run(self, sequence: Iterable[int], state: int = ROOT) -> int:
        for sym in sequence:
            state = self.step(state, sym)
        return state

