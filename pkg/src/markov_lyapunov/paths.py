"""Turn words on the binary tree: finite, or a prefix followed by a repeating period."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

SWAP = str.maketrans("LR", "RL")


@dataclass(frozen=True)
class TreePath:
    """Word over {L, R}: ``prefix`` then ``period`` repeated forever (if nonempty)."""

    prefix: str = ""
    period: str = ""

    def __post_init__(self):
        if set(self.prefix + self.period) - {"L", "R"}:
            raise ValueError(f"turn words use only L and R: {self.prefix!r} {self.period!r}")

    @property
    def is_finite(self) -> bool:
        return not self.period

    def __len__(self):
        if self.period:
            raise TypeError("infinite path has no length")
        return len(self.prefix)

    def letters(self) -> Iterator[str]:
        yield from self.prefix
        if self.period:
            yield from itertools.cycle(self.period)

    def take(self, n: int) -> str:
        return "".join(itertools.islice(self.letters(), n))

    def mirrored(self) -> "TreePath":
        return TreePath(self.prefix.translate(SWAP), self.period.translate(SWAP))

    def __str__(self):
        return f"{self.prefix}({self.period})" if self.period else self.prefix

    @classmethod
    def parse(cls, text: str) -> "TreePath":
        """Read ``RRL`` or ``R(RL)``; the parenthesised block repeats."""
        text = text.strip().upper()
        if "(" in text:
            prefix, rest = text.split("(", 1)
            if not rest.endswith(")"):
                raise ValueError(f"unbalanced period in path {text!r}")
            return cls(prefix, rest[:-1])
        return cls(text)


def to_bits(word: str) -> str:
    """Right turn -> 0, left turn -> 1 (the binary path code)."""
    return word.replace("R", "0").replace("L", "1")


def from_bits(bits: str) -> str:
    return bits.replace("0", "R").replace("1", "L")
