"""Permutations of {0..m-1} in one-line notation.

Supports composition, inversion, fixed-point queries, and Lehmer-code
rank/unrank.  Ranks follow lexicographic order of the image tuples, so
rank 0 is the identity and rank m!-1 is the reversal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputError


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        m = len(images)
        if m == 0:
            raise InvalidInputError("permutation must act on at least one point")
        if sorted(images) != list(range(m)):
            raise InvalidInputError(f"not a bijection on 0..{m - 1}: {images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: Permutation) -> Permutation:
        """Return self after other: result(x) == self(other(x))."""
        if other.size != self.size:
            raise InvalidInputError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.images[y] for y in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(x for x, y in enumerate(self.images) if x == y)

    def fixed_point_count(self) -> int:
        return sum(1 for x, y in enumerate(self.images) if x == y)

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def rank(self) -> int:
        """Lexicographic (Lehmer) rank among permutations of the same size."""
        images = self.images
        m = len(images)
        rank = 0
        for i in range(m):
            smaller = sum(1 for j in range(i + 1, m) if images[j] < images[i])
            rank += smaller * math.factorial(m - 1 - i)
        return rank

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths in descending order (an integer partition of size)."""
        seen = [False] * self.size
        lengths = []
        for start in range(self.size):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self.images[x]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def one_indexed(self) -> list[int]:
        """Image list in the 1-indexed convention used by JSON files."""
        return [y + 1 for y in self.images]

    @classmethod
    def identity(cls, m: int) -> Permutation:
        if m < 1:
            raise InvalidInputError("permutation size must be positive")
        return cls(tuple(range(m)))

    @classmethod
    def unrank(cls, m: int, rank: int) -> Permutation:
        """Inverse of rank(): the permutation of {0..m-1} at the given rank."""
        if m < 1:
            raise InvalidInputError("permutation size must be positive")
        if not 0 <= rank < math.factorial(m):
            raise InvalidInputError(f"rank {rank} out of range for m={m}")
        available = list(range(m))
        images = []
        r = rank
        for i in range(m):
            f = math.factorial(m - 1 - i)
            digit, r = divmod(r, f)
            images.append(available.pop(digit))
        return cls(tuple(images))

    @classmethod
    def from_one_indexed(cls, images) -> Permutation:
        try:
            shifted = tuple(int(y) - 1 for y in images)
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"bad permutation image list: {images!r}") from exc
        return cls(shifted)
