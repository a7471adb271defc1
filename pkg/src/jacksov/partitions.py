from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .exceptions import PartitionError

PartitionLike = Union["Partition", Sequence[int]]


@dataclass(frozen=True)
class Partition:
    """
    A weakly decreasing tuple of nonnegative integers.

    Trailing zeros are kept, since the number of parts is the number of
    variables in every formula that takes a partition.
    """

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise PartitionError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError(f"parts are not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """
        Examples:
          >>> Partition.parse("2,1,0")
          Partition(parts=(2, 1, 0))
        """
        try:
            parts = tuple(int(p) for p in text.replace(" ", "").split(",") if p != "")
        except ValueError as e:
            raise PartitionError(f"cannot parse partition {text!r}") from e
        return cls(parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return sum(1 for p in self.parts if p)

    def diff(self, i: int, j: int) -> int:
        """lambda_ij = lambda_i - lambda_j with 1-based indices."""
        return self.parts[i - 1] - self.parts[j - 1]

    def padded(self, nparts: int) -> Partition:
        if self.length > nparts:
            raise PartitionError(f"{self} has more than {nparts} nonzero parts")
        parts = self.parts[:nparts] if len(self.parts) > nparts else self.parts
        return Partition(parts + (0,) * (nparts - len(parts)))

    def shifted(self, s: int) -> Partition:
        return Partition(tuple(p + s for p in self.parts))

    def reduced(self) -> Partition:
        """Subtracts the last part from every part."""
        if not self.parts:
            return self
        return self.shifted(-self.parts[-1])

    def conjugate(self) -> Partition:
        if not self.parts or self.parts[0] == 0:
            return Partition(())
        return Partition(
            tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))
        )

    def multiplicities(self) -> Dict[int, int]:
        """part -> number of occurrences, for the nonzero parts."""
        res: Dict[int, int] = {}
        for p in self.parts:
            if p:
                res[p] = res.get(p, 0) + 1
        return res


def as_partition(value: PartitionLike) -> Partition:
    if isinstance(value, Partition):
        return value
    return Partition(tuple(value))


def conjugate(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    if not parts or parts[0] == 0:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def dominance_leq(mu: PartitionLike, lam: PartitionLike) -> bool:
    """
    True iff every leading partial sum of mu is <= the one of lam.

    Raises:
      PartitionError: if the weights differ.

    Examples:
      >>> dominance_leq((2, 1, 1), (3, 1, 0))
      True
    """
    mu = tuple(as_partition(mu))
    lam = tuple(as_partition(lam))
    if sum(mu) != sum(lam):
        raise PartitionError(
            f"dominance order needs equal weights, got {sum(mu)} and {sum(lam)}"
        )
    n = max(len(mu), len(lam))
    mu = mu + (0,) * (n - len(mu))
    lam = lam + (0,) * (n - len(lam))
    smu = slam = 0
    for a, b in zip(mu, lam):
        smu += a
        slam += b
        if smu > slam:
            return False
    return True


@lru_cache(maxsize=None)
def _partitions(
    weight: int, max_length: int, max_part: int
) -> Tuple[Tuple[int, ...], ...]:
    if weight == 0:
        return ((),)
    if max_length == 0:
        return ()
    res: List[Tuple[int, ...]] = []
    for first in range(min(weight, max_part), 0, -1):
        for rest in _partitions(weight - first, max_length - 1, first):
            res.append((first,) + rest)
    return tuple(res)


def partitions_of(
    weight: int, max_length: int, max_part: Optional[int] = None
) -> List[Tuple[int, ...]]:
    """
    All partitions of `weight` with at most `max_length` nonzero parts, padded
    with zeros to `max_length`, in decreasing lexicographic order.

    Decreasing lexicographic order is a linear extension of dominance order.
    """
    if weight < 0:
        return []
    if max_part is None:
        max_part = weight
    return [
        p + (0,) * (max_length - len(p)) for p in _partitions(weight, max_length, max_part)
    ]


def all_partitions(
    nparts: int, max_first: int, max_last: Optional[int] = None
) -> Iterable[Partition]:
    """
    Every partition with exactly `nparts` parts (zeros allowed), first part <= max_first
    and, optionally, last part <= max_last.
    """

    def _rec(prefix: Tuple[int, ...], remaining: int, bound: int):
        if remaining == 0:
            yield Partition(prefix)
            return
        for p in range(bound, -1, -1):
            if remaining == 1 and max_last is not None and p > max_last:
                continue
            yield from _rec(prefix + (p,), remaining - 1, p)

    yield from _rec((), nparts, max_first)
