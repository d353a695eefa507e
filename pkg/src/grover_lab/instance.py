"""Search-problem definition: database size, marked indices, and the oracle.

The "database" is the index space [0, n).  A problem instance knows which
indices are marked (the search targets) and answers oracle queries in
constant time.  Instances are immutable and safe to share across tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import EllOutOfRange, EmptyMarkedSet, IndexOutOfRange, SizeTooSmall


@dataclass(frozen=True, eq=False)
class SearchInstance:
    """An unsorted-database search problem.

    `marked` is stored sorted ascending with duplicates removed.  `seed`
    records provenance when the instance was generated randomly.  A boolean
    membership table (`mask`) is built once at construction so oracle
    evaluation stays O(1) even inside simulation loops.
    """

    n: int
    marked: np.ndarray
    seed: int | None = None

    def __post_init__(self):
        if self.n < 2:
            raise SizeTooSmall(f"database size must be at least 2, got {self.n}")
        marked = np.unique(np.asarray(self.marked, dtype=np.int64))
        if marked.size == 0:
            raise EmptyMarkedSet("at least one marked index is required")
        if marked[0] < 0 or marked[-1] >= self.n:
            raise IndexOutOfRange(
                f"marked indices must lie in [0, {self.n}), got range "
                f"[{marked[0]}, {marked[-1]}]"
            )
        mask = np.zeros(self.n, dtype=bool)
        mask[marked] = True
        object.__setattr__(self, "marked", marked)
        object.__setattr__(self, "mask", mask)

    @property
    def ell(self) -> int:
        """Number of marked indices."""
        return int(self.marked.size)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "marked": [int(a) for a in self.marked],
            "seed": self.seed,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SearchInstance":
        return cls(n=int(data["n"]), marked=np.asarray(data["marked"], dtype=np.int64),
                   seed=None if data.get("seed") is None else int(data["seed"]))


def new_instance(n: int, marked: Iterable[int], seed: int | None = None) -> SearchInstance:
    """Build an instance from an explicit marked-index list.

    Duplicates are removed and the set is sorted; an empty list is rejected
    because a zero-size target set makes the rotation angle undefined.
    """
    return SearchInstance(n=n, marked=np.asarray(list(marked), dtype=np.int64), seed=seed)


def random_instance(n: int, ell: int, seed: int) -> SearchInstance:
    """Draw a uniformly random size-`ell` marked set, reproducibly.

    Sampling uses Floyd's subset algorithm driven by a Philox 4x64
    counter-based generator, so a given (n, ell, seed) reproduces the same
    instance bit-exactly across platforms.
    """
    if n < 2:
        raise SizeTooSmall(f"database size must be at least 2, got {n}")
    if not 1 <= ell <= n:
        raise EllOutOfRange(f"ell must lie in [1, {n}], got {ell}")
    rng = np.random.Generator(np.random.Philox(seed))
    chosen: set[int] = set()
    for t in range(n - ell, n):
        r = int(rng.integers(0, t + 1))
        chosen.add(t if r in chosen else r)
    marked = np.sort(np.fromiter(chosen, dtype=np.int64, count=ell))
    return SearchInstance(n=n, marked=marked, seed=seed)


def oracle_eval(inst: SearchInstance, a: int) -> int:
    """Evaluate the oracle: 1 iff `a` is a marked index."""
    if not 0 <= a < inst.n:
        raise IndexOutOfRange(f"index {a} outside [0, {inst.n})")
    return int(inst.mask[a])


def classical_expected_queries(n: int, ell: int) -> float:
    """Expected sequential oracle queries to hit a marked item classically.

    Scanning a uniformly random permutation without replacement, the first
    of `ell` marked items among `n` sits at expected position
    (n + 1) / (ell + 1).
    """
    if not 1 <= ell <= n:
        raise EllOutOfRange(f"ell must lie in [1, {n}], got {ell}")
    return (n + 1) / (ell + 1)
