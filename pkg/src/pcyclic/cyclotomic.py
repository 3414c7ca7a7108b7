"""p-cyclotomic cosets modulo n."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CosetTable:
    p: int
    n: int
    leader_of: tuple[int, ...]  # j -> leader of C_j
    cosets: dict[int, tuple[int, ...]]  # leader -> members in orbit order j, pj, p^2 j, ...

    @property
    def leaders(self) -> list[int]:
        return sorted(self.cosets)

    def coset(self, j: int) -> tuple[int, ...]:
        return self.cosets[self.leader_of[j % self.n]]

    def length(self, j: int) -> int:
        return len(self.coset(j))

    def same_coset(self, a: int, b: int) -> bool:
        return self.leader_of[a % self.n] == self.leader_of[b % self.n]

    def to_json_obj(self) -> list[dict]:
        return [
            {"leader": ld, "length": len(self.cosets[ld]), "members": list(self.cosets[ld])}
            for ld in self.leaders
        ]


def build_cosets(p: int, n: int) -> CosetTable:
    if n < 1:
        raise ValueError("n must be positive")
    if math.gcd(p, n) != 1:
        raise ValueError(f"p = {p} divides n = {n}; cosets are undefined")
    leader_of = [-1] * n
    cosets = {}
    for j in range(n):
        if leader_of[j] >= 0:
            continue
        orbit = [j]
        leader_of[j] = j
        k = j * p % n
        while k != j:
            orbit.append(k)
            leader_of[k] = j
            k = k * p % n
        cosets[j] = tuple(orbit)
    return CosetTable(p, n, tuple(leader_of), cosets)


@dataclass(frozen=True)
class CosetLength:
    length: int
    gcd: int
    lemma_applies: bool  # 1 <= gcd(j, n) <= 2(p+1)
    lemma_holds: bool | None  # None when the lemma makes no prediction


def coset_length(table: CosetTable, j: int, m: int | None = None) -> CosetLength:
    """Length of C_j plus the gcd-based prediction that it equals m.

    A failed prediction is logged, not raised: the prediction is a quoted
    result we audit, not a precondition.
    """
    if not 0 <= j < table.n:
        raise ValueError(f"j = {j} out of range [0, {table.n})")
    length = table.length(j)
    d = math.gcd(j, table.n)
    applies = 1 <= d <= 2 * (table.p + 1)
    holds = None
    if applies and m is not None:
        holds = length == m
        if not holds:
            log.warning(
                "coset length prediction fails: p=%d n=%d j=%d gcd=%d length=%d m=%d",
                table.p, table.n, j, d, length, m,
            )
    return CosetLength(length, d, applies, holds)
