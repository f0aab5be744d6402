"""Finite groups given by multiplication tables, and their right actions on finite sets."""

from dataclasses import dataclass, field
from functools import cached_property

from hopfgalois.core.exceptions import MalformedInputError


@dataclass(frozen=True)
class GroupTable:
    """Finite group on {0, …, order−1} with table[g][h] = g·h."""

    name: str
    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        n = self.order
        if n < 1:
            raise MalformedInputError("Group order must be positive")
        if any(len(row) != n or any(not 0 <= x < n for x in row) for row in self.table):
            raise MalformedInputError(f"Table of {self.name} is not a {n}x{n} grid over the group")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(g) for g in range(n)))
        elif len(self.labels) != n:
            raise MalformedInputError(f"{len(self.labels)} labels for a group of order {n}")
        e = self.identity
        if not 0 <= e < n or any(self.table[e][g] != g or self.table[g][e] != g for g in range(n)):
            raise MalformedInputError(f"{e} is not an identity of {self.name}")
        for g in range(n):
            if e not in self.table[g]:
                raise MalformedInputError(f"Element {g} of {self.name} has no inverse")
        t = self.table
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise MalformedInputError(
                            f"Table of {self.name} is not associative at ({a}, {b}, {c})"
                        )

    @property
    def order(self) -> int:
        return len(self.table)

    def multiply(self, g: int, h: int) -> int:
        return self.table[g][h]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(self.identity) for row in self.table)

    def inverse(self, g: int) -> int:
        return self.inverses[g]

    def is_abelian(self) -> bool:
        return all(
            self.table[g][h] == self.table[h][g] for g in range(self.order) for h in range(g)
        )


@dataclass(frozen=True)
class GSetAction:
    """Right action of a group on {0, …, points−1}: action[g][p] = p·g."""

    name: str
    group: GroupTable
    points: int
    action: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        g = self.group
        if len(self.action) != g.order or any(
            len(row) != self.points or any(not 0 <= q < self.points for q in row)
            for row in self.action
        ):
            raise MalformedInputError(f"Action {self.name} is not a group × points grid")
        if any(self.act(p, g.identity) != p for p in range(self.points)):
            raise MalformedInputError(f"Identity of {g.name} moves a point in {self.name}")
        for x in range(g.order):
            for y in range(g.order):
                for p in range(self.points):
                    if self.act(self.act(p, x), y) != self.act(p, g.multiply(x, y)):
                        raise MalformedInputError(
                            f"(p·{x})·{y} ≠ p·({x}{y}) at point {p} in {self.name}"
                        )

    def act(self, p: int, g: int) -> int:
        return self.action[g][p]

    def stabilizer(self, p: int) -> list[int]:
        return [g for g in range(self.group.order) if self.act(p, g) == p]

    def is_free(self) -> bool:
        """No point is fixed by a non-identity element."""
        return all(len(self.stabilizer(p)) == 1 for p in range(self.points))

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits as sorted point tuples, ordered by least element."""
        seen: set[int] = set()
        result = []
        for p in range(self.points):
            if p in seen:
                continue
            orbit = tuple(sorted({self.act(p, g) for g in range(self.group.order)}))
            seen.update(orbit)
            result.append(orbit)
        return result
