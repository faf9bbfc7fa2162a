"""Run-result container shared by all ordering algorithms."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class OrderingResult:
    order: list[int]
    reported_degree: list[int]
    algorithm: str
    seed: int
    counters: dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0

    def __post_init__(self):
        n = len(self.order)
        if sorted(self.order) != list(range(n)):
            raise ValueError("order is not a permutation")
        if len(self.reported_degree) != n:
            raise ValueError("reported_degree length mismatch")

    def key_material(self) -> tuple:
        """Everything that must be reproducible bit-for-bit given
        (graph, parameters, seed).  Wall time is excluded."""
        return (
            tuple(self.order),
            tuple(self.reported_degree),
            self.algorithm,
            self.seed,
            tuple(sorted(self.counters.items())),
        )
