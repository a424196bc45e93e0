"""Year-indexed (citation vector, h-index) history for one researcher."""

from __future__ import annotations

from dataclasses import dataclass, field

from .indices import compute_h_index

__all__ = ["TrajectoryPoint", "Trajectory"]


@dataclass(frozen=True)
class TrajectoryPoint:
    year: int
    vector: tuple[int, ...]
    h: int


@dataclass
class Trajectory:
    points: list[TrajectoryPoint] = field(default_factory=list)

    def years(self) -> list[int]:
        return [p.year for p in self.points]

    def h_sequence(self) -> list[int]:
        return [p.h for p in self.points]

    def validate(self) -> list[str]:
        """Check ordering, growth, and h-cache consistency; return violations."""
        problems: list[str] = []
        prev: TrajectoryPoint | None = None
        for p in self.points:
            if p.h != compute_h_index(p.vector):
                problems.append(f"year {p.year}: h {p.h} != recomputed value")
            if prev is not None:
                if p.year <= prev.year:
                    problems.append(f"year {p.year} not after {prev.year}")
                if len(p.vector) < len(prev.vector):
                    problems.append(f"year {p.year}: paper count shrank")
                if p.h < prev.h:
                    problems.append(f"year {p.year}: h decreased {prev.h} -> {p.h}")
            prev = p
        return problems
