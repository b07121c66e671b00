"""Finite quivers, paths, and deterministic path enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class QuiverError(ValueError):
    """Invalid quiver data: dangling endpoints or duplicate ids."""


class PathError(ValueError):
    """Invalid path data: unknown arrows or a non-composable sequence."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A composable arrow sequence, or a trivial path at a vertex.

    Paths compose left to right: ``x.y`` means ``x`` followed by ``y``,
    so the target of ``x`` is the source of ``y``.  A trivial path has an
    empty arrow sequence and equal source and target.
    """

    arrows: tuple[str, ...]
    source: str
    target: str

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def sort_key(self):
        return (len(self.arrows), self.arrows, self.source)

    def render(self) -> str:
        return ".".join(self.arrows) if self.arrows else f"e_{self.source}"

    def __str__(self) -> str:
        return self.render()


class Quiver:
    """A finite directed multigraph with named vertices and arrows."""

    def __init__(self, vertices: Iterable[str], arrows: Iterable[tuple[str, str, str]]):
        vs: list[str] = []
        seen = set()
        for v in vertices:
            v = str(v)
            if v in seen:
                raise QuiverError(f"duplicate id {v}")
            seen.add(v)
            vs.append(v)
        self.vertices: tuple[str, ...] = tuple(sorted(vs))
        vertex_set = set(self.vertices)

        named: dict[str, Arrow] = {}
        for name, source, target in arrows:
            name, source, target = str(name), str(source), str(target)
            if name in named:
                raise QuiverError(f"duplicate id {name}")
            if source not in vertex_set:
                raise QuiverError(f"dangling endpoint {source}")
            if target not in vertex_set:
                raise QuiverError(f"dangling endpoint {target}")
            named[name] = Arrow(name, source, target)
        self.arrows: tuple[Arrow, ...] = tuple(named[n] for n in sorted(named))

        self._by_name = {a.name: a for a in self.arrows}
        self._out: dict[str, tuple[Arrow, ...]] = {v: () for v in self.vertices}
        self._in: dict[str, tuple[Arrow, ...]] = {v: () for v in self.vertices}
        for a in self.arrows:  # already name-sorted
            self._out[a.source] += (a,)
            self._in[a.target] += (a,)
        self._path_cache: dict[tuple, tuple[Path, ...]] = {}

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    __hash__ = None

    def __repr__(self):
        return f"Quiver(vertices={list(self.vertices)}, arrows={len(self.arrows)})"

    # -- lookup ---------------------------------------------------------

    def has_vertex(self, v: str) -> bool:
        return v in self._out

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise PathError(f"unknown arrow {name}") from None

    def arrows_from(self, v: str) -> tuple[Arrow, ...]:
        return self._out[v]

    def arrows_into(self, v: str) -> tuple[Arrow, ...]:
        return self._in[v]

    def arrows_between(self, source: str, target: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self._out[source] if a.target == target)

    # -- path construction ----------------------------------------------

    def trivial_path(self, v: str) -> Path:
        if v not in self._out:
            raise PathError(f"unknown vertex {v}")
        return Path((), v, v)

    def path(self, names: Sequence[str]) -> Path:
        """Build a path from arrow names, checking composability."""
        if not names:
            raise PathError("empty arrow sequence; use trivial_path for a vertex")
        arrows = [self.arrow(n) for n in names]
        for left, right in zip(arrows, arrows[1:]):
            if right.source != left.target:
                raise PathError(
                    f"non-composable path: {left.name} ends at {left.target}, "
                    f"{right.name} starts at {right.source}"
                )
        return Path(tuple(names), arrows[0].source, arrows[-1].target)

    # -- enumeration ------------------------------------------------------

    def enumerate_paths(self, length: int, source: str | None = None,
                        target: str | None = None) -> tuple[Path, ...]:
        """All composable paths of the given length, ordered lexicographically
        by arrow-id sequence (trivial paths by vertex id)."""
        if length < 0:
            raise ValueError("length must be nonnegative")
        key = (length, source, target)
        cached = self._path_cache.get(key)
        if cached is not None:
            return cached
        if length == 0:
            vs = self.vertices if source is None else ((source,) if self.has_vertex(source) else ())
            paths = tuple(
                Path((), v, v) for v in vs if target is None or v == target
            )
        else:
            prefixes = self.enumerate_paths(length - 1, source=source)
            built = []
            for p in prefixes:
                for a in self._out[p.target]:
                    built.append(Path(p.arrows + (a.name,), p.source, a.target))
            if target is not None:
                built = [p for p in built if p.target == target]
            # prefix recursion groups by source vertex; re-sort for the
            # global lexicographic order on arrow-id sequences
            built.sort(key=lambda p: p.arrows)
            paths = tuple(built)
        self._path_cache[key] = paths
        return paths

    # -- components -------------------------------------------------------

    def components(self) -> tuple["Quiver", ...]:
        """Sub-quivers induced by the undirected reachability classes,
        ordered by their smallest vertex id."""
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a in self.arrows:
            rs, rt = find(a.source), find(a.target)
            if rs != rt:
                parent[rt] = rs
        groups: dict[str, list[str]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        comps = []
        for root in sorted(groups, key=lambda r: min(groups[r])):
            verts = sorted(groups[root])
            vs = set(verts)
            arrows = [(a.name, a.source, a.target) for a in self.arrows if a.source in vs]
            comps.append(Quiver(verts, arrows))
        return tuple(comps)


def validate_quiver(vertices: Iterable[str], arrows: Iterable[tuple[str, str, str]]) -> Quiver:
    """Build a quiver, raising QuiverError on dangling or duplicate ids."""
    return Quiver(vertices, arrows)
