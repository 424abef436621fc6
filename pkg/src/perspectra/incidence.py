"""Incidence-structure core: labeled points, uniform lines, verification.

A Configuration is a finite partial linear space: points carry structured
labels (center / a-side / b-side / axis pair / free) and lines are stored as
sorted index tuples into the point list.  All values are immutable; every
operation is pure.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from itertools import combinations


_KIND_ORDER = {"p": 0, "a": 1, "b": 2, "c": 3, "free": 4}


@dataclass(frozen=True)
class PointLabel:
    """Structured point label: the center p, a_i, b_i, c_{i,j} or a free name."""

    kind: str
    key: tuple = ()

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown label kind {self.kind!r}")

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.key)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.kind == "p":
            return "p"
        if self.kind == "a":
            return f"a{self.key[0]}"
        if self.kind == "b":
            return f"b{self.key[0]}"
        if self.kind == "c":
            return "c{%d,%d}" % self.key
        return self.key[0]

    def __repr__(self):
        return f"PointLabel({str(self)!r})"


def center() -> PointLabel:
    return PointLabel("p")


def a_point(i: int) -> PointLabel:
    return PointLabel("a", (i,))


def b_point(i: int) -> PointLabel:
    return PointLabel("b", (i,))


def c_point(i: int, j: int) -> PointLabel:
    if i == j:
        raise ValueError("c-label needs a 2-subset")
    i, j = min(i, j), max(i, j)
    return PointLabel("c", (i, j))


def free_point(name: str) -> PointLabel:
    return PointLabel("free", (name,))


_A_RE = re.compile(r"^a(\d+)$")
_B_RE = re.compile(r"^b(\d+)$")
_C_RE = re.compile(r"^c\{(\d+),(\d+)\}$")


def parse_label(text: str) -> PointLabel:
    if text == "p":
        return center()
    m = _A_RE.match(text)
    if m:
        return a_point(int(m.group(1)))
    m = _B_RE.match(text)
    if m:
        return b_point(int(m.group(1)))
    m = _C_RE.match(text)
    if m:
        return c_point(int(m.group(1)), int(m.group(2)))
    return free_point(text)


class IncidenceError(ValueError):
    pass


@dataclass(frozen=True)
class ConfigurationSignature:
    nu: int
    r: int | None
    b: int
    kappa: int | None

    def as_tuple(self):
        return (self.nu, self.r, self.b, self.kappa)


@dataclass(frozen=True)
class ViolationReport:
    axiom: str
    witness: tuple
    partial: ConfigurationSignature


@dataclass(frozen=True)
class Configuration:
    points: tuple[PointLabel, ...]
    lines: tuple[tuple[int, ...], ...]

    # lazy caches, not part of equality
    _index: dict = field(default=None, compare=False, repr=False)
    _joins: dict = field(default=None, compare=False, repr=False)

    @staticmethod
    def build(points, line_label_sets) -> "Configuration":
        """Normalize arbitrary point/line collections into canonical storage."""
        pts = tuple(sorted(set(points), key=PointLabel.sort_key))
        index = {lab: i for i, lab in enumerate(pts)}
        lines = set()
        for line in line_label_sets:
            idxs = tuple(sorted(index[lab] for lab in line))
            if len(set(idxs)) != len(idxs):
                raise IncidenceError(f"repeated point in line {line}")
            lines.add(idxs)
        return Configuration(pts, tuple(sorted(lines)))

    def index_of(self, label: PointLabel) -> int:
        if self._index is None:
            object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.points)})
        try:
            return self._index[label]
        except KeyError:
            raise IncidenceError(f"no such point {label}")

    def has_point(self, label: PointLabel) -> bool:
        if self._index is None:
            object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.points)})
        return label in self._index

    def line_labels(self, line: tuple[int, ...]) -> tuple[PointLabel, ...]:
        return tuple(self.points[i] for i in line)

    def _join_table(self):
        if self._joins is None:
            joins = {}
            for line in self.lines:
                for x, y in combinations(line, 2):
                    joins[(x, y)] = line
                    joins[(y, x)] = line
            object.__setattr__(self, "_joins", joins)
        return self._joins

    def ranks(self) -> list[int]:
        counts = [0] * len(self.points)
        for line in self.lines:
            for i in line:
                counts[i] += 1
        return counts


def verify(config: Configuration):
    """Check the partial-linear-space axioms.

    Returns a ConfigurationSignature when the structure is a regular
    k-configuration, otherwise a ViolationReport naming the first violated
    axiom with witnesses.
    """
    nu = len(config.points)
    b = len(config.lines)
    sizes = {len(line) for line in config.lines}
    if len(sizes) > 1:
        bad = sorted(config.lines, key=len)
        return ViolationReport(
            "not a k-configuration",
            (config.line_labels(bad[0]), config.line_labels(bad[-1])),
            ConfigurationSignature(nu, None, b, None),
        )
    kappa = sizes.pop() if sizes else None
    seen = set()
    for line in config.lines:
        if line in seen:
            return ViolationReport(
                "duplicate line", (config.line_labels(line),),
                ConfigurationSignature(nu, None, b, kappa))
        seen.add(line)
        for idx in line:
            if not (0 <= idx < nu):
                return ViolationReport(
                    "line uses unknown point", (line,),
                    ConfigurationSignature(nu, None, b, kappa))
    pair_seen = {}
    for line in config.lines:
        for x, y in combinations(line, 2):
            if (x, y) in pair_seen and pair_seen[(x, y)] != line:
                return ViolationReport(
                    "not partially linear",
                    (config.line_labels(pair_seen[(x, y)]), config.line_labels(line)),
                    ConfigurationSignature(nu, None, b, kappa))
            pair_seen[(x, y)] = line
    ranks = set(config.ranks())
    if len(ranks) > 1:
        return ViolationReport(
            "not regular", tuple(sorted(ranks)),
            ConfigurationSignature(nu, None, b, kappa))
    r = ranks.pop() if ranks else None
    return ConfigurationSignature(nu, r, b, kappa)


def is_verified(config: Configuration) -> bool:
    return isinstance(verify(config), ConfigurationSignature)


def join(config: Configuration, x: PointLabel, y: PointLabel):
    """The partial operation: the unique line through x and y, if any.

    For x == y returns the degenerate singleton (x,).
    """
    xi = config.index_of(x)
    yi = config.index_of(y)
    if xi == yi:
        return (x,)
    line = config._join_table().get((xi, yi))
    if line is None:
        return None
    return config.line_labels(line)


def third_point(config: Configuration, x: PointLabel, y: PointLabel):
    """x + y: the remaining point of the line through x and y (3-point lines)."""
    line = join(config, x, y)
    if line is None or len(line) != 3:
        return None
    for lab in line:
        if lab != x and lab != y:
            return lab
    return None


def induced_subconfiguration(config: Configuration, subset) -> Configuration:
    """Restriction to a point subset, keeping lines fully inside the subset."""
    subset = set(subset)
    for lab in subset:
        config.index_of(lab)
    keep = set(config.index_of(lab) for lab in subset)
    lines = [config.line_labels(line) for line in config.lines
             if all(i in keep for i in line)]
    return Configuration.build(subset, lines)


def collinearity_graph(config: Configuration) -> dict[PointLabel, frozenset[PointLabel]]:
    adj = {lab: set() for lab in config.points}
    for line in config.lines:
        labs = config.line_labels(line)
        for x, y in combinations(labs, 2):
            adj[x].add(y)
            adj[y].add(x)
    return {lab: frozenset(nbrs) for lab, nbrs in adj.items()}


def adjacency_indices(config: Configuration) -> list[set[int]]:
    adj = [set() for _ in config.points]
    for line in config.lines:
        for x, y in combinations(line, 2):
            adj[x].add(y)
            adj[y].add(x)
    return adj


def to_json_dict(config: Configuration) -> dict:
    return {
        "points": [str(lab) for lab in config.points],
        "lines": [list(line) for line in config.lines],
    }


def to_json(config: Configuration) -> str:
    return json.dumps(to_json_dict(config), indent=2) + "\n"


def from_json_dict(data: dict) -> Configuration:
    labels = [parse_label(t) for t in data["points"]]
    if len(set(labels)) != len(labels):
        raise IncidenceError("duplicate point labels")
    lines = [tuple(labels[i] for i in line) for line in data["lines"]]
    return Configuration.build(labels, lines)


def from_json(text: str) -> Configuration:
    return from_json_dict(json.loads(text))


def to_dot(config: Configuration) -> str:
    """Levi (incidence) graph in DOT: circled point nodes, boxed line nodes."""
    out = ["graph levi {"]
    for i, lab in enumerate(config.points):
        out.append(f'  p{i} [shape=circle, label="{lab}"];')
    for j, line in enumerate(config.lines):
        out.append(f'  l{j} [shape=box, label="L{j}"];')
    for j, line in enumerate(config.lines):
        for i in line:
            out.append(f"  p{i} -- l{j};")
    out.append("}")
    return "\n".join(out) + "\n"


def export(config: Configuration, fmt: str) -> bytes:
    if fmt == "json":
        return to_json(config).encode()
    if fmt == "dot":
        return to_dot(config).encode()
    raise IncidenceError(f"unknown format {fmt!r}")
