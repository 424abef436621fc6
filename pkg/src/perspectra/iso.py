"""Generic isomorphism engine (ground truth) and criterion-based tests.

Canonical forms are computed by a refinement/individualization backtracking
search over point orderings.  The refinement invariant iterates (current
color, multiset of co-line color profiles) to a fixed point, seeded with the
count of maximal free cliques through each point.  Discovered automorphisms
prune the search via path-stabilizer orbits, so highly symmetric inputs stay
cheap; equality of canonical line lists is equivalent to isomorphism.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .incidence import (Configuration, ConfigurationSignature, IncidenceError,
                        ViolationReport, verify)
from .perms import all_permutations, induced_pair_map, kappa_composed
from .families import SkewPerspectiveSpec, apply_pair_map_to_axis, skew_perspective
from . import analysis


@dataclass(frozen=True)
class CanonicalForm:
    position: tuple[int, ...]        # canonical position of each original point
    lines: tuple[tuple[int, ...], ...]
    cert: str
    aut_order: int


def _check_partial_linear(config: Configuration):
    result = verify(config)
    if isinstance(result, ViolationReport) and result.axiom != "not regular":
        raise IncidenceError(f"rejected input: {result.axiom}")


def _initial_colors(config: Configuration) -> list[int]:
    """Isomorphism-invariant seed: rank plus free-clique membership counts at
    the collinearity graph's maximum clique size."""
    from .incidence import adjacency_indices
    from .analysis import _cliques_of_size, is_freely_contained

    n = len(config.points)
    adj = adjacency_indices(config)
    m = 2
    cliques = []
    while True:
        nxt = _cliques_of_size(adj, m + 1)
        if not nxt:
            break
        m += 1
        cliques = nxt
    counts = [0] * n
    if m >= 3:
        for cl in cliques:
            labs = tuple(config.points[i] for i in cl)
            if is_freely_contained(config, labs):
                for i in cl:
                    counts[i] += 1
    ranks = config.ranks()
    sigs = sorted(set(zip(ranks, counts)))
    lut = {s: i for i, s in enumerate(sigs)}
    return [lut[(ranks[i], counts[i])] for i in range(n)]


def _refine(colors, lines_of_point):
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            prof = sorted(
                tuple(sorted(colors[u] for u in line if u != v))
                for line in lines_of_point[v])
            sigs.append((colors[v], tuple(prof)))
        lut = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [lut[s] for s in sigs]
        if new == colors:
            return new
        colors = new


class _CanonSearch:
    def __init__(self, n, lines):
        self.n = n
        self.lines = lines
        self.lines_of_point = [[] for _ in range(n)]
        for line in lines:
            for v in line:
                self.lines_of_point[v].append(line)
        self.best_lines = None
        self.best_perm = None
        self.best_inv = None
        self.gens = []
        self.group = {tuple(range(n))}

    def _add_generator(self, g):
        if g in self.group:
            return
        self.gens.append(g)
        ident = tuple(range(self.n))
        group = {ident}
        frontier = [ident]
        while frontier:
            h = frontier.pop()
            for k in self.gens:
                p = tuple(k[x] for x in h)
                if p not in group:
                    group.add(p)
                    frontier.append(p)
        self.group = group

    def _leaf(self, colors):
        perm = tuple(colors)
        canon = tuple(sorted(tuple(sorted(perm[u] for u in line))
                             for line in self.lines))
        if self.best_lines is None or canon < self.best_lines:
            self.best_lines = canon
            self.best_perm = perm
            inv = [0] * self.n
            for v in range(self.n):
                inv[perm[v]] = v
            self.best_inv = tuple(inv)
        elif canon == self.best_lines:
            g = tuple(self.best_inv[perm[v]] for v in range(self.n))
            self._add_generator(g)

    def run(self, colors, path):
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            self._leaf(colors)
            return
        done = set()
        for v in target:
            if v in done:
                continue
            # skip candidates in the orbit of an explored one under the
            # path-stabilizer of the automorphisms found so far
            stab = [g for g in self.group
                    if all(g[x] == x for x in path)]
            orbit = {v}
            frontier = [v]
            while frontier:
                w = frontier.pop()
                for g in stab:
                    u = g[w]
                    if u not in orbit:
                        orbit.add(u)
                        frontier.append(u)
            done |= orbit
            new = [2 * c for c in colors]
            new[v] -= 1
            self.run(_refine(new, self.lines_of_point), path + [v])


_canon_cache: dict = {}


def canonical_form(config: Configuration) -> CanonicalForm:
    _check_partial_linear(config)
    key = (len(config.points), config.lines)
    hit = _canon_cache.get(key)
    if hit is not None:
        return hit
    n = len(config.points)
    search = _CanonSearch(n, config.lines)
    colors = _refine(_initial_colors(config), search.lines_of_point)
    search.run(colors, [])
    if search.best_lines is None:          # no points or no branching at all
        search._leaf(list(range(n)) if n else [])
    cert = hashlib.sha256(repr((n, search.best_lines)).encode()).hexdigest()
    form = CanonicalForm(search.best_perm, search.best_lines, cert,
                         len(search.group))
    _canon_cache[key] = form
    return form


def automorphism_count(config: Configuration) -> int:
    return canonical_form(config).aut_order


def _as_label_map(c1, c2, form1, form2):
    inv2 = {form2.position[w]: w for w in range(len(c2.points))}
    return {c1.points[v]: c2.points[inv2[form1.position[v]]]
            for v in range(len(c1.points))}


def is_isomorphism(c1: Configuration, c2: Configuration, mapping) -> bool:
    if sorted(map(str, mapping)) != sorted(map(str, c1.points)):
        return False
    if sorted(map(str, mapping.values())) != sorted(map(str, c2.points)):
        return False
    lines2 = set(c2.lines)
    for line in c1.lines:
        img = tuple(sorted(c2.index_of(mapping[lab])
                           for lab in c1.line_labels(line)))
        if img not in lines2:
            return False
    return len(c1.lines) == len(c2.lines)


def are_isomorphic(c1: Configuration, c2: Configuration):
    """Witness label map when isomorphic, else None."""
    f1, f2 = canonical_form(c1), canonical_form(c2)
    if f1.lines != f2.lines:
        return None
    mapping = _as_label_map(c1, c2, f1, f2)
    assert is_isomorphism(c1, c2, mapping)
    return mapping


# ---------------------------------------------------------------------------
# criterion-based isomorphism for the two skew families

def _axis_lines_equal(a1, a2) -> bool:
    from .families import _line_pair_sets
    return _line_pair_sets(a1) == _line_pair_sets(a2)


def _build_map(spec1: SkewPerspectiveSpec, spec2: SkewPerspectiveSpec,
               phi, swap_ab: bool, c_map):
    from .incidence import a_point, b_point, c_point, center
    from .perms import pairs_of
    m = {center(): center()}
    for i in range(1, spec1.n + 1):
        if swap_ab:
            m[a_point(i)] = b_point(phi(i))
            m[b_point(i)] = a_point(phi(i))
        else:
            m[a_point(i)] = a_point(phi(i))
            m[b_point(i)] = b_point(phi(i))
    for u in pairs_of(spec1.n):
        m[c_point(*u)] = c_point(*c_map(u))
    return m


def criterion_iso_perm(spec1: SkewPerspectiveSpec, spec2: SkewPerspectiveSpec):
    """Center-fixing isomorphism search for permutation skews: a conjugating
    phi aligning the skews (directly, or inverted with the sides swapped)
    whose pair action carries axis1 onto axis2."""
    if spec1.delta.tag != "induced" or spec2.delta.tag != "induced":
        raise IncidenceError("criterion requires permutation skews")
    if spec1.n != spec2.n:
        return None
    s1, s2 = spec1.delta.phi, spec2.delta.phi
    for phi in all_permutations(spec1.n):
        pbar = induced_pair_map(phi)
        if (phi.compose(s1) == s2.compose(phi)
                and _axis_lines_equal(apply_pair_map_to_axis(pbar, spec1.axis),
                                      spec2.axis)):
            mapping = _build_map(spec1, spec2, phi, False, pbar)
            _assert_criterion_map(spec1, spec2, mapping)
            return mapping
        g = induced_pair_map(s2.inverse()).compose(pbar)
        if (phi.compose(s1) == s2.inverse().compose(phi)
                and _axis_lines_equal(apply_pair_map_to_axis(g, spec1.axis),
                                      spec2.axis)):
            mapping = _build_map(spec1, spec2, phi, True, g)
            _assert_criterion_map(spec1, spec2, mapping)
            return mapping
    return None


def criterion_iso_kappa(spec1: SkewPerspectiveSpec, spec2: SkewPerspectiveSpec):
    """Center-fixing isomorphism search for the complement-composed family."""
    if spec1.delta.tag != "kappa" or spec2.delta.tag != "kappa":
        raise IncidenceError("criterion requires kappa-composed skews")
    p1, p2 = spec1.delta.phi, spec2.delta.phi
    for alpha in all_permutations(4):
        abar = induced_pair_map(alpha)
        if (alpha.compose(p1) == p2.compose(alpha)
                and _axis_lines_equal(apply_pair_map_to_axis(abar, spec1.axis),
                                      spec2.axis)):
            mapping = _build_map(spec1, spec2, alpha, False, abar)
            _assert_criterion_map(spec1, spec2, mapping)
            return mapping
        g = kappa_composed(p2.inverse()).compose(abar)
        if (alpha.compose(p1) == p2.inverse().compose(alpha)
                and _axis_lines_equal(apply_pair_map_to_axis(g, spec1.axis),
                                      spec2.axis)):
            mapping = _build_map(spec1, spec2, alpha, True, g)
            _assert_criterion_map(spec1, spec2, mapping)
            return mapping
    return None


def _assert_criterion_map(spec1, spec2, mapping):
    c1 = skew_perspective(spec1)
    c2 = skew_perspective(spec2)
    if not is_isomorphism(c1, c2, mapping):
        raise AssertionError("criterion produced a non-isomorphism")
