"""Classification censuses: Grassmannian-axis types by cycle type, the full
n=4 enumeration over all Veblen labelings for both skew families, and the
identify-this-configuration lookup.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .incidence import (Configuration, ConfigurationSignature, IncidenceError,
                        to_json_dict, verify)
from .perms import (all_permutations, cycle_type, induced_pair_map,
                    kappa_composed, partitions, representative_of_type)
from .families import (SkewPerspectiveSpec, enumerate_veblen, fez, grassmannian,
                       kantor, multiveblen, path_graph, quasi_grassmannian,
                       skew_perspective)
from .analysis import free_count, third_graph_criterion
from .iso import automorphism_count, canonical_form


@dataclass(frozen=True)
class CensusEntry:
    family: str
    representative: SkewPerspectiveSpec
    canonical_hash: str
    invariants: dict
    paper_label: str
    class_size: int
    members: tuple

    def as_json_dict(self) -> dict:
        return {
            "family": self.family,
            "representative": {
                "n": self.representative.n,
                "skew": self.representative.describe_skew(),
                "axis": to_json_dict(self.representative.axis),
            },
            "canonical_hash": self.canonical_hash,
            "invariants": self.invariants,
            "paper_label": self.paper_label,
            "class_size": self.class_size,
            "members": [list(m) for m in self.members],
        }


SCHEMA_VERSION = "1"


def _entry_invariants(spec: SkewPerspectiveSpec, config: Configuration) -> dict:
    inv = {
        "free_k": free_count(config, spec.n + 1),
        "aut_count": automorphism_count(config),
        "skew_class": spec.delta.tag,
    }
    if spec.delta.tag == "induced":
        inv["extra_free_cliques"] = len(third_graph_criterion(spec))
    return inv


def classify_grasaxis(n: int):
    """One class per cycle type over the Grassmannian axis; completeness
    verified by classifying every one of the n! skews generically."""
    if not 3 <= n <= 6:
        raise IncidenceError("supported for 3 <= n <= 6")
    axis = grassmannian(n)
    _, total, parts = partitions(n)
    entries = []
    certs = {}
    labels = _grasaxis_labels(n)
    for pt in parts:
        sigma = representative_of_type(pt, n)
        spec = SkewPerspectiveSpec(n, induced_pair_map(sigma), axis)
        config = skew_perspective(spec)
        form = canonical_form(config)
        if form.cert in certs:
            raise AssertionError("distinct cycle types merged")
        certs[form.cert] = (pt, spec)
        entries.append(CensusEntry(
            "grasaxis", spec, form.cert, _entry_invariants(spec, config),
            labels.get(form.cert, "new type"), 0, ((str(sigma), "G"),)))
    # completeness: every skew lands in one of the type classes
    sizes = {cert: 0 for cert in certs}
    members = {cert: [] for cert in certs}
    for sigma in all_permutations(n):
        spec = SkewPerspectiveSpec(n, induced_pair_map(sigma), axis)
        form = canonical_form(skew_perspective(spec))
        if form.cert not in certs:
            raise AssertionError(f"skew {sigma} outside the type classes")
        if cycle_type(sigma) != certs[form.cert][0]:
            raise AssertionError("class does not match the cycle type")
        sizes[form.cert] += 1
        members[form.cert].append((str(sigma), "G"))
    out = [CensusEntry(e.family, e.representative, e.canonical_hash,
                       e.invariants, e.paper_label, sizes[e.canonical_hash],
                       tuple(members[e.canonical_hash]))
           for e in entries]
    assert len(out) == total
    return out


def _grasaxis_labels(n: int) -> dict:
    labels = {}
    labels[canonical_form(grassmannian(n + 2)).cert] = \
        "generalized Desargues configuration"
    if n == 3:
        labels[canonical_form(fez()).cert] = "fez"
        labels[canonical_form(kantor()).cert] = "Kantor"
    if n >= 4:
        labels[canonical_form(quasi_grassmannian(n)).cert] = \
            f"quasi-Grassmannian R{n}"
    if n == 4:
        labels[canonical_form(
            multiveblen(4, path_graph(4), grassmannian(4))).cert] = \
            "multiveblen (path graph)"
    return labels


def _cross_reference_labels() -> dict:
    """Instance-verified class labels for the n=4 censuses."""
    g4 = grassmannian(4)
    labels = {}
    labels[canonical_form(grassmannian(6)).cert] = \
        "generalized Desargues configuration"
    labels[canonical_form(quasi_grassmannian(4)).cert] = "quasi-Grassmannian R4"
    labels[canonical_form(multiveblen(4, path_graph(4), g4)).cert] = \
        "multiveblen (path graph)"
    labels[canonical_form(multiveblen(4, set(), g4)).cert] = \
        "multiveblen (empty graph)"
    return labels


def _census_family(family: str):
    enum = enumerate_veblen()
    labels = _cross_reference_labels()
    classes = {}
    for sigma in sorted(all_permutations(4), key=lambda p: p.image):
        if family == "perm":
            delta = induced_pair_map(sigma)
        else:
            delta = kappa_composed(sigma)
        for li, axis in enumerate(enum.labelings):
            spec = SkewPerspectiveSpec(4, delta, axis)
            config = skew_perspective(spec)
            form = canonical_form(config)
            key = form.cert
            member = (sigma.image, li)
            if key not in classes:
                classes[key] = {"spec": spec, "config": config,
                                "members": [member], "min": member}
            else:
                classes[key]["members"].append(member)
                if member < classes[key]["min"]:
                    classes[key]["min"] = member
                    classes[key]["spec"] = spec
                    classes[key]["config"] = config
    entries = []
    for key, cls in sorted(classes.items(), key=lambda kv: kv[1]["min"]):
        spec = cls["spec"]
        members = tuple((str(spec_desc(img)), li)
                        for img, li in sorted(cls["members"]))
        entries.append(CensusEntry(
            family, spec, key, _entry_invariants(spec, cls["config"]),
            labels.get(key, "new type"), len(cls["members"]), members))
    return entries


def spec_desc(image):
    from .perms import Permutation
    return Permutation(tuple(image))


def census_perm_n4():
    return _census_family("perm")


def census_kappa_n4():
    return _census_family("kappa")


PAPER_PERM_TOTAL = 42
PAPER_KAPPA_TOTAL = 20
PAPER_FULL_TOTAL = 62


@dataclass(frozen=True)
class CensusReport:
    entries: tuple
    findings: tuple

    def as_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "entries": [e.as_json_dict() for e in self.entries],
            "findings": list(self.findings),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_json_dict(), indent=2, sort_keys=True) + "\n"


def _compare(count: int, expected: int, what: str):
    if count == expected:
        return []
    return [f"{what}: computed {count} classes, stated count is {expected}"]


def full_census() -> CensusReport:
    perm = census_perm_n4()
    kap = census_kappa_n4()
    findings = []
    findings += _compare(len(perm), PAPER_PERM_TOTAL, "permutation-skew census")
    findings += _compare(len(kap), PAPER_KAPPA_TOTAL, "kappa-skew census")
    perm_certs = {e.canonical_hash for e in perm}
    kap_certs = {e.canonical_hash for e in kap}
    overlap = perm_certs & kap_certs
    if overlap:
        raise AssertionError(f"cross-family isomorphism found: {sorted(overlap)}")
    total = len(perm) + len(kap)
    findings += _compare(total, PAPER_FULL_TOTAL, "combined census")
    # internal consistency
    for e in kap:
        if e.invariants["free_k"] != 2:
            raise AssertionError("kappa entry with unexpected free-clique count")
    for e in perm:
        expect = 2 + e.invariants["extra_free_cliques"]
        if e.invariants["free_k"] != expect:
            raise AssertionError("perm entry free-clique count inconsistent")
    return CensusReport(tuple(perm) + tuple(kap), tuple(findings))


_identify_index = None


def identify(config: Configuration):
    """Canonical-hash lookup of a 15-point binomial configuration against the
    full n=4 census."""
    sig = verify(config)
    if not isinstance(sig, ConfigurationSignature) or sig.as_tuple() != (15, 4, 20, 3):
        raise IncidenceError("not a 15-point binomial configuration")
    global _identify_index
    if _identify_index is None:
        report = full_census()
        _identify_index = {e.canonical_hash: e for e in report.entries}
    return _identify_index.get(canonical_form(config).cert)
