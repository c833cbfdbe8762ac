"""Knowledge-graph profiles: ingestion, profile -> qDB conversion, and
sampled-pattern -> sub-profile reconstruction.

A profile is a weighted typed-triple graph.  Each edge aggregates triples
((S, P, O), n): S and O are the concept/term sets of the triple itself, while
the source/target node ids attach the edge to the (maximally merged) profile
graph.  Sub-profiles rebuild nodes from the edges' own S/O sets, merging nodes
transitively whenever their sets intersect.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .qdb import ItemDictionary, QuantitativeDatabase, make_transaction


class ProfileError(ValueError):
    """Invalid profile JSON or inconsistent profile structure."""


@dataclass(frozen=True)
class ProfileEdge:
    edge_id: str
    source: str
    target: str
    predicate: str
    weight: int
    subject: frozenset[str]
    object: frozenset[str]


class PredicateWeights:
    """Strictly positive user weights per predicate; unlisted predicates get 1."""

    def __init__(self, weights: dict[str, int] | None = None):
        self._weights: dict[str, int] = {}
        for predicate, w in (weights or {}).items():
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise ValueError(f"weight of {predicate!r} must be a positive integer")
            self._weights[predicate] = w

    def weight(self, predicate: str) -> int:
        return self._weights.get(predicate, 1)

    def items(self):
        return self._weights.items()

    def key(self) -> tuple:
        return tuple(sorted(self._weights.items()))


class Profile:
    """Weighted typed-triple graph with explicit node ids."""

    def __init__(self, nodes: dict[str, frozenset[str]], edges: Sequence[ProfileEdge]):
        self.nodes = dict(nodes)
        self.edges = list(edges)
        self.edge_by_id = {}
        for node_id, concepts in self.nodes.items():
            if not concepts:
                raise ProfileError(f"node {node_id!r} has an empty concept set")
        for edge in self.edges:
            if edge.source not in self.nodes or edge.target not in self.nodes:
                raise ProfileError(f"edge {edge.edge_id!r} references a missing node")
            if edge.weight < 1:
                raise ProfileError(f"edge {edge.edge_id!r} must have weight >= 1")
            if not edge.subject or not edge.object:
                raise ProfileError(f"edge {edge.edge_id!r} has an empty subject/object set")
            if edge.edge_id in self.edge_by_id:
                raise ProfileError(f"duplicate edge id {edge.edge_id!r}")
            self.edge_by_id[edge.edge_id] = edge

    @classmethod
    def from_json(cls, obj: dict) -> "Profile":
        try:
            nodes = {n["id"]: frozenset(n["concepts"]) for n in obj["nodes"]}
            edges = []
            for e in obj["edges"]:
                subject = frozenset(e.get("subject") or nodes.get(e["source"], ()))
                object_set = frozenset(e.get("object") or nodes.get(e["target"], ()))
                weight = e["weight"]
                if not isinstance(weight, int) or isinstance(weight, bool):
                    raise ProfileError(f"edge {e.get('id')!r} weight must be an integer")
                edges.append(
                    ProfileEdge(
                        edge_id=e["id"],
                        source=e["source"],
                        target=e["target"],
                        predicate=e["predicate"],
                        weight=weight,
                        subject=subject,
                        object=object_set,
                    )
                )
        except (KeyError, TypeError, AttributeError) as exc:
            raise ProfileError(f"malformed profile JSON: {exc}") from exc
        return cls(nodes, edges)

    def to_json(self) -> dict:
        return {
            "nodes": [{"id": nid, "concepts": sorted(c)} for nid, c in self.nodes.items()],
            "edges": [
                {
                    "id": e.edge_id,
                    "source": e.source,
                    "target": e.target,
                    "predicate": e.predicate,
                    "weight": e.weight,
                    "subject": sorted(e.subject),
                    "object": sorted(e.object),
                }
                for e in self.edges
            ],
        }

    def stats(self) -> dict:
        return {
            "nodes": len(self.nodes),
            "edges": len(self.edges),
            "predicates": sorted({e.predicate for e in self.edges}),
            "totalWeight": sum(e.weight for e in self.edges),
        }


@dataclass(frozen=True)
class SubProfileNode:
    node_id: str
    labels: frozenset[str]


@dataclass(frozen=True)
class SubProfileEdge:
    edge: ProfileEdge
    source: str
    target: str


@dataclass
class SubProfile:
    nodes: list[SubProfileNode]
    edges: list[SubProfileEdge]

    @property
    def triple_count(self) -> int:
        return len(self.edges)

    def to_json(self) -> dict:
        return {
            "nodes": [{"id": n.node_id, "labels": sorted(n.labels)} for n in self.nodes],
            "edges": [
                {
                    "id": se.edge.edge_id,
                    "source": se.source,
                    "target": se.target,
                    "predicate": se.edge.predicate,
                    "weight": se.edge.weight,
                }
                for se in self.edges
            ],
        }


def profile_to_qdb(
    profile: Profile,
    predicate_weights: PredicateWeights | None = None,
    direction: str = "both",
) -> tuple[QuantitativeDatabase, dict[str, ProfileEdge]]:
    """One transaction per node per direction; items are edge ids.

    Quantity is the edge weight, price is the predicate weight.  Empty groups
    are skipped.  Returns the database plus the item-label -> edge mapping.
    """
    if direction not in ("out", "in", "both"):
        raise ValueError("direction must be 'out', 'in' or 'both'")
    pw = predicate_weights if predicate_weights is not None else PredicateWeights()
    dictionary = ItemDictionary()
    price_by_index: dict[int, int] = {}
    transactions = []
    for node_id in profile.nodes:
        groups = []
        if direction in ("out", "both"):
            groups.append([e for e in profile.edges if e.source == node_id])
        if direction in ("in", "both"):
            groups.append([e for e in profile.edges if e.target == node_id])
        for group in groups:
            if not group:
                continue
            quantities: dict[int, int] = {}
            for edge in group:
                idx = dictionary.intern(edge.edge_id)
                price_by_index[idx] = pw.weight(edge.predicate)
                quantities[idx] = quantities.get(idx, 0) + edge.weight
            transactions.append(
                make_transaction(len(transactions), quantities, price_by_index.__getitem__)
            )
    mapping = {edge.edge_id: edge for edge in profile.edges if edge.edge_id in dictionary}
    return QuantitativeDatabase(transactions, dictionary), mapping


def _build_subprofile(edges: Sequence[ProfileEdge]) -> SubProfile:
    """Union-find merge of endpoint concept sets sharing at least one label."""
    endpoints: list[frozenset[str]] = []
    edge_ends: list[tuple[int, int]] = []
    for edge in edges:
        endpoints.append(edge.subject)
        endpoints.append(edge.object)
        edge_ends.append((len(endpoints) - 2, len(endpoints) - 1))

    parent = list(range(len(endpoints)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    owner: dict[str, int] = {}
    for idx, labels in enumerate(endpoints):
        for label in labels:
            if label in owner:
                union(owner[label], idx)
            else:
                owner[label] = idx

    group_ids: dict[int, str] = {}
    merged: dict[str, set[str]] = {}
    node_order: list[str] = []
    for idx, labels in enumerate(endpoints):
        root = find(idx)
        if root not in group_ids:
            node_id = f"n{len(group_ids)}"
            group_ids[root] = node_id
            merged[node_id] = set()
            node_order.append(node_id)
        merged[group_ids[root]].update(labels)

    nodes = [SubProfileNode(nid, frozenset(merged[nid])) for nid in node_order]
    sub_edges = [
        SubProfileEdge(edge, group_ids[find(s)], group_ids[find(o)])
        for edge, (s, o) in zip(edges, edge_ends)
    ]
    return SubProfile(nodes, sub_edges)


def pattern_to_subprofile(edge_ids: Iterable[str], profile: Profile) -> SubProfile:
    """Induced graph on the pattern's edges with intersecting endpoints merged."""
    edges = []
    for edge_id in edge_ids:
        edge = profile.edge_by_id.get(edge_id)
        if edge is None:
            raise ProfileError(f"pattern item {edge_id!r} maps to no profile edge")
        edges.append(edge)
    return _build_subprofile(edges)


def merge_subprofiles(subprofiles: Sequence[SubProfile]) -> SubProfile:
    """Union of the edge sets with the concept-set merging re-run."""
    seen: dict[str, ProfileEdge] = {}
    for sub in subprofiles:
        for se in sub.edges:
            seen.setdefault(se.edge.edge_id, se.edge)
    return _build_subprofile(list(seen.values()))
