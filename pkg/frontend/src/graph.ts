/** Node-link view model built 1:1 from the service's sub-profile JSON.  The
 * client adds display labels but never invents or drops graph structure, so
 * the rendered data can be converted back and compared against the source. */

import type { SubProfileJson } from "./api.js";

export interface GraphNode {
  id: string;
  labels: string[];
  label: string;
}

export interface GraphEdge {
  id: string;
  source: string;
  target: string;
  predicate: string;
  weight: number;
  label: string;
}

export interface GraphData {
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export function buildGraph(sub: SubProfileJson): GraphData {
  return {
    nodes: sub.nodes.map((n) => ({
      id: n.id,
      labels: [...n.labels],
      label: `{${n.labels.join(", ")}}`,
    })),
    edges: sub.edges.map((e) => ({
      id: e.id,
      source: e.source,
      target: e.target,
      predicate: e.predicate,
      weight: e.weight,
      label: `${e.predicate} (${e.weight})`,
    })),
  };
}

/** Inverse of buildGraph; used to check that rendering lost nothing. */
export function toSubProfileJson(graph: GraphData): SubProfileJson {
  return {
    nodes: graph.nodes.map((n) => ({ id: n.id, labels: [...n.labels] })),
    edges: graph.edges.map((e) => ({
      id: e.id,
      source: e.source,
      target: e.target,
      predicate: e.predicate,
      weight: e.weight,
    })),
  };
}
