import { describe, expect, it } from "vitest";

import { buildGraph, toSubProfileJson } from "../src/graph.js";
import { sampleSeed7, uploadResponse } from "./fixtures.js";

describe("graph view model", () => {
  it("round-trips the service sub-profile without loss", () => {
    const graph = buildGraph(sampleSeed7.subProfile);
    expect(toSubProfileJson(graph)).toEqual(sampleSeed7.subProfile);
  });

  it("keeps node and edge order", () => {
    const graph = buildGraph(sampleSeed7.subProfile);
    expect(graph.nodes.map((n) => n.id)).toEqual(
      sampleSeed7.subProfile.nodes.map((n) => n.id),
    );
    expect(graph.edges.map((e) => e.id)).toEqual(
      sampleSeed7.subProfile.edges.map((e) => e.id),
    );
  });

  it("formats display labels from labels and predicate/weight", () => {
    const graph = buildGraph({
      nodes: [{ id: "n0", labels: ["C1", "C3"] }],
      edges: [
        { id: "l2", source: "n0", target: "n0", predicate: "P2", weight: 12 },
      ],
    });
    expect(graph.nodes[0]!.label).toBe("{C1, C3}");
    expect(graph.edges[0]!.label).toBe("P2 (12)");
  });

  it("upload fixture reports the toy profile shape", () => {
    expect(uploadResponse.stats.nodes).toBe(3);
    expect(uploadResponse.stats.edges).toBe(4);
    expect(uploadResponse.stats.predicates).toEqual(["P1", "P2", "P3"]);
  });
});
