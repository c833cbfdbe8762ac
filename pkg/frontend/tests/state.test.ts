import { beforeEach, describe, expect, it } from "vitest";

import { ExplorerState } from "../src/state.js";
import { sampleSeed7 } from "./fixtures.js";

describe("ExplorerState", () => {
  let state: ExplorerState;

  beforeEach(() => {
    state = new ExplorerState();
    state.setProfile("profile-1");
  });

  it("rejects min > max", () => {
    expect(() => state.setControls({ minLen: 4, maxLen: 2 })).toThrow();
    expect(() => state.setControls({ minLen: 0 })).toThrow();
    expect(() => state.setControls({ k: 0 })).toThrow();
  });

  it("accepts unbounded max for utility mode only", () => {
    state.setControls({ maxLen: null });
    expect(() => state.setControls({ mode: "haup" })).toThrow();
    state.setControls({ maxLen: 4, mode: "haup" });
    expect(state.controls.mode).toBe("haup");
  });

  it("predicate weights default to 1 and reject non-positive values", () => {
    expect(state.weightOf("P3")).toBe(1);
    expect(() => state.setPredicateWeight("P3", 0)).toThrow();
    expect(() => state.setPredicateWeight("P3", -2)).toThrow();
    expect(() => state.setPredicateWeight("P3", 1.5)).toThrow();
    state.setPredicateWeight("P3", 5);
    expect(state.weightOf("P3")).toBe(5);
  });

  it("omits an all-default weight table from the request", () => {
    expect(state.buildRequest(1).predicateWeights).toBeUndefined();
    state.setPredicateWeight("P1", 3);
    expect(state.buildRequest(1).predicateWeights).toEqual({ P1: 3 });
    state.setPredicateWeight("P1", 1);
    expect(state.buildRequest(1).predicateWeights).toBeUndefined();
  });

  it("records history with the echoed seed and replays verbatim", () => {
    state.setControls({ minLen: 1, maxLen: 5, k: 10 });
    const request = state.buildRequest(7);
    state.recordResult(request, sampleSeed7);
    expect(state.lastSeed).toBe(sampleSeed7.seed);
    expect(state.subProfile).toEqual(sampleSeed7.subProfile);

    // mutate live controls and weights after the draw
    state.setControls({ minLen: 2, maxLen: 3, k: 99 });
    state.setPredicateWeight("P1", 9);

    const replay = state.replayRequest(0);
    expect(replay).toEqual({ minLen: 1, maxLen: 5, mode: "hup", k: 10, seed: 7 });
  });

  it("replay of a server-chosen seed round-trips", () => {
    const request = state.buildRequest(); // no seed: the service picks one
    state.recordResult(request, { ...sampleSeed7, seed: 123456 });
    expect(state.replayRequest(0).seed).toBe(123456);
  });

  it("history entries are immutable", () => {
    state.recordResult(state.buildRequest(7), sampleSeed7);
    const entry = state.history[0]!;
    expect(() => {
      (entry.request as { k: number }).k = 42;
    }).toThrow();
    expect(() => state.replayRequest(3)).toThrow();
  });

  it("switching profiles clears history and results", () => {
    state.recordResult(state.buildRequest(7), sampleSeed7);
    state.setProfile("profile-2");
    expect(state.history).toHaveLength(0);
    expect(state.subProfile).toBeNull();
    expect(state.lastSeed).toBeNull();
  });
});
