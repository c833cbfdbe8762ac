/** Client-side session state: sampling controls, the predicate weight table,
 * the current graph and a history of replayable (request, seed) pairs.
 *
 * Invariants: minLen <= maxLen whenever maxLen is finite; predicate weights
 * are strictly positive integers; history entries are frozen deep copies, so
 * replaying one reproduces the original request verbatim no matter how the
 * live controls changed since. */

import type { Mode, SampleBody, SampleResponse, SubProfileJson } from "./api.js";

export interface Controls {
  minLen: number;
  maxLen: number | null;
  mode: Mode;
  k: number;
}

export interface HistoryEntry {
  request: SampleBody;
  seed: number;
}

const DEFAULT_CONTROLS: Controls = { minLen: 1, maxLen: 5, mode: "hup", k: 10 };

function clone<T>(value: T): T {
  return JSON.parse(JSON.stringify(value)) as T;
}

export class ExplorerState {
  profileId: string | null = null;
  controls: Controls = { ...DEFAULT_CONTROLS };
  predicateWeights: Record<string, number> = {};
  lastSeed: number | null = null;
  subProfile: SubProfileJson | null = null;
  readonly history: HistoryEntry[] = [];

  setProfile(profileId: string): void {
    this.profileId = profileId;
    this.lastSeed = null;
    this.subProfile = null;
    this.history.length = 0;
  }

  setControls(next: Partial<Controls>): void {
    const merged = { ...this.controls, ...next };
    if (!Number.isInteger(merged.minLen) || merged.minLen < 1) {
      throw new Error("minimum length must be an integer >= 1");
    }
    if (merged.maxLen !== null) {
      if (!Number.isInteger(merged.maxLen) || merged.maxLen < merged.minLen) {
        throw new Error("maximum length must be an integer >= minimum length");
      }
    }
    if (merged.mode === "haup" && merged.maxLen === null) {
      throw new Error("average-utility mode needs a finite maximum length");
    }
    if (!Number.isInteger(merged.k) || merged.k < 1) {
      throw new Error("sample count must be an integer >= 1");
    }
    this.controls = merged;
  }

  /** Weight must be a strictly positive integer; delete by setting 1 instead. */
  setPredicateWeight(predicate: string, weight: number): void {
    if (!Number.isInteger(weight) || weight < 1) {
      throw new Error(`weight of ${predicate} must be an integer >= 1`);
    }
    if (weight === 1) {
      delete this.predicateWeights[predicate];
    } else {
      this.predicateWeights[predicate] = weight;
    }
  }

  weightOf(predicate: string): number {
    return this.predicateWeights[predicate] ?? 1;
  }

  /** Request body for the current controls; omit `seed` to let the service
   * pick one (it is echoed back and recorded in history). */
  buildRequest(seed?: number): SampleBody {
    const body: SampleBody = {
      minLen: this.controls.minLen,
      maxLen: this.controls.maxLen,
      mode: this.controls.mode,
      k: this.controls.k,
    };
    if (seed !== undefined) body.seed = seed;
    if (Object.keys(this.predicateWeights).length > 0) {
      body.predicateWeights = { ...this.predicateWeights };
    }
    return body;
  }

  recordResult(request: SampleBody, response: SampleResponse): void {
    const entry: HistoryEntry = {
      request: clone({ ...request, seed: response.seed }),
      seed: response.seed,
    };
    Object.freeze(entry.request);
    this.history.push(entry);
    this.lastSeed = response.seed;
    this.subProfile = response.subProfile;
  }

  /** Verbatim copy of a past request, seed included. */
  replayRequest(index: number): SampleBody {
    const entry = this.history[index];
    if (entry === undefined) {
      throw new Error(`no history entry at index ${index}`);
    }
    return clone(entry.request);
  }
}
