import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { SampleResponse, UploadResponse } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

export function loadFixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as T;
}

export const toyProfile = loadFixture<Record<string, unknown>>("toy_profile.json");
export const uploadResponse = loadFixture<UploadResponse>("upload_response.json");
export const sampleSeed7 = loadFixture<SampleResponse>("sample_seed7.json");
export const sampleFlat = loadFixture<SampleResponse>("sample_flat_weights.json");
export const sampleBoostedP3 = loadFixture<SampleResponse>("sample_boosted_p3.json");
