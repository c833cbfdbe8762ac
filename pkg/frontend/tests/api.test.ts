import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { sampleSeed7, toyProfile, uploadResponse } from "./fixtures.js";

type Call = { url: string; init?: RequestInit };

function stubFetch(status: number, payload: unknown, calls: Call[] = []) {
  const fetchFn = (url: string, init?: RequestInit) => {
    calls.push({ url, init });
    return Promise.resolve(
      new Response(JSON.stringify(payload), {
        status,
        headers: { "Content-Type": "application/json" },
      }),
    );
  };
  return { fetchFn, calls };
}

describe("ApiClient", () => {
  it("posts the profile and returns the parsed response", async () => {
    const { fetchFn, calls } = stubFetch(200, uploadResponse);
    const client = new ApiClient("", fetchFn);
    const result = await client.uploadProfile(toyProfile);
    expect(result).toEqual(uploadResponse);
    expect(calls[0]!.url).toBe("/api/profiles");
    expect(JSON.parse(calls[0]!.init!.body as string)).toEqual(toyProfile);
  });

  it("sends the sample body verbatim, seed included", async () => {
    const { fetchFn, calls } = stubFetch(200, sampleSeed7);
    const client = new ApiClient("http://svc", fetchFn);
    const body = { minLen: 1, maxLen: 5, mode: "hup" as const, k: 10, seed: 7 };
    const result = await client.sample("abc", body);
    expect(result.seed).toBe(7);
    expect(calls[0]!.url).toBe("http://svc/api/profiles/abc/sample");
    expect(JSON.parse(calls[0]!.init!.body as string)).toEqual(body);
  });

  it("raises ApiError with the service detail on failure", async () => {
    const { fetchFn } = stubFetch(409, { detail: "no pattern satisfies the constraint" });
    const client = new ApiClient("", fetchFn);
    await expect(
      client.sample("abc", { minLen: 30, maxLen: null, mode: "hup", k: 1 }),
    ).rejects.toMatchObject({
      name: "ApiError",
      status: 409,
      message: "no pattern satisfies the constraint",
    });
  });

  it("forwards the abort signal", async () => {
    const { fetchFn, calls } = stubFetch(200, sampleSeed7);
    const client = new ApiClient("", fetchFn);
    const controller = new AbortController();
    await client.sample(
      "abc",
      { minLen: 1, maxLen: null, mode: "hup", k: 1 },
      controller.signal,
    );
    expect(calls[0]!.init!.signal).toBe(controller.signal);
  });

  it("ApiError is an Error", () => {
    const err = new ApiError(400, "bad");
    expect(err).toBeInstanceOf(Error);
    expect(err.status).toBe(400);
  });
});
