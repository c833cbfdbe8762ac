/** Typed client for the sampling service. All math happens server-side; the
 * client only ships JSON back and forth. */

export type Mode = "hup" | "haup";

export interface SampleBody {
  minLen: number;
  maxLen: number | null;
  mode: Mode;
  k: number;
  seed?: number;
  predicateWeights?: Record<string, number>;
}

export interface SampleRecordJson {
  items: string[];
  length: number;
  utility: number;
  transaction: number;
}

export interface SubProfileNodeJson {
  id: string;
  labels: string[];
}

export interface SubProfileEdgeJson {
  id: string;
  source: string;
  target: string;
  predicate: string;
  weight: number;
}

export interface SubProfileJson {
  nodes: SubProfileNodeJson[];
  edges: SubProfileEdgeJson[];
}

export interface SampleResponse {
  records: SampleRecordJson[];
  subProfile: SubProfileJson;
  seed: number;
  timings: { preprocessMs: number; drawMsPerPattern: number };
}

export interface ProfileStats {
  nodes: number;
  edges: number;
  predicates: string[];
  totalWeight: number;
  transactions?: {
    transactions: number;
    items: number;
    minLength: number;
    maxLength: number;
    avgLength: number;
    totalUtility: number;
  };
}

export interface UploadResponse {
  profileId: string;
  stats: ProfileStats;
}

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function readJson(response: Response): Promise<unknown> {
  if (!response.ok) {
    let detail = response.statusText || `HTTP ${response.status}`;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return response.json();
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private post(path: string, body: unknown, signal?: AbortSignal): Promise<unknown> {
    return this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
      signal,
    }).then(readJson);
  }

  uploadProfile(profile: unknown): Promise<UploadResponse> {
    return this.post("/api/profiles", profile) as Promise<UploadResponse>;
  }

  profileStats(profileId: string): Promise<ProfileStats> {
    return this.fetchFn(`${this.baseUrl}/api/profiles/${profileId}/stats`).then(
      readJson,
    ) as Promise<ProfileStats>;
  }

  sample(
    profileId: string,
    body: SampleBody,
    signal?: AbortSignal,
  ): Promise<SampleResponse> {
    return this.post(
      `/api/profiles/${profileId}/sample`,
      body,
      signal,
    ) as Promise<SampleResponse>;
  }
}
