/** Typed client for the weighting service. All numbers shown anywhere in
 * the UI originate from these responses; the client never computes any. */

export interface EvaluationRequest {
  criteria: string[];
  best: string;
  worst: string;
  best_to_other: Record<string, number>;
  other_to_worst: Record<string, number>;
  options?: { normalize_cr?: boolean };
  ui?: unknown;
}

export type CaseTag = "CONSISTENT" | "CASE_I0" | "CASE_J0" | "CASE_I0J0";

export interface EpsPairEntry {
  pair: [string, string];
  value: number;
}

export interface CheckResponse {
  eps_i: Record<string, number>;
  eps_ij: EpsPairEntry[];
  d1: string[];
  d2: string[];
  i0: string | null;
  j0: string | null;
  case: CaseTag;
  eps_star: number;
  tied_cases: string[];
  ci: number;
  cr: number;
  cr_normalized: boolean;
  consistent: boolean;
  warnings: string[];
}

export interface SerializedPcs {
  criteria: string[];
  best: string;
  worst: string;
  best_to_other: Record<string, number>;
  other_to_worst: Record<string, number>;
}

export interface EvaluateResponse {
  request: EvaluationRequest;
  diagnostics: Omit<CheckResponse, "ci" | "cr" | "cr_normalized" | "consistent" | "warnings">;
  consistency: {
    eps_star: number;
    ci: number;
    cr: number;
    cr_normalized: boolean;
    consistent: boolean;
  };
  interval_weights: Record<string, [number, number]>;
  best_modified_pcs: SerializedPcs;
  best_weights: Record<string, number>;
  deviations: Record<string, number>;
  warnings: string[];
}

export interface HealthResponse {
  status: string;
  version: string;
}

/** Service rejected the request (HTTP 4xx/5xx with a structured body). */
export class ApiError extends Error {
  constructor(
    readonly code: string,
    readonly detail: string,
    readonly status: number,
  ) {
    super(`${code}: ${detail}`);
  }
}

/** The service could not be reached at all. */
export class OfflineError extends Error {
  constructor(cause: unknown) {
    super("service unreachable");
    this.cause = cause;
  }
}

/** Raced check superseded by a newer one; callers should ignore it. */
export class SupersededError extends Error {
  constructor() {
    super("superseded by a newer check");
  }
}

type FetchLike = typeof fetch;

export class ApiClient {
  private inflightCheck: AbortController | null = null;

  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  /** Live consistency feedback. At most one check is in flight: issuing a
   * new one aborts the previous, whose caller sees SupersededError. */
  async check(request: EvaluationRequest): Promise<CheckResponse> {
    this.inflightCheck?.abort();
    const controller = new AbortController();
    this.inflightCheck = controller;
    try {
      return await this.post<CheckResponse>("/api/check", request, controller.signal);
    } catch (err) {
      if (controller.signal.aborted) throw new SupersededError();
      throw err;
    } finally {
      if (this.inflightCheck === controller) this.inflightCheck = null;
    }
  }

  async evaluate(request: EvaluationRequest): Promise<EvaluateResponse> {
    return this.post<EvaluateResponse>("/api/evaluate", request);
  }

  async health(): Promise<HealthResponse> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}/api/health`);
    } catch (err) {
      throw new OfflineError(err);
    }
    return (await response.json()) as HealthResponse;
  }

  private async post<T>(
    path: string,
    body: unknown,
    signal?: AbortSignal,
  ): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}${path}`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
        signal,
      });
    } catch (err) {
      if (signal?.aborted) throw new SupersededError();
      throw new OfflineError(err);
    }
    const payload = await response.json();
    if (!response.ok) {
      const error = payload as { error?: string; detail?: string };
      throw new ApiError(
        error.error ?? "UNKNOWN",
        error.detail ?? "request failed",
        response.status,
      );
    }
    return payload as T;
  }
}
