/** Typed client for the annotation service endpoints. */

import type {
  JudgmentBody,
  NextResponse,
  ProgressResponse,
  SubmitResponse,
} from "./types.js";

export interface ServiceConfig {
  baseUrl: string;
  batchId: string;
  annotatorId: string;
  token: string;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ServiceClient {
  private readonly fetchFn: FetchLike;

  constructor(
    private readonly config: ServiceConfig,
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private headers(): Record<string, string> {
    return {
      Authorization: `Bearer ${this.config.token}`,
      "Content-Type": "application/json",
    };
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.config.baseUrl}${path}`, {
      ...init,
      headers: { ...this.headers(), ...(init?.headers ?? {}) },
    });
    if (!response.ok) {
      let detail = `${response.status}`;
      try {
        const body = (await response.json()) as { detail?: string };
        if (body.detail) detail = body.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  nextTask(): Promise<NextResponse> {
    const { batchId, annotatorId } = this.config;
    return this.request<NextResponse>(
      `/batches/${encodeURIComponent(batchId)}/next?annotator=${encodeURIComponent(annotatorId)}`,
    );
  }

  submitJudgment(body: JudgmentBody): Promise<SubmitResponse> {
    return this.request<SubmitResponse>("/judgments", {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  progress(): Promise<ProgressResponse> {
    return this.request<ProgressResponse>(
      `/batches/${encodeURIComponent(this.config.batchId)}/progress`,
    );
  }
}
