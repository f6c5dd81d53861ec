// Thin typed client for the argfacets service.

import {
  ExampleEntry,
  FrameworkDetail,
  FrameworkHandle,
  Polarity,
  SemanticsTag,
  SessionHandle,
  SessionStatePayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function parse<T>(resp: Response): Promise<T> {
  const body = await resp.json().catch(() => ({}));
  if (!resp.ok) {
    const detail =
      typeof body === "object" && body !== null && "detail" in body
        ? String((body as { detail: unknown }).detail)
        : resp.statusText;
    throw new ApiError(resp.status, detail);
  }
  return body as T;
}

export class ApiClient {
  constructor(private readonly base: string) {}

  private url(path: string): string {
    return this.base.replace(/\/$/, "") + path;
  }

  private get<T>(path: string): Promise<T> {
    return fetch(this.url(path)).then((r) => parse<T>(r));
  }

  private post<T>(path: string, body?: unknown): Promise<T> {
    return fetch(this.url(path), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? null : JSON.stringify(body),
    }).then((r) => parse<T>(r));
  }

  health(): Promise<{ status: string }> {
    return this.get("/health");
  }

  listExamples(): Promise<ExampleEntry[]> {
    return this.get("/examples");
  }

  loadExample(name: string): Promise<FrameworkHandle> {
    return this.post(`/examples/${encodeURIComponent(name)}/load`);
  }

  uploadFramework(
    text: string,
    format: string,
    name?: string,
  ): Promise<FrameworkHandle> {
    return this.post("/frameworks", { text, format, name });
  }

  listFrameworks(): Promise<FrameworkHandle[]> {
    return this.get("/frameworks");
  }

  frameworkDetail(id: string): Promise<FrameworkDetail> {
    return this.get(`/frameworks/${id}`);
  }

  createSession(
    frameworkId: string,
    semantics: SemanticsTag,
  ): Promise<SessionHandle> {
    return this.post("/sessions", {
      framework_id: frameworkId,
      semantics,
    });
  }

  sessionState(id: string): Promise<SessionStatePayload> {
    return this.get(`/sessions/${id}`);
  }

  approve(
    id: string,
    argument: string,
    polarity: Polarity,
  ): Promise<SessionStatePayload> {
    return this.post(`/sessions/${id}/approve`, { argument, polarity });
  }

  undo(id: string): Promise<SessionStatePayload> {
    return this.post(`/sessions/${id}/undo`);
  }
}
