// Typed client for the compose service. The demo only ever talks to the
// documented endpoints: POST /v1/compose and GET /v1/health.

export interface StageTrace {
  stage_name: string;
  text_after: string;
  labels_applied: string[] | null;
  elapsed_ms: number;
}

export interface RouteInfo {
  kind: "FT" | "LLM";
  score: number;
  reason: string;
}

export interface IntentInfo {
  input_type: string;
  content_type: string;
  endedness: string;
}

export interface ComposeResult {
  output: string;
  blocked: boolean;
  route: RouteInfo;
  intent: IntentInfo;
  traces?: StageTrace[];
  latency_ms?: number;
  stage_latency_ms?: Record<string, number>;
}

export interface ComposeRequest {
  transcript: string;
  content_type?: string;
  trace?: boolean;
  seed?: number;
  adapter?: string;
}

export interface HealthInfo {
  status: string;
  versions: Record<string, string>;
}

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly stage?: string,
  ) {
    super(message);
    this.name = "ApiError";
  }

  get isClientError(): boolean {
    return this.status >= 400 && this.status < 500;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function raiseApiError(response: Response): Promise<never> {
  let message = `request failed (${response.status})`;
  let stage: string | undefined;
  try {
    const body = await response.json();
    const detail = body?.detail;
    if (typeof detail === "string") {
      message = detail;
    } else if (detail && typeof detail === "object") {
      message = detail.error ?? message;
      stage = detail.stage;
    }
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiError(message, response.status, stage);
}

export async function compose(
  baseUrl: string,
  request: ComposeRequest,
  fetchImpl: FetchLike = fetch,
): Promise<ComposeResult> {
  const response = await fetchImpl(`${baseUrl}/v1/compose`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(request),
  });
  if (!response.ok) {
    await raiseApiError(response);
  }
  return (await response.json()) as ComposeResult;
}

export async function health(
  baseUrl: string,
  fetchImpl: FetchLike = fetch,
): Promise<HealthInfo> {
  const response = await fetchImpl(`${baseUrl}/v1/health`);
  if (!response.ok) {
    await raiseApiError(response);
  }
  return (await response.json()) as HealthInfo;
}
