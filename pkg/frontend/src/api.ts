/** Thin client over the workbench service. All automata logic stays server-side. */

import type {
  ApiErrorBody,
  AutomatonSummary,
  ExampleEntry,
  NatureKind,
  SessionView,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

/** Structural subset of fetch's Response, so tests can hand in fakes. */
export interface HttpResponse {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
  body: ReadableStream<Uint8Array> | null;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<HttpResponse>;

export type SseHandler = (event: string, data: unknown) => void;

/**
 * Parse a server-sent event stream, invoking the handler per event.
 *
 * The run endpoint is POST-based, which EventSource cannot consume, so the
 * stream is read from a fetch response body instead.
 */
export async function readSseStream(
  stream: ReadableStream<Uint8Array>,
  onEvent: SseHandler,
): Promise<void> {
  const decoder = new TextDecoder();
  const reader = stream.getReader();
  let buffer = "";

  const drain = (final: boolean) => {
    for (;;) {
      const cut = buffer.indexOf("\n\n");
      if (cut < 0) break;
      emitBlock(buffer.slice(0, cut), onEvent);
      buffer = buffer.slice(cut + 2);
    }
    if (final && buffer.trim()) emitBlock(buffer, onEvent);
  };

  for (;;) {
    const { value, done } = await reader.read();
    if (done) break;
    buffer += decoder.decode(value, { stream: true });
    drain(false);
  }
  buffer += decoder.decode();
  drain(true);
}

function emitBlock(block: string, onEvent: SseHandler): void {
  let event = "message";
  const dataLines: string[] = [];
  for (const line of block.split("\n")) {
    if (line.startsWith("event: ")) event = line.slice("event: ".length);
    else if (line.startsWith("data: ")) dataLines.push(line.slice("data: ".length));
  }
  if (dataLines.length > 0) onEvent(event, JSON.parse(dataLines.join("\n")));
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request(method: string, path: string, body?: unknown): Promise<unknown> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = (await response.json()) as ApiErrorBody;
    if (!response.ok) {
      throw new ApiError(response.status, payload.code ?? "UNKNOWN", payload.message ?? "request failed");
    }
    return payload;
  }

  async getExamples(): Promise<ExampleEntry[]> {
    const body = (await this.request("GET", "/examples")) as { examples: ExampleEntry[] };
    return body.examples;
  }

  loadAutomaton(document: unknown): Promise<AutomatonSummary> {
    return this.request("PUT", "/automaton", document) as Promise<AutomatonSummary>;
  }

  addState(name: string, accept: boolean): Promise<AutomatonSummary> {
    return this.request("POST", "/automaton/states", { name, accept }) as Promise<AutomatonSummary>;
  }

  addTransition(from: string, symbol: string, to: string): Promise<AutomatonSummary> {
    return this.request("POST", "/automaton/transitions", { from, symbol, to }) as Promise<AutomatonSummary>;
  }

  async nature(kind: NatureKind): Promise<string[]> {
    const body = (await this.request("GET", `/automaton/nature?kind=${kind}`)) as {
      states: string[];
    };
    return body.states;
  }

  startSession(word: string): Promise<{ sessionId: string; view: SessionView }> {
    return this.request("POST", "/sessions", { word }) as Promise<{
      sessionId: string;
      view: SessionView;
    }>;
  }

  getSession(sessionId: string): Promise<SessionView> {
    return this.request("GET", `/sessions/${sessionId}`) as Promise<SessionView>;
  }

  forward(sessionId: string): Promise<SessionView> {
    return this.request("POST", `/sessions/${sessionId}/forward`) as Promise<SessionView>;
  }

  back(sessionId: string): Promise<SessionView> {
    return this.request("POST", `/sessions/${sessionId}/back`) as Promise<SessionView>;
  }

  async run(sessionId: string, delayMs: number, onEvent: SseHandler): Promise<void> {
    const response = await this.fetchImpl(`${this.baseUrl}/sessions/${sessionId}/run`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ delayMs }),
    });
    if (!response.ok) {
      const payload = (await response.json()) as ApiErrorBody;
      throw new ApiError(response.status, payload.code ?? "UNKNOWN", payload.message ?? "run failed");
    }
    if (!response.body) throw new Error("run endpoint returned no stream");
    await readSseStream(response.body, onEvent);
  }
}
