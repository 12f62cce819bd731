/** Typed client for the inhabitation service's HTTP/JSON API. */

export type NodeStatus = "normal" | "todo" | "unproductive";

export interface NodeDoc {
  id: string;
  type: string;
  status: NodeStatus;
}

export interface EdgeArgDoc {
  pos: number;
  node: string;
}

export interface EdgeDoc {
  id: string;
  label: string;
  result: string;
  args: EdgeArgDoc[];
  unproductive: boolean;
  source?: string;
}

export interface HypergraphDoc {
  nodes: NodeDoc[];
  edges: EdgeDoc[];
}

export interface NoSolutionDoc {
  solution: false;
  reason: string;
  message: string;
}

export type ResultDoc = HypergraphDoc | NoSolutionDoc;

export function isNoSolution(doc: ResultDoc): doc is NoSolutionDoc {
  return "solution" in doc && doc.solution === false;
}

export interface ReportEntryDoc {
  type: string;
  reason: string;
}

export interface ReportDoc {
  entries: ReportEntryDoc[];
}

export interface CombinatorDoc {
  name: string;
  type: string;
  variables?: { name: string; domain: string[] }[];
  source?: string;
}

export interface RepositoryDoc {
  combinators: CombinatorDoc[];
  taxonomy?: { sub: string; super: string }[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private async call<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchFn(this.baseUrl + path, init);
    if (!resp.ok) {
      let detail = resp.statusText;
      try {
        const body = await resp.json();
        if (body && body.detail !== undefined) {
          detail = Array.isArray(body.detail)
            ? body.detail.join("; ")
            : String(body.detail);
        }
      } catch {
        /* non-JSON error body: keep the status text */
      }
      throw new ApiError(resp.status, detail);
    }
    return (await resp.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.call<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  async createSession(repository: RepositoryDoc): Promise<string> {
    const { id } = await this.post<{ id: string }>("/sessions", repository);
    return id;
  }

  async submitRequest(sessionId: string, target: string): Promise<number> {
    const { ordinal } = await this.post<{ ordinal: number }>(
      `/sessions/${sessionId}/requests`,
      { target },
    );
    return ordinal;
  }

  getResult(
    sessionId: string,
    ordinal: number,
    showUnproductive = true,
  ): Promise<ResultDoc> {
    return this.call(
      `/sessions/${sessionId}/requests/${ordinal}/result` +
        `?unproductive=${showUnproductive}`,
    );
  }

  getStepGraph(
    sessionId: string,
    ordinal: number,
    step: number,
    showUnproductive = true,
  ): Promise<HypergraphDoc> {
    return this.call(
      `/sessions/${sessionId}/requests/${ordinal}/steps/${step}` +
        `?unproductive=${showUnproductive}`,
    );
  }

  async getStepCount(sessionId: string, ordinal: number): Promise<number> {
    const { steps } = await this.call<{ steps: number }>(
      `/sessions/${sessionId}/requests/${ordinal}/trace`,
    );
    return steps;
  }

  getReports(sessionId: string, ordinal: number): Promise<ReportDoc> {
    return this.call(`/sessions/${sessionId}/requests/${ordinal}/reports`);
  }

  async getTerms(
    sessionId: string,
    ordinal: number,
    max = 25,
  ): Promise<string[]> {
    const { terms } = await this.call<{ terms: string[] }>(
      `/sessions/${sessionId}/requests/${ordinal}/terms?max=${max}`,
    );
    return terms;
  }

  getRepository(sessionId: string): Promise<RepositoryDoc> {
    return this.call(`/sessions/${sessionId}/repository`);
  }
}
