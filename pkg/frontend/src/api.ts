/**
 * Typed client for the workbench HTTP API.
 *
 * The client never computes scores; it only carries the numbers the
 * server sends. fetch is injectable so tests can run without a server.
 */

export interface Finding {
  smell: string;
  column: string;
  start: number;
  end: number;
  matched_text: string;
  source: string;
}

export interface PolicyValues {
  softened: number;
  hardened: number;
}

export interface Analysis {
  findings: Finding[];
  n_words: number;
  n_smelly_words: number;
  n_smell_types: number;
  n_sentences: number;
  clarity: number;
  alpha: PolicyValues;
  testability: PolicyValues;
  text?: string;
}

export interface AuditEntry {
  at: string;
  actor: string;
  action: string;
}

export interface RequirementDoc {
  id: string;
  project_id: string;
  text: string;
  content_hash: string;
  analysis: Analysis;
  labels: Record<string, string[]>;
  review_flag: "unreviewed" | "reviewed";
  audit: AuditEntry[];
  lexicon_version: string;
  created_at: string;
}

export interface ProjectProfile {
  domains: string[];
  criticality: string;
  requirement_type: string;
  template: string;
  pinned?: Record<string, number>;
}

export interface ProjectDoc {
  id: string;
  name: string;
  profile: ProjectProfile;
  created_at: string;
}

export interface DetectionRow {
  tp: number;
  fp: number;
  fn: number;
  precision: number;
  recall: number;
  f1: number;
}

export interface ScoreRow {
  mae: number;
  mse: number;
  rmse: number;
  msle: number;
  mdae: number;
  spearman: number | null;
  pvalue: number | null;
}

export interface Evaluation {
  n_requirements: number;
  detection: Record<string, DetectionRow> & {
    average?: { precision: number; recall: number; f1: number };
  };
  scores: Record<string, ScoreRow>;
  tree: string | null;
  tree_note: string | null;
}

export interface ReportRequirementRow {
  id: string;
  text: string;
  clarity: number;
  testability: PolicyValues;
  n_findings: number;
  review_flag: "unreviewed" | "reviewed";
}

export interface Report {
  project: { id: string; name: string };
  policy: string;
  n_requirements: number;
  requirements: ReportRequirementRow[];
  histogram: { policy: string; bin_edges: number[]; counts: number[] };
  evaluation: Evaluation | null;
  evaluation_note: string | null;
}

export interface ImportResult {
  added: string[];
  skipped: number;
  errors: string[];
}

/** Error raised for any non-2xx response, carrying the server's detail. */
export class ApiError extends Error {
  status: number;
  detail: string;

  constructor(status: number, detail: string) {
    super(`${status}: ${detail}`);
    this.status = status;
    this.detail = detail;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function parseDetail(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (typeof body.detail === "string") {
      return body.detail;
    }
    return JSON.stringify(body.detail ?? body);
  } catch {
    return response.statusText || "request failed";
  }
}

export class ApiClient {
  private base: string;
  private fetchImpl: FetchLike;

  constructor(base = "", fetchImpl?: FetchLike) {
    this.base = base.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(this.base + path, init);
    if (!response.ok) {
      throw new ApiError(response.status, await parseDetail(response));
    }
    return (await response.json()) as T;
  }

  listProjects(): Promise<ProjectDoc[]> {
    return this.request("GET", "/projects");
  }

  createProject(name: string, profile: ProjectProfile): Promise<ProjectDoc> {
    return this.request("POST", "/projects", { name, profile });
  }

  getProject(projectId: string): Promise<ProjectDoc> {
    return this.request("GET", `/projects/${projectId}`);
  }

  listRequirements(projectId: string): Promise<RequirementDoc[]> {
    return this.request("GET", `/projects/${projectId}/requirements`);
  }

  addRequirement(projectId: string, text: string): Promise<RequirementDoc> {
    return this.request("POST", `/projects/${projectId}/requirements`, { text });
  }

  getRequirement(requirementId: string): Promise<RequirementDoc> {
    return this.request("GET", `/requirements/${requirementId}`);
  }

  analyze(text: string, projectId?: string, profile?: ProjectProfile): Promise<Analysis> {
    const body: Record<string, unknown> = { text };
    if (projectId !== undefined) {
      body.project_id = projectId;
    }
    if (profile !== undefined) {
      body.profile = profile;
    }
    return this.request("POST", "/analyze", body);
  }

  setLabels(
    requirementId: string,
    labels: Record<string, string[]>,
    actor = "user",
  ): Promise<RequirementDoc> {
    return this.request("PUT", `/requirements/${requirementId}/labels`, { labels, actor });
  }

  review(requirementId: string, actor = "reviewer"): Promise<RequirementDoc> {
    return this.request("POST", `/requirements/${requirementId}/review`, { actor });
  }

  importDataset(projectId: string, csv: string): Promise<ImportResult> {
    return this.request("POST", `/projects/${projectId}/import`, { csv });
  }

  async exportDataset(projectId: string): Promise<string> {
    const response = await this.fetchImpl(`${this.base}/projects/${projectId}/export`, {
      method: "GET",
    });
    if (!response.ok) {
      throw new ApiError(response.status, await parseDetail(response));
    }
    return response.text();
  }

  report(projectId: string, policy?: string): Promise<Report> {
    const query = policy ? `?policy=${encodeURIComponent(policy)}` : "";
    return this.request("GET", `/projects/${projectId}/report${query}`);
  }
}
