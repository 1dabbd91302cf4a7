/**
 * Server responses captured from a live workbench, plus a tiny fetch
 * fake. Tests run against these so they exercise the exact JSON shapes
 * the API produces.
 */

import { Analysis, RequirementDoc } from "../src/api.js";

export const R7_TEXT =
  "The system will employ on demand asynchronous loading for faster " +
  "execution of pages.";

export const R7_ANALYSIS: Analysis = {
  findings: [
    {
      smell: "S5",
      column: "comparative",
      start: 58,
      end: 64,
      matched_text: "faster",
      source: "pos",
    },
    {
      smell: "S9",
      column: "polysemy",
      start: 78,
      end: 83,
      matched_text: "pages",
      source: "lexicon",
    },
  ],
  n_words: 13,
  n_smelly_words: 2,
  n_smell_types: 2,
  n_sentences: 1,
  clarity: 0.6077677297236319,
  alpha: { softened: 0.34450000000000003, hardened: 0.6145 },
  testability: { softened: 0.6077677297236319, hardened: 0.6077677297236319 },
  text: R7_TEXT,
};

export const ASTRAL_TEXT = "The loader \u{1F680} may respond better than the old one.";

export const ASTRAL_ANALYSIS: Analysis = {
  findings: [
    {
      smell: "S8",
      column: "uncertain_verb",
      start: 13,
      end: 16,
      matched_text: "may",
      source: "pos",
    },
    {
      smell: "S5",
      column: "comparative",
      start: 25,
      end: 31,
      matched_text: "better",
      source: "pos",
    },
  ],
  n_words: 9,
  n_smelly_words: 2,
  n_smell_types: 2,
  n_sentences: 1,
  clarity: 0.5285954792089683,
  alpha: { softened: 0.34450000000000003, hardened: 0.6145 },
  testability: { softened: 0.5285954792089683, hardened: 0.5285954792089683 },
  text: ASTRAL_TEXT,
};

export function freshRequirementDoc(): RequirementDoc {
  return {
    id: "fc1a98477301",
    project_id: "2ecd18048502",
    text: R7_TEXT,
    content_hash: "416bc601e60d1e98",
    analysis: { ...R7_ANALYSIS, text: undefined },
    labels: {},
    review_flag: "unreviewed",
    audit: [{ at: "2026-08-19T07:33:09Z", actor: "user", action: "created" }],
    lexicon_version: "24a8ceaa88ce",
    created_at: "2026-08-19T07:33:09Z",
  };
}

/** Minimal structural stand-in for a fetch Response. */
export function jsonResponse(status: number, body: unknown): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    statusText: String(status),
    json: () => Promise.resolve(JSON.parse(JSON.stringify(body))),
    text: () => Promise.resolve(JSON.stringify(body)),
  } as unknown as Response;
}

export function textResponse(status: number, body: string): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    statusText: String(status),
    json: () => Promise.reject(new Error("not json")),
    text: () => Promise.resolve(body),
  } as unknown as Response;
}

export interface RecordedCall {
  url: string;
  method: string;
  body: unknown;
}

export type Route = (call: RecordedCall) => Response | Promise<Response>;

/** fetch fake: records every call and routes it by "METHOD path". */
export function makeFetch(routes: Record<string, Route>) {
  const calls: RecordedCall[] = [];
  const fetchImpl = (input: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(init.body as string) : undefined;
    const call = { url: input, method, body };
    calls.push(call);
    const path = input.replace(/^https?:\/\/[^/]+/, "").split("?")[0];
    const route = routes[`${method} ${path}`];
    if (!route) {
      return Promise.reject(new Error(`no route for ${method} ${path}`));
    }
    return Promise.resolve(route(call));
  };
  return { fetchImpl, calls };
}

export interface Deferred<T> {
  promise: Promise<T>;
  resolve: (value: T) => void;
  reject: (err: unknown) => void;
}

export function makeDeferred<T>(): Deferred<T> {
  let resolve!: (value: T) => void;
  let reject!: (err: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}
