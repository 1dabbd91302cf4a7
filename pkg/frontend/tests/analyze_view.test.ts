import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { AnalyzeView } from "../src/views/analyze.js";
import {
  ASTRAL_ANALYSIS,
  jsonResponse,
  makeDeferred,
  makeFetch,
  R7_ANALYSIS,
  R7_TEXT,
  Route,
} from "./fixtures.js";

function makeView(routes: Record<string, Route>) {
  const root = document.createElement("div");
  document.body.appendChild(root);
  const { fetchImpl, calls } = makeFetch(routes);
  const view = new AnalyzeView(root, new ApiClient("", fetchImpl));
  return { root, view, calls };
}

function typeText(root: HTMLElement, text: string): void {
  const editor = root.querySelector(".editor") as HTMLTextAreaElement;
  editor.value = text;
  editor.dispatchEvent(new Event("input"));
}

function gaugeValue(root: HTMLElement, cls: string): string {
  const label = root.querySelector(`.${cls}-value`) as HTMLElement;
  return label.dataset.value ?? "";
}

describe("AnalyzeView", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });

  afterEach(() => {
    vi.useRealTimers();
    document.body.textContent = "";
  });

  it("renders one highlight per finding and the server's numbers", async () => {
    const { root, view } = makeView({
      "POST /analyze": () => jsonResponse(200, R7_ANALYSIS),
    });
    typeText(root, R7_TEXT);
    vi.advanceTimersByTime(400);
    await view.lastRequest;

    const marks = root.querySelectorAll(".mirror mark");
    expect(marks).toHaveLength(R7_ANALYSIS.findings.length);
    expect(Number(gaugeValue(root, "clarity"))).toBe(R7_ANALYSIS.clarity);
    expect(Number(gaugeValue(root, "testability-softened"))).toBe(
      R7_ANALYSIS.testability.softened,
    );
    expect(Number(gaugeValue(root, "testability-hardened"))).toBe(
      R7_ANALYSIS.testability.hardened,
    );
    expect((root.querySelector(".sentence-count") as HTMLElement).textContent).toBe("1");
    expect(Number(gaugeValue(root, "clarity")).toFixed(2)).toBe("0.61");
  });

  it("debounces typing into a single request", async () => {
    const { root, view, calls } = makeView({
      "POST /analyze": () => jsonResponse(200, R7_ANALYSIS),
    });
    typeText(root, "The system");
    vi.advanceTimersByTime(100);
    typeText(root, "The system will");
    vi.advanceTimersByTime(100);
    typeText(root, R7_TEXT);
    vi.advanceTimersByTime(400);
    await view.lastRequest;
    expect(calls).toHaveLength(1);
    expect((calls[0].body as { text: string }).text).toBe(R7_TEXT);
  });

  it("discards a stale response that arrives after a newer one", async () => {
    const first = makeDeferred<Response>();
    const second = makeDeferred<Response>();
    let requestCount = 0;
    const { root, view } = makeView({
      "POST /analyze": () => {
        requestCount += 1;
        return requestCount === 1 ? first.promise : second.promise;
      },
    });

    typeText(root, R7_TEXT);
    vi.advanceTimersByTime(400);
    const firstRequest = view.lastRequest;

    typeText(root, "The loader may respond better.");
    vi.advanceTimersByTime(400);
    const secondRequest = view.lastRequest;

    second.resolve(jsonResponse(200, ASTRAL_ANALYSIS));
    await secondRequest;
    first.resolve(jsonResponse(200, R7_ANALYSIS));
    await firstRequest;

    const marks = Array.from(root.querySelectorAll(".mirror mark"));
    expect(marks.map((m) => m.textContent)).toEqual(["may", "better"]);
    expect(Number(gaugeValue(root, "clarity"))).toBe(ASTRAL_ANALYSIS.clarity);
  });

  it("clearing the editor clears highlights and gauges", async () => {
    const { root, view } = makeView({
      "POST /analyze": () => jsonResponse(200, R7_ANALYSIS),
    });
    typeText(root, R7_TEXT);
    vi.advanceTimersByTime(400);
    await view.lastRequest;
    expect(root.querySelectorAll(".mirror mark")).toHaveLength(2);

    typeText(root, "");
    expect((root.querySelector(".mirror") as HTMLElement).textContent).toBe("");
    expect(gaugeValue(root, "clarity")).toBe("");
    expect(gaugeValue(root, "testability-softened")).toBe("");
    expect(gaugeValue(root, "testability-hardened")).toBe("");
  });

  it("a response landing after a clear is dropped", async () => {
    const pending = makeDeferred<Response>();
    const { root, view } = makeView({
      "POST /analyze": () => pending.promise,
    });
    typeText(root, R7_TEXT);
    vi.advanceTimersByTime(400);
    const request = view.lastRequest;

    typeText(root, "");
    pending.resolve(jsonResponse(200, R7_ANALYSIS));
    await request;

    expect((root.querySelector(".mirror") as HTMLElement).textContent).toBe("");
    expect(gaugeValue(root, "clarity")).toBe("");
  });

  it("a clear before the debounce fires cancels the request", async () => {
    const { root, view, calls } = makeView({
      "POST /analyze": () => jsonResponse(200, R7_ANALYSIS),
    });
    typeText(root, R7_TEXT);
    vi.advanceTimersByTime(100);
    typeText(root, "");
    vi.advanceTimersByTime(1000);
    await view.lastRequest;
    expect(calls).toHaveLength(0);
  });

  it("shows a banner on failure and keeps the editor usable", async () => {
    let fail = true;
    const { root, view } = makeView({
      "POST /analyze": () => {
        if (fail) {
          return Promise.reject(new Error("connection refused"));
        }
        return jsonResponse(200, R7_ANALYSIS);
      },
    });
    typeText(root, R7_TEXT);
    vi.advanceTimersByTime(400);
    await view.lastRequest;

    const banner = root.querySelector(".banner") as HTMLElement;
    expect(banner.classList.contains("hidden")).toBe(false);
    expect(banner.textContent).toContain("connection refused");
    const editor = root.querySelector(".editor") as HTMLTextAreaElement;
    expect(editor.disabled).toBe(false);

    fail = false;
    typeText(root, R7_TEXT + " again.");
    vi.advanceTimersByTime(400);
    await view.lastRequest;
    expect(banner.classList.contains("hidden")).toBe(true);
    expect(root.querySelectorAll(".mirror mark")).toHaveLength(2);
  });

  it("shows the server's detail when the API rejects the input", async () => {
    const { root, view } = makeView({
      "POST /analyze": () => jsonResponse(400, { detail: "text is blank" }),
    });
    typeText(root, "   x");
    vi.advanceTimersByTime(400);
    await view.lastRequest;
    const banner = root.querySelector(".banner") as HTMLElement;
    expect(banner.classList.contains("hidden")).toBe(false);
    expect(banner.textContent).toContain("text is blank");
  });
});
