import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { ApiClient, RequirementDoc } from "../src/api.js";
import { LabelingView } from "../src/views/labeling.js";
import { freshRequirementDoc, jsonResponse, makeFetch, RecordedCall } from "./fixtures.js";

interface Harness {
  root: HTMLElement;
  view: LabelingView;
  calls: RecordedCall[];
  serverDoc: RequirementDoc;
}

function copy<T>(value: T): T {
  return JSON.parse(JSON.stringify(value)) as T;
}

function makeHarness(putStatus: { status: number; detail?: string } | null = null): Harness {
  const serverDoc = freshRequirementDoc();
  const { fetchImpl, calls } = makeFetch({
    [`GET /requirements/${serverDoc.id}`]: () => jsonResponse(200, serverDoc),
    [`PUT /requirements/${serverDoc.id}/labels`]: (call) => {
      if (putStatus) {
        return jsonResponse(putStatus.status, { detail: putStatus.detail });
      }
      const body = call.body as { labels: Record<string, string[]>; actor: string };
      serverDoc.labels = copy(body.labels);
      serverDoc.review_flag = "unreviewed";
      serverDoc.audit.push({
        at: "2026-08-19T08:00:00Z",
        actor: body.actor,
        action: "labels_updated",
      });
      return jsonResponse(200, serverDoc);
    },
    [`POST /requirements/${serverDoc.id}/review`]: (call) => {
      const body = call.body as { actor: string };
      serverDoc.review_flag = "reviewed";
      serverDoc.audit.push({
        at: "2026-08-19T08:00:00Z",
        actor: body.actor,
        action: "reviewed",
      });
      return jsonResponse(200, serverDoc);
    },
    "GET /projects": () =>
      jsonResponse(200, [
        {
          id: serverDoc.project_id,
          name: "Gamma-J",
          profile: {
            domains: ["EC", "CS"],
            criticality: "business_critical",
            requirement_type: "functional",
            template: "single_sentence",
            pinned: {},
          },
          created_at: serverDoc.created_at,
        },
      ]),
    [`GET /projects/${serverDoc.project_id}/requirements`]: () =>
      jsonResponse(200, [serverDoc]),
  });
  const root = document.createElement("div");
  document.body.appendChild(root);
  const view = new LabelingView(root, new ApiClient("", fetchImpl));
  return { root, view, calls, serverDoc };
}

function clickToken(root: HTMLElement, index: number): void {
  const token = root.querySelector(`.token[data-index="${index}"]`) as HTMLElement;
  token.click();
}

function clickSmell(root: HTMLElement, column: string): void {
  const btn = root.querySelector(`.palette-btn[data-column="${column}"]`) as HTMLElement;
  btn.click();
}

function putCalls(calls: RecordedCall[]): RecordedCall[] {
  return calls.filter((c) => c.method === "PUT");
}

describe("LabelingView", () => {
  beforeEach(() => {
    document.body.textContent = "";
  });

  afterEach(() => {
    document.body.textContent = "";
  });

  it("lists projects in the picker", async () => {
    const { root, view } = makeHarness();
    await view.init();
    const options = Array.from(
      (root.querySelector(".project-select") as HTMLSelectElement).options,
    );
    expect(options.map((o) => o.textContent)).toContain("Gamma-J");
  });

  it("renders each word as a clickable token", async () => {
    const { root, view, serverDoc } = makeHarness();
    await view.load(serverDoc.id);
    const tokens = root.querySelectorAll(".token");
    expect(tokens).toHaveLength(13);
    expect((root.querySelector(".token-pane") as HTMLElement).textContent).toBe(
      serverDoc.text,
    );
  });

  it("labels a selected token with the picked smell", async () => {
    const { root, view, serverDoc } = makeHarness();
    await view.load(serverDoc.id);
    clickToken(root, 9);
    expect(view.selectedTerm()).toBe("faster");
    clickSmell(root, "comparative");
    expect(view.labels).toEqual({ comparative: ["faster"] });
    expect((root.querySelector(".save-state") as HTMLElement).textContent).toBe(
      "unsaved changes",
    );
    expect(root.querySelectorAll(".chip")).toHaveLength(1);
  });

  it("extends the selection across a token run", async () => {
    const { root, view, serverDoc } = makeHarness();
    await view.load(serverDoc.id);
    clickToken(root, 4);
    clickToken(root, 5);
    expect(view.selectedTerm()).toBe("on demand");
    clickSmell(root, "vague_pronoun");
    expect(view.labels).toEqual({ vague_pronoun: ["on demand"] });
  });

  it("keeps duplicate terms as a multiset", async () => {
    const { root, view, serverDoc } = makeHarness();
    await view.load(serverDoc.id);
    clickToken(root, 9);
    clickSmell(root, "comparative");
    clickToken(root, 9);
    clickSmell(root, "comparative");
    expect(view.labels).toEqual({ comparative: ["faster", "faster"] });
    expect(root.querySelectorAll(".chip")).toHaveLength(2);
  });

  it("saved state equals the server's label multiset after save", async () => {
    const { root, view, calls, serverDoc } = makeHarness();
    await view.load(serverDoc.id);
    clickToken(root, 9);
    clickSmell(root, "comparative");
    clickToken(root, 12);
    clickSmell(root, "polysemy");
    await view.save();

    expect(putCalls(calls)).toHaveLength(1);
    expect(putCalls(calls)[0].body).toEqual({
      labels: { comparative: ["faster"], polysemy: ["pages."] },
      actor: "user",
    });
    expect(view.labels).toEqual(serverDoc.labels);
    expect(view.isDirty()).toBe(false);
    expect((root.querySelector(".save-state") as HTMLElement).textContent).toBe("saved");
  });

  it("removing a chip removes one occurrence only", async () => {
    const { root, view, serverDoc } = makeHarness();
    await view.load(serverDoc.id);
    clickToken(root, 9);
    clickSmell(root, "comparative");
    clickToken(root, 9);
    clickSmell(root, "comparative");
    (root.querySelector(".chip-remove") as HTMLElement).click();
    expect(view.labels).toEqual({ comparative: ["faster"] });
  });

  it("review marks the document reviewed and disables the button", async () => {
    const { root, view, serverDoc } = makeHarness();
    await view.load(serverDoc.id);
    await view.markReviewed();
    expect(serverDoc.review_flag).toBe("reviewed");
    expect((root.querySelector(".review-state") as HTMLElement).textContent).toBe(
      "reviewed",
    );
    expect((root.querySelector(".review-btn") as HTMLButtonElement).disabled).toBe(true);
  });

  it("a concurrent edit turns save into a reload prompt", async () => {
    const { root, view, calls, serverDoc } = makeHarness();
    await view.load(serverDoc.id);
    clickToken(root, 9);
    clickSmell(root, "comparative");

    serverDoc.audit.push({
      at: "2026-08-19T08:30:00Z",
      actor: "someone-else",
      action: "labels_updated",
    });
    await view.save();

    expect(putCalls(calls)).toHaveLength(0);
    const conflict = root.querySelector(".conflict") as HTMLElement;
    expect(conflict.classList.contains("hidden")).toBe(false);

    (root.querySelector(".reload-btn") as HTMLElement).click();
    await view.lastLoad;
    expect(conflict.classList.contains("hidden")).toBe(true);
    expect(view.labels).toEqual(serverDoc.labels);

    clickToken(root, 9);
    clickSmell(root, "comparative");
    await view.save();
    expect(putCalls(calls)).toHaveLength(1);
  });

  it("an invalid term is flagged at its chip", async () => {
    const { root, view, serverDoc } = makeHarness({
      status: 400,
      detail: "term 'faster' does not occur in the text",
    });
    await view.load(serverDoc.id);
    clickToken(root, 9);
    clickSmell(root, "comparative");
    await view.save();

    const chip = root.querySelector('.chip[data-term="faster"]') as HTMLElement;
    expect(chip.classList.contains("chip-error")).toBe(true);
    const banner = root.querySelector(".banner") as HTMLElement;
    expect(banner.classList.contains("hidden")).toBe(false);
    expect(banner.textContent).toContain("faster");
    expect(view.isDirty()).toBe(true);
  });
});
