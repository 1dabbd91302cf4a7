/**
 * Entry point: wires the three views to tab buttons. The API base can
 * be overridden by setting window.REQLINT_API_BASE before this module
 * loads; by default the UI talks to the server that serves it.
 */

import { ApiClient } from "./api.js";
import { AnalyzeView } from "./views/analyze.js";
import { LabelingView } from "./views/labeling.js";
import { ProjectsView } from "./views/projects.js";

const TABS = ["analyze", "label", "projects"] as const;

type TabName = (typeof TABS)[number];

function apiBase(): string {
  const override = (window as { REQLINT_API_BASE?: unknown }).REQLINT_API_BASE;
  return typeof override === "string" ? override : "";
}

export function boot(root: HTMLElement): void {
  const api = new ApiClient(apiBase());

  root.innerHTML = `
    <header class="app-header">
      <h1>reqlint</h1>
      <nav class="tabs">
        <button class="tab-btn" data-tab="analyze">Analyze</button>
        <button class="tab-btn" data-tab="label">Label</button>
        <button class="tab-btn" data-tab="projects">Projects</button>
      </nav>
    </header>
    <main>
      <section class="tab-panel" data-panel="analyze"></section>
      <section class="tab-panel hidden" data-panel="label"></section>
      <section class="tab-panel hidden" data-panel="projects"></section>
    </main>`;

  const panels: Record<TabName, HTMLElement> = {
    analyze: root.querySelector('[data-panel="analyze"]') as HTMLElement,
    label: root.querySelector('[data-panel="label"]') as HTMLElement,
    projects: root.querySelector('[data-panel="projects"]') as HTMLElement,
  };

  new AnalyzeView(panels.analyze, api);
  const labeling = new LabelingView(panels.label, api);
  const projects = new ProjectsView(panels.projects, api);

  const activate = (tab: TabName) => {
    for (const name of TABS) {
      panels[name].classList.toggle("hidden", name !== tab);
    }
    for (const btn of Array.from(root.querySelectorAll(".tab-btn"))) {
      btn.classList.toggle(
        "active",
        (btn as HTMLElement).dataset.tab === tab,
      );
    }
    if (tab === "label") {
      void labeling.init();
    } else if (tab === "projects") {
      void projects.init();
    }
  };

  for (const btn of Array.from(root.querySelectorAll(".tab-btn"))) {
    btn.addEventListener("click", () => {
      activate((btn as HTMLElement).dataset.tab as TabName);
    });
  }
  activate("analyze");
}

const appRoot = document.getElementById("app");
if (appRoot) {
  boot(appRoot);
}
