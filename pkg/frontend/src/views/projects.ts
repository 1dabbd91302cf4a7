/**
 * Projects view: create projects, list their requirements, and show a
 * report with the score histogram and, once requirements are reviewed,
 * the detection and error tables. All figures come from the report
 * endpoint untouched.
 */

import { ApiClient, Report, ScoreRow } from "../api.js";
import {
  CRITICALITY_LEVELS,
  DOMAIN_CODES,
  REQUIREMENT_TYPES,
  TEMPLATES,
} from "../profiles.js";

const POLICIES = ["softened", "hardened"];

function td(text: string): HTMLTableCellElement {
  const cell = document.createElement("td");
  cell.textContent = text;
  return cell;
}

function headerRow(names: string[]): HTMLTableRowElement {
  const row = document.createElement("tr");
  for (const name of names) {
    const cell = document.createElement("th");
    cell.textContent = name;
    row.appendChild(cell);
  }
  return row;
}

function fixed(value: number | null | undefined, places: number): string {
  return value === null || value === undefined ? "n/a" : value.toFixed(places);
}

export class ProjectsView {
  readonly root: HTMLElement;

  private api: ApiClient;
  private banner: HTMLElement;
  private listPane: HTMLElement;
  private reportPane: HTMLElement;
  private policySelect: HTMLSelectElement;
  private currentProjectId: string | null = null;

  constructor(root: HTMLElement, api: ApiClient) {
    this.root = root;
    this.api = api;
    this.buildDom();
    this.banner = root.querySelector(".banner") as HTMLElement;
    this.listPane = root.querySelector(".project-list") as HTMLElement;
    this.reportPane = root.querySelector(".report-pane") as HTMLElement;
    this.policySelect = root.querySelector(".policy-select") as HTMLSelectElement;

    (root.querySelector(".create-btn") as HTMLButtonElement).addEventListener(
      "click",
      () => void this.createProject(),
    );
    this.policySelect.addEventListener("change", () => {
      if (this.currentProjectId) {
        void this.showReport(this.currentProjectId);
      }
    });
  }

  private buildDom(): void {
    const options = (values: string[]) =>
      values.map((v) => `<option value="${v}">${v}</option>`).join("");
    this.root.innerHTML = `
      <div class="banner hidden" role="alert"></div>
      <div class="create-form">
        <h3>New project</h3>
        <label>Name <input class="name-input" type="text"></label>
        <label>Domains
          <select class="domains-input" multiple size="4">
            ${options(DOMAIN_CODES)}
          </select>
        </label>
        <label>Criticality
          <select class="criticality-input">${options(CRITICALITY_LEVELS)}</select>
        </label>
        <label>Type
          <select class="type-input">${options(REQUIREMENT_TYPES)}</select>
        </label>
        <label>Template
          <select class="template-input">${options(TEMPLATES)}</select>
        </label>
        <button class="create-btn">Create</button>
      </div>
      <h3>Projects</h3>
      <div class="project-list"></div>
      <div class="report-head">
        <h3>Report</h3>
        <label>Policy
          <select class="policy-select">${options(POLICIES)}</select>
        </label>
      </div>
      <div class="report-pane"></div>`;
  }

  async init(): Promise<void> {
    await this.refreshList();
  }

  private async refreshList(): Promise<void> {
    this.listPane.textContent = "";
    try {
      const projects = await this.api.listProjects();
      if (projects.length === 0) {
        this.listPane.textContent = "no projects yet";
        return;
      }
      const list = document.createElement("ul");
      for (const project of projects) {
        const item = document.createElement("li");
        const link = document.createElement("button");
        link.className = "project-link";
        link.dataset.projectId = project.id;
        link.textContent = `${project.name} [${project.profile.domains.join(", ")}]`;
        link.addEventListener("click", () => void this.showReport(project.id));
        item.appendChild(link);
        list.appendChild(item);
      }
      this.listPane.appendChild(list);
      this.hideBanner();
    } catch (err) {
      this.showBanner(err instanceof Error ? err.message : String(err));
    }
  }

  private async createProject(): Promise<void> {
    const name = (this.root.querySelector(".name-input") as HTMLInputElement).value;
    const domains = Array.from(
      (this.root.querySelector(".domains-input") as HTMLSelectElement).selectedOptions,
    ).map((o) => o.value);
    const profile = {
      domains,
      criticality: (this.root.querySelector(".criticality-input") as HTMLSelectElement)
        .value,
      requirement_type: (this.root.querySelector(".type-input") as HTMLSelectElement)
        .value,
      template: (this.root.querySelector(".template-input") as HTMLSelectElement).value,
    };
    try {
      await this.api.createProject(name, profile);
      (this.root.querySelector(".name-input") as HTMLInputElement).value = "";
      this.hideBanner();
      await this.refreshList();
    } catch (err) {
      this.showBanner(err instanceof Error ? err.message : String(err));
    }
  }

  async showReport(projectId: string): Promise<void> {
    this.currentProjectId = projectId;
    let report: Report;
    try {
      report = await this.api.report(projectId, this.policySelect.value);
      this.hideBanner();
    } catch (err) {
      this.showBanner(err instanceof Error ? err.message : String(err));
      return;
    }
    this.renderReport(report);
  }

  private renderReport(report: Report): void {
    this.reportPane.textContent = "";

    const title = document.createElement("h4");
    title.textContent =
      `${report.project.name}: ${report.n_requirements} requirement(s), ` +
      `${report.policy} policy`;
    this.reportPane.appendChild(title);

    this.reportPane.appendChild(this.requirementTable(report));
    this.reportPane.appendChild(this.histogram(report));

    if (report.evaluation === null) {
      const note = document.createElement("p");
      note.className = "eval-note";
      note.textContent = report.evaluation_note ?? "";
      this.reportPane.appendChild(note);
      return;
    }
    this.reportPane.appendChild(this.detectionTable(report));
    this.reportPane.appendChild(this.scoresTable(report));
    if (report.evaluation.tree) {
      const pre = document.createElement("pre");
      pre.className = "tree-text";
      pre.textContent = report.evaluation.tree;
      this.reportPane.appendChild(pre);
    } else if (report.evaluation.tree_note) {
      const note = document.createElement("p");
      note.className = "tree-note";
      note.textContent = report.evaluation.tree_note;
      this.reportPane.appendChild(note);
    }
  }

  private requirementTable(report: Report): HTMLElement {
    const wrap = document.createElement("div");
    wrap.className = "table-wrap";
    const table = document.createElement("table");
    table.className = "requirement-table";
    table.appendChild(
      headerRow(["text", "clarity", "testability (soft)", "testability (hard)",
                 "findings", "review"]),
    );
    for (const row of report.requirements) {
      const tr = document.createElement("tr");
      tr.appendChild(td(row.text));
      tr.appendChild(td(fixed(row.clarity, 4)));
      tr.appendChild(td(fixed(row.testability.softened, 4)));
      tr.appendChild(td(fixed(row.testability.hardened, 4)));
      tr.appendChild(td(String(row.n_findings)));
      tr.appendChild(td(row.review_flag));
      table.appendChild(tr);
    }
    wrap.appendChild(table);
    return wrap;
  }

  private histogram(report: Report): HTMLElement {
    const box = document.createElement("div");
    box.className = "histogram";
    const caption = document.createElement("h5");
    caption.textContent = `score distribution (${report.histogram.policy})`;
    box.appendChild(caption);
    const bars = document.createElement("div");
    bars.className = "histogram-bars";
    const counts = report.histogram.counts;
    const edges = report.histogram.bin_edges;
    let maxCount = 1;
    for (const count of counts) {
      if (count > maxCount) {
        maxCount = count;
      }
    }
    counts.forEach((count, index) => {
      const bar = document.createElement("div");
      bar.className = "histogram-bar";
      bar.dataset.count = String(count);
      bar.title = `[${fixed(edges[index], 1)}, ${fixed(edges[index + 1], 1)}]: ${count}`;
      const fill = document.createElement("div");
      fill.className = "histogram-fill";
      fill.style.height = `${(count * 100) / maxCount}%`;
      bar.appendChild(fill);
      const label = document.createElement("span");
      label.className = "histogram-label";
      label.textContent = fixed(edges[index], 1);
      bar.appendChild(label);
      bars.appendChild(bar);
    });
    box.appendChild(bars);
    return box;
  }

  private detectionTable(report: Report): HTMLElement {
    const wrap = document.createElement("div");
    wrap.className = "table-wrap";
    const table = document.createElement("table");
    table.className = "detection-table";
    table.appendChild(headerRow(["smell", "tp", "fp", "fn",
                                 "precision", "recall", "f1"]));
    const detection = report.evaluation?.detection ?? {};
    for (const [column, row] of Object.entries(detection)) {
      if (column === "average") {
        continue;
      }
      const detail = row as { tp: number; fp: number; fn: number;
                              precision: number; recall: number; f1: number };
      const tr = document.createElement("tr");
      tr.appendChild(td(column));
      tr.appendChild(td(String(detail.tp)));
      tr.appendChild(td(String(detail.fp)));
      tr.appendChild(td(String(detail.fn)));
      tr.appendChild(td(fixed(detail.precision, 4)));
      tr.appendChild(td(fixed(detail.recall, 4)));
      tr.appendChild(td(fixed(detail.f1, 4)));
      table.appendChild(tr);
    }
    const average = report.evaluation?.detection.average;
    if (average) {
      const tr = document.createElement("tr");
      tr.className = "average-row";
      tr.appendChild(td("average"));
      tr.appendChild(td(""));
      tr.appendChild(td(""));
      tr.appendChild(td(""));
      tr.appendChild(td(fixed(average.precision, 4)));
      tr.appendChild(td(fixed(average.recall, 4)));
      tr.appendChild(td(fixed(average.f1, 4)));
      table.appendChild(tr);
    }
    wrap.appendChild(table);
    return wrap;
  }

  private scoresTable(report: Report): HTMLElement {
    const wrap = document.createElement("div");
    wrap.className = "table-wrap";
    const table = document.createElement("table");
    table.className = "scores-table";
    table.appendChild(headerRow(["policy", "mae", "mse", "rmse", "msle",
                                 "mdae", "spearman", "p-value"]));
    const scores = report.evaluation?.scores ?? {};
    for (const [policy, row] of Object.entries(scores)) {
      const detail = row as ScoreRow;
      const tr = document.createElement("tr");
      tr.appendChild(td(policy));
      tr.appendChild(td(fixed(detail.mae, 4)));
      tr.appendChild(td(fixed(detail.mse, 4)));
      tr.appendChild(td(fixed(detail.rmse, 4)));
      tr.appendChild(td(fixed(detail.msle, 4)));
      tr.appendChild(td(fixed(detail.mdae, 4)));
      tr.appendChild(td(fixed(detail.spearman, 4)));
      tr.appendChild(td(fixed(detail.pvalue, 4)));
      table.appendChild(tr);
    }
    wrap.appendChild(table);
    return wrap;
  }

  private showBanner(message: string): void {
    this.banner.textContent = message;
    this.banner.classList.remove("hidden");
  }

  private hideBanner(): void {
    this.banner.textContent = "";
    this.banner.classList.add("hidden");
  }
}
