/**
 * Labeling view: pick a stored requirement, select a token run, tag it
 * with a smell, then save the label set back to the server.
 *
 * Saving re-checks the document's audit length first; if someone else
 * edited it since it was loaded, the view offers a reload instead of
 * silently overwriting their work.
 */

import { ApiClient, ApiError, ProjectDoc, RequirementDoc } from "../api.js";
import { SMELLS, smellInfo } from "../theme.js";

interface Token {
  start: number;
  end: number;
}

function tokenize(text: string): Token[] {
  const tokens: Token[] = [];
  const pattern = /\S+/g;
  let match: RegExpExecArray | null;
  while ((match = pattern.exec(text)) !== null) {
    tokens.push({ start: match.index, end: match.index + match[0].length });
  }
  return tokens;
}

export class LabelingView {
  readonly root: HTMLElement;
  labels: Record<string, string[]> = {};
  /** resolves when the most recent load or reload has settled */
  lastLoad: Promise<void> = Promise.resolve();

  private api: ApiClient;
  private doc: RequirementDoc | null = null;
  private auditLength = 0;
  private tokens: Token[] = [];
  private anchor: number | null = null;
  private focus: number | null = null;
  private dirty = false;

  private projectSelect: HTMLSelectElement;
  private requirementSelect: HTMLSelectElement;
  private textPane: HTMLElement;
  private chipPane: HTMLElement;
  private banner: HTMLElement;
  private conflict: HTMLElement;
  private saveState: HTMLElement;
  private reviewState: HTMLElement;
  private saveButton: HTMLButtonElement;
  private reviewButton: HTMLButtonElement;

  constructor(root: HTMLElement, api: ApiClient) {
    this.root = root;
    this.api = api;
    this.buildDom();
    this.projectSelect = root.querySelector(".project-select") as HTMLSelectElement;
    this.requirementSelect = root.querySelector(".requirement-select") as HTMLSelectElement;
    this.textPane = root.querySelector(".token-pane") as HTMLElement;
    this.chipPane = root.querySelector(".chip-pane") as HTMLElement;
    this.banner = root.querySelector(".banner") as HTMLElement;
    this.conflict = root.querySelector(".conflict") as HTMLElement;
    this.saveState = root.querySelector(".save-state") as HTMLElement;
    this.reviewState = root.querySelector(".review-state") as HTMLElement;
    this.saveButton = root.querySelector(".save-btn") as HTMLButtonElement;
    this.reviewButton = root.querySelector(".review-btn") as HTMLButtonElement;

    this.projectSelect.addEventListener("change", () => {
      void this.loadRequirementList(this.projectSelect.value);
    });
    this.requirementSelect.addEventListener("change", () => {
      if (this.requirementSelect.value) {
        this.lastLoad = this.load(this.requirementSelect.value);
      }
    });
    this.saveButton.addEventListener("click", () => void this.save());
    this.reviewButton.addEventListener("click", () => void this.markReviewed());
    (root.querySelector(".reload-btn") as HTMLButtonElement).addEventListener(
      "click",
      () => {
        this.lastLoad = this.reload();
      },
    );
  }

  private buildDom(): void {
    const palette = SMELLS.map(
      (s) => `
      <button class="palette-btn" data-column="${s.column}"
        title="${s.name}: ${s.definition}"
        style="border-color: ${s.color}">
        <span class="legend-swatch" style="background-color: ${s.color}"></span>
        ${s.code} ${s.name}
      </button>`,
    ).join("");
    this.root.innerHTML = `
      <div class="banner hidden" role="alert"></div>
      <div class="conflict hidden" role="alert">
        <span>This requirement changed on the server since it was loaded.</span>
        <button class="reload-btn">Reload</button>
      </div>
      <div class="picker-row">
        <label>Project <select class="project-select"></select></label>
        <label>Requirement <select class="requirement-select"></select></label>
      </div>
      <div class="token-pane"></div>
      <p class="hint">Click a word, optionally click a second word to extend
        the run, then pick a smell.</p>
      <div class="palette">${palette}</div>
      <div class="chip-pane"></div>
      <div class="label-actions">
        <button class="save-btn">Save labels</button>
        <span class="save-state"></span>
        <button class="review-btn">Mark reviewed</button>
        <span class="review-state"></span>
      </div>`;
    for (const btn of Array.from(this.root.querySelectorAll(".palette-btn"))) {
      btn.addEventListener("click", () => {
        this.applySmell((btn as HTMLElement).dataset.column as string);
      });
    }
  }

  /** Populate the project picker; used at tab activation. */
  async init(): Promise<void> {
    let projects: ProjectDoc[];
    try {
      projects = await this.api.listProjects();
    } catch (err) {
      this.showBanner(err instanceof Error ? err.message : String(err));
      return;
    }
    this.projectSelect.textContent = "";
    const blank = document.createElement("option");
    blank.value = "";
    blank.textContent = "(pick a project)";
    this.projectSelect.appendChild(blank);
    for (const project of projects) {
      const option = document.createElement("option");
      option.value = project.id;
      option.textContent = project.name;
      this.projectSelect.appendChild(option);
    }
  }

  private async loadRequirementList(projectId: string): Promise<void> {
    this.requirementSelect.textContent = "";
    if (!projectId) {
      return;
    }
    let docs: RequirementDoc[];
    try {
      docs = await this.api.listRequirements(projectId);
    } catch (err) {
      this.showBanner(err instanceof Error ? err.message : String(err));
      return;
    }
    const blank = document.createElement("option");
    blank.value = "";
    blank.textContent = "(pick a requirement)";
    this.requirementSelect.appendChild(blank);
    for (const doc of docs) {
      const option = document.createElement("option");
      option.value = doc.id;
      option.textContent = doc.text.length > 60 ? doc.text.slice(0, 57) + "..." : doc.text;
      this.requirementSelect.appendChild(option);
    }
  }

  /** Fetch one requirement and show it for labeling. */
  async load(requirementId: string): Promise<void> {
    try {
      this.applyDoc(await this.api.getRequirement(requirementId));
      this.hideBanner();
    } catch (err) {
      this.showBanner(err instanceof Error ? err.message : String(err));
    }
  }

  private async reload(): Promise<void> {
    if (this.doc) {
      this.conflict.classList.add("hidden");
      await this.load(this.doc.id);
    }
  }

  private applyDoc(doc: RequirementDoc): void {
    this.doc = doc;
    this.auditLength = doc.audit.length;
    this.labels = {};
    for (const [column, terms] of Object.entries(doc.labels)) {
      this.labels[column] = [...terms];
    }
    this.anchor = null;
    this.focus = null;
    this.dirty = false;
    this.tokens = tokenize(doc.text);
    this.renderTokens();
    this.renderChips();
    this.renderState();
  }

  private renderTokens(): void {
    this.textPane.textContent = "";
    if (!this.doc) {
      return;
    }
    const text = this.doc.text;
    let cursor = 0;
    this.tokens.forEach((token, index) => {
      if (token.start > cursor) {
        this.textPane.appendChild(
          document.createTextNode(text.slice(cursor, token.start)),
        );
      }
      const span = document.createElement("span");
      span.className = "token";
      span.dataset.index = String(index);
      span.textContent = text.slice(token.start, token.end);
      if (this.inSelection(index)) {
        span.classList.add("selected");
      }
      span.addEventListener("click", () => this.onTokenClick(index));
      this.textPane.appendChild(span);
      cursor = token.end;
    });
    if (cursor < text.length) {
      this.textPane.appendChild(document.createTextNode(text.slice(cursor)));
    }
  }

  private inSelection(index: number): boolean {
    if (this.anchor === null || this.focus === null) {
      return false;
    }
    const lo = this.anchor < this.focus ? this.anchor : this.focus;
    const hi = this.anchor < this.focus ? this.focus : this.anchor;
    return index >= lo && index <= hi;
  }

  private onTokenClick(index: number): void {
    if (this.anchor === null) {
      this.anchor = index;
      this.focus = index;
    } else if (index === this.anchor && index === this.focus) {
      this.anchor = null;
      this.focus = null;
    } else {
      this.focus = index;
    }
    this.renderTokens();
  }

  /** Text of the currently selected token run. */
  selectedTerm(): string | null {
    if (this.doc === null || this.anchor === null || this.focus === null) {
      return null;
    }
    const lo = this.anchor < this.focus ? this.anchor : this.focus;
    const hi = this.anchor < this.focus ? this.focus : this.anchor;
    return this.doc.text.slice(this.tokens[lo].start, this.tokens[hi].end);
  }

  private applySmell(column: string): void {
    const term = this.selectedTerm();
    if (term === null) {
      this.showBanner("select a word or run of words first");
      return;
    }
    if (!(column in this.labels)) {
      this.labels[column] = [];
    }
    this.labels[column].push(term);
    this.anchor = null;
    this.focus = null;
    this.dirty = true;
    this.hideBanner();
    this.renderTokens();
    this.renderChips();
    this.renderState();
  }

  private renderChips(): void {
    this.chipPane.textContent = "";
    for (const smell of SMELLS) {
      const terms = this.labels[smell.column] ?? [];
      terms.forEach((term, index) => {
        const chip = document.createElement("span");
        chip.className = "chip";
        chip.dataset.column = smell.column;
        chip.dataset.term = term;
        chip.style.borderColor = smell.color;
        const swatch = document.createElement("span");
        swatch.className = "legend-swatch";
        swatch.style.backgroundColor = smell.color;
        chip.appendChild(swatch);
        chip.appendChild(document.createTextNode(`${smell.code} ${term}`));
        const remove = document.createElement("button");
        remove.className = "chip-remove";
        remove.textContent = "×";
        remove.addEventListener("click", () => this.removeLabel(smell.column, index));
        chip.appendChild(remove);
        this.chipPane.appendChild(chip);
      });
    }
  }

  private removeLabel(column: string, index: number): void {
    const terms = this.labels[column];
    if (!terms) {
      return;
    }
    terms.splice(index, 1);
    if (terms.length === 0) {
      delete this.labels[column];
    }
    this.dirty = true;
    this.renderChips();
    this.renderState();
  }

  private renderState(): void {
    this.saveState.textContent = this.dirty ? "unsaved changes" : "saved";
    this.saveState.classList.toggle("dirty", this.dirty);
    if (this.doc) {
      this.reviewState.textContent = this.doc.review_flag;
      this.reviewButton.disabled = this.doc.review_flag === "reviewed";
    } else {
      this.reviewState.textContent = "";
      this.reviewButton.disabled = true;
    }
  }

  /** PUT the label set, unless the document moved on the server. */
  async save(): Promise<void> {
    if (!this.doc) {
      return;
    }
    let current: RequirementDoc;
    try {
      current = await this.api.getRequirement(this.doc.id);
    } catch (err) {
      this.showBanner(err instanceof Error ? err.message : String(err));
      return;
    }
    if (current.audit.length !== this.auditLength) {
      this.conflict.classList.remove("hidden");
      return;
    }
    try {
      this.applyDoc(await this.api.setLabels(this.doc.id, this.labels));
      this.hideBanner();
    } catch (err) {
      if (err instanceof ApiError) {
        this.markBadTerm(err.detail);
        this.showBanner(err.detail);
      } else {
        this.showBanner(err instanceof Error ? err.message : String(err));
      }
    }
  }

  private markBadTerm(detail: string): void {
    const match = detail.match(/term '([^']+)'/);
    if (!match) {
      return;
    }
    for (const chip of Array.from(this.chipPane.querySelectorAll(".chip"))) {
      if ((chip as HTMLElement).dataset.term === match[1]) {
        chip.classList.add("chip-error");
      }
    }
  }

  async markReviewed(): Promise<void> {
    if (!this.doc) {
      return;
    }
    try {
      this.applyDoc(await this.api.review(this.doc.id));
      this.hideBanner();
    } catch (err) {
      this.showBanner(err instanceof Error ? err.message : String(err));
    }
  }

  private showBanner(message: string): void {
    this.banner.textContent = message;
    this.banner.classList.remove("hidden");
  }

  private hideBanner(): void {
    this.banner.textContent = "";
    this.banner.classList.add("hidden");
  }

  /** `true` when a smell chip was added or removed since the last save. */
  isDirty(): boolean {
    return this.dirty;
  }

  /** Exposed for the smell palette and tests. */
  pickSmell(column: string): void {
    smellInfo(column);
    this.applySmell(column);
  }
}
