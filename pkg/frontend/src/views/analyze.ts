/**
 * Live analysis view: a plain editor on the left, a highlighted mirror
 * plus score gauges on the right.
 *
 * Input is debounced, responses are gated by sequence number, and all
 * numbers shown come straight from the server response.
 */

import { Analysis, ApiClient, ProjectProfile } from "../api.js";
import { renderHighlights } from "../highlight.js";
import {
  CRITICALITY_LEVELS,
  DOMAIN_CODES,
  REQUIREMENT_TYPES,
  TEMPLATES,
} from "../profiles.js";
import { debounce, Debounced, SequenceGate } from "../sequence.js";
import { SMELLS } from "../theme.js";

export const DEFAULT_PROFILE: ProjectProfile = {
  domains: ["EC", "CS"],
  criticality: "business_critical",
  requirement_type: "functional",
  template: "single_sentence",
};

function option(value: string, selected: boolean): HTMLOptionElement {
  const el = document.createElement("option");
  el.value = value;
  el.textContent = value;
  el.selected = selected;
  return el;
}

export class AnalyzeView {
  readonly root: HTMLElement;
  /** resolves when the most recently started request has settled */
  lastRequest: Promise<void> = Promise.resolve();

  private api: ApiClient;
  private gate = new SequenceGate();
  private editor: HTMLTextAreaElement;
  private mirror: HTMLElement;
  private banner: HTMLElement;
  private sentenceCount: HTMLElement;
  private wordCount: HTMLElement;
  private domainSelect: HTMLSelectElement;
  private criticalitySelect: HTMLSelectElement;
  private typeSelect: HTMLSelectElement;
  private templateSelect: HTMLSelectElement;
  private scheduleAnalyze: Debounced<[string]>;

  constructor(root: HTMLElement, api: ApiClient, debounceMs = 400) {
    this.root = root;
    this.api = api;
    this.buildDom();
    this.editor = root.querySelector(".editor") as HTMLTextAreaElement;
    this.mirror = root.querySelector(".mirror") as HTMLElement;
    this.banner = root.querySelector(".banner") as HTMLElement;
    this.sentenceCount = root.querySelector(".sentence-count") as HTMLElement;
    this.wordCount = root.querySelector(".word-count") as HTMLElement;
    this.domainSelect = root.querySelector(".profile-domains") as HTMLSelectElement;
    this.criticalitySelect = root.querySelector(".profile-criticality") as HTMLSelectElement;
    this.typeSelect = root.querySelector(".profile-type") as HTMLSelectElement;
    this.templateSelect = root.querySelector(".profile-template") as HTMLSelectElement;

    this.scheduleAnalyze = debounce((text: string) => {
      this.lastRequest = this.analyzeNow(text);
    }, debounceMs);

    this.editor.addEventListener("input", () => this.onInput());
    for (const select of [
      this.domainSelect,
      this.criticalitySelect,
      this.typeSelect,
      this.templateSelect,
    ]) {
      select.addEventListener("change", () => this.onInput());
    }
  }

  private buildDom(): void {
    const gaugeBlock = (label: string, cls: string) => `
      <div class="gauge-row">
        <span class="gauge-label">${label}</span>
        <div class="gauge"><div class="gauge-fill ${cls}-fill"></div></div>
        <span class="gauge-value ${cls}-value" data-value=""></span>
      </div>`;
    const legendItems = SMELLS.map(
      (s) => `
      <li class="legend-item" title="${s.name}: ${s.definition}">
        <span class="legend-swatch" style="background-color: ${s.color}"></span>
        <span>${s.code} ${s.name}</span>
      </li>`,
    ).join("");
    this.root.innerHTML = `
      <div class="banner hidden" role="alert"></div>
      <div class="analyze-grid">
        <div class="pane">
          <h3>Requirement</h3>
          <textarea class="editor" rows="8"
            placeholder="Type a requirement..."></textarea>
          <div class="profile-controls">
            <label>Domains
              <select class="profile-domains" multiple size="4"></select>
            </label>
            <label>Criticality <select class="profile-criticality"></select></label>
            <label>Type <select class="profile-type"></select></label>
            <label>Template <select class="profile-template"></select></label>
          </div>
        </div>
        <div class="pane">
          <h3>Findings</h3>
          <div class="mirror"></div>
          <p class="counts-line">
            <span class="sentence-count"></span> sentence(s),
            <span class="word-count"></span> word(s)
          </p>
          <div class="gauges">
            ${gaugeBlock("Clarity", "clarity")}
            ${gaugeBlock("Testability (softened)", "testability-softened")}
            ${gaugeBlock("Testability (hardened)", "testability-hardened")}
          </div>
          <h4>Smell legend</h4>
          <ul class="legend">${legendItems}</ul>
        </div>
      </div>`;
    const domains = this.root.querySelector(".profile-domains") as HTMLSelectElement;
    for (const code of DOMAIN_CODES) {
      domains.appendChild(option(code, DEFAULT_PROFILE.domains.includes(code)));
    }
    const criticality = this.root.querySelector(".profile-criticality") as HTMLSelectElement;
    for (const level of CRITICALITY_LEVELS) {
      criticality.appendChild(option(level, level === DEFAULT_PROFILE.criticality));
    }
    const type = this.root.querySelector(".profile-type") as HTMLSelectElement;
    for (const level of REQUIREMENT_TYPES) {
      type.appendChild(option(level, level === DEFAULT_PROFILE.requirement_type));
    }
    const template = this.root.querySelector(".profile-template") as HTMLSelectElement;
    for (const level of TEMPLATES) {
      template.appendChild(option(level, level === DEFAULT_PROFILE.template));
    }
  }

  private profile(): ProjectProfile {
    const domains = Array.from(this.domainSelect.selectedOptions).map((o) => o.value);
    return {
      domains: domains.length > 0 ? domains : [...DEFAULT_PROFILE.domains],
      criticality: this.criticalitySelect.value,
      requirement_type: this.typeSelect.value,
      template: this.templateSelect.value,
    };
  }

  private onInput(): void {
    const text = this.editor.value;
    if (!text.trim()) {
      // drop the pending request and any in-flight response, then
      // blank the result pane
      this.scheduleAnalyze.cancel();
      this.gate.invalidate();
      this.clearResults();
      return;
    }
    this.scheduleAnalyze(text);
  }

  private async analyzeNow(text: string): Promise<void> {
    const seq = this.gate.issue();
    try {
      const analysis = await this.api.analyze(text, undefined, this.profile());
      if (!this.gate.accept(seq)) {
        return;
      }
      this.hideBanner();
      this.render(text, analysis);
    } catch (err) {
      if (!this.gate.accept(seq)) {
        return;
      }
      this.showBanner(err instanceof Error ? err.message : String(err));
    }
  }

  private render(text: string, analysis: Analysis): void {
    // offsets refer to the text the server analyzed, which is stripped
    renderHighlights(this.mirror, analysis.text ?? text.trim(), analysis.findings);
    this.sentenceCount.textContent = String(analysis.n_sentences);
    this.wordCount.textContent = String(analysis.n_words);
    this.setGauge("clarity", analysis.clarity);
    this.setGauge("testability-softened", analysis.testability.softened);
    this.setGauge("testability-hardened", analysis.testability.hardened);
  }

  private setGauge(cls: string, value: number): void {
    const fill = this.root.querySelector(`.${cls}-fill`) as HTMLElement;
    const label = this.root.querySelector(`.${cls}-value`) as HTMLElement;
    fill.style.transform = `scaleX(${value})`;
    label.dataset.value = String(value);
    label.textContent = value.toFixed(4);
  }

  private clearGauge(cls: string): void {
    const fill = this.root.querySelector(`.${cls}-fill`) as HTMLElement;
    const label = this.root.querySelector(`.${cls}-value`) as HTMLElement;
    fill.style.transform = "scaleX(0)";
    label.dataset.value = "";
    label.textContent = "";
  }

  private clearResults(): void {
    this.mirror.textContent = "";
    this.sentenceCount.textContent = "";
    this.wordCount.textContent = "";
    this.clearGauge("clarity");
    this.clearGauge("testability-softened");
    this.clearGauge("testability-hardened");
  }

  private showBanner(message: string): void {
    this.banner.textContent = `analysis failed: ${message}`;
    this.banner.classList.remove("hidden");
  }

  private hideBanner(): void {
    this.banner.textContent = "";
    this.banner.classList.add("hidden");
  }
}
