/** The debugger application: four perspectives (Result Overview, Debug
 * Overview, Reports, Repository) over one session, plus a new-request form.
 * DOM structure is a pure function of the fetched documents and the
 * perspective state; service calls are asynchronous and stale responses are
 * discarded when the perspective changes underneath them. */

import {
  ApiClient,
  ApiError,
  isNoSolution,
  type HypergraphDoc,
  type ReportDoc,
  type RepositoryDoc,
  type ResultDoc,
} from "./api.js";
import { LAYOUTS, type LayoutName } from "./graph.js";
import { renderGraph } from "./render.js";

export type Perspective =
  | "ResultOverview"
  | "DebugOverview"
  | "Reports"
  | "Repository";

export const PERSPECTIVES: Perspective[] = [
  "ResultOverview",
  "DebugOverview",
  "Reports",
  "Repository",
];

export interface PerspectiveState {
  active: Perspective;
  sessionId: string | null;
  requestOrdinal: number | null;
  stepIndex: number;
  showUnproductive: boolean;
  layout: LayoutName;
}

interface FetchedDocuments {
  result?: ResultDoc;
  stepGraph?: HypergraphDoc;
  stepCount?: number;
  reports?: ReportDoc;
  repository?: RepositoryDoc;
  terms?: string[];
  error?: string;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export class App {
  state: PerspectiveState = {
    active: "ResultOverview",
    sessionId: null,
    requestOrdinal: null,
    stepIndex: 0,
    showUnproductive: true,
    layout: "circle",
  };
  private docs: FetchedDocuments = {};
  private epoch = 0;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
  ) {}

  /** Re-fetch what the active perspective needs, then re-render.  Responses
   * arriving after a later state change are dropped. */
  async refresh(): Promise<void> {
    const epoch = ++this.epoch;
    const { sessionId, requestOrdinal } = this.state;
    const docs: FetchedDocuments = { repository: this.docs.repository };
    if (sessionId !== null) {
      try {
        if (docs.repository === undefined) {
          docs.repository = await this.api.getRepository(sessionId);
        }
        if (requestOrdinal !== null) {
          switch (this.state.active) {
            case "ResultOverview":
              docs.result = await this.api.getResult(
                sessionId,
                requestOrdinal,
                this.state.showUnproductive,
              );
              if (docs.result && !isNoSolution(docs.result)) {
                docs.terms = await this.api.getTerms(sessionId, requestOrdinal);
              }
              break;
            case "DebugOverview":
              docs.stepCount = await this.api.getStepCount(
                sessionId,
                requestOrdinal,
              );
              docs.stepGraph = await this.api.getStepGraph(
                sessionId,
                requestOrdinal,
                Math.min(this.state.stepIndex, docs.stepCount),
                this.state.showUnproductive,
              );
              break;
            case "Reports":
              docs.reports = await this.api.getReports(sessionId, requestOrdinal);
              break;
            case "Repository":
              break;
          }
        }
      } catch (error) {
        docs.error =
          error instanceof ApiError ? error.detail : String(error);
      }
    }
    if (epoch !== this.epoch) return; // perspective changed underneath us
    this.docs = docs;
    this.render();
  }

  async submitRequest(target: string): Promise<void> {
    if (this.state.sessionId === null) return;
    try {
      const ordinal = await this.api.submitRequest(this.state.sessionId, target);
      this.state = {
        ...this.state,
        active: "ResultOverview",
        requestOrdinal: ordinal,
        stepIndex: 0,
      };
      await this.refresh();
    } catch (error) {
      this.docs.error = error instanceof ApiError ? error.detail : String(error);
      this.render();
    }
  }

  setPerspective(perspective: Perspective): Promise<void> {
    this.state = { ...this.state, active: perspective };
    return this.refresh();
  }

  setStep(step: number): Promise<void> {
    this.state = { ...this.state, stepIndex: step };
    return this.refresh();
  }

  toggleUnproductive(): Promise<void> {
    this.state = {
      ...this.state,
      showUnproductive: !this.state.showUnproductive,
    };
    return this.refresh();
  }

  setLayout(layout: LayoutName): Promise<void> {
    this.state = { ...this.state, layout };
    return this.refresh();
  }

  /** Pure render of (docs, state) into the root element. */
  render(): void {
    this.root.replaceChildren(
      this.renderTabs(),
      this.renderRequestForm(),
      ...(this.docs.error ? [el("div", "error-banner", this.docs.error)] : []),
      this.renderActivePanel(),
    );
  }

  private renderTabs(): HTMLElement {
    const bar = el("nav", "perspective-tabs");
    for (const perspective of PERSPECTIVES) {
      const tab = el(
        "button",
        perspective === this.state.active
          ? "perspective-tab active"
          : "perspective-tab",
        perspective.replace(/(?<!^)([A-Z])/g, " $1"),
      );
      tab.dataset.perspective = perspective;
      tab.addEventListener("click", () => void this.setPerspective(perspective));
      bar.appendChild(tab);
    }
    return bar;
  }

  private renderRequestForm(): HTMLElement {
    const form = el("form", "request-form");
    const input = el("input", "request-target");
    input.placeholder = "requested type, e.g. Pos(1, 0)";
    const submit = el("button", "request-submit", "Request");
    submit.type = "submit";
    form.append(input, submit);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submitRequest(input.value);
    });
    return form;
  }

  private renderGraphControls(): HTMLElement {
    const controls = el("div", "graph-controls");
    const toggle = el(
      "button",
      "toggle-unproductive",
      this.state.showUnproductive
        ? "Hide unproductive cycles"
        : "Show unproductive cycles",
    );
    toggle.addEventListener("click", () => void this.toggleUnproductive());
    const layout = el("select", "layout-select");
    for (const name of LAYOUTS) {
      const option = document.createElement("option");
      option.value = name;
      option.textContent = name;
      option.selected = name === this.state.layout;
      layout.appendChild(option);
    }
    layout.addEventListener("change", () =>
      void this.setLayout(layout.value as LayoutName),
    );
    controls.append(toggle, layout);
    return controls;
  }

  private renderActivePanel(): HTMLElement {
    if (this.state.sessionId === null) {
      return el("div", "panel empty", "Load a repository to start a session.");
    }
    switch (this.state.active) {
      case "ResultOverview":
        return this.renderResultOverview();
      case "DebugOverview":
        return this.renderDebugOverview();
      case "Reports":
        return this.renderReports();
      case "Repository":
        return this.renderRepository();
    }
  }

  private renderResultOverview(): HTMLElement {
    const panel = el("div", "panel result-overview");
    const { result, terms } = this.docs;
    if (this.state.requestOrdinal === null || result === undefined) {
      panel.appendChild(
        el("div", "placeholder", "Submit a request to see its solutions."),
      );
      return panel;
    }
    if (isNoSolution(result)) {
      const message = el("div", "no-solution", result.message);
      message.dataset.reason = result.reason;
      panel.appendChild(message);
      return panel;
    }
    panel.appendChild(this.renderGraphControls());
    panel.appendChild(
      renderGraph(result, {
        layout: this.state.layout,
        showUnproductive: this.state.showUnproductive,
      }) as unknown as HTMLElement,
    );
    if (terms && terms.length > 0) {
      const list = el("ol", "term-list");
      for (const term of terms) list.appendChild(el("li", "term", term));
      panel.appendChild(list);
    }
    return panel;
  }

  private renderDebugOverview(): HTMLElement {
    const panel = el("div", "panel debug-overview");
    const { stepGraph, stepCount } = this.docs;
    if (
      this.state.requestOrdinal === null ||
      stepGraph === undefined ||
      stepCount === undefined
    ) {
      panel.appendChild(
        el("div", "placeholder", "Submit a request to step through the search."),
      );
      return panel;
    }
    const step = Math.min(this.state.stepIndex, stepCount);
    const nav = el("div", "step-controls");
    const prev = el("button", "step-prev", "Previous");
    prev.disabled = step === 0;
    prev.addEventListener("click", () => void this.setStep(step - 1));
    const next = el("button", "step-next", "Next");
    next.disabled = step === stepCount;
    next.addEventListener("click", () => void this.setStep(step + 1));
    nav.append(prev, el("span", "step-label", `step ${step} / ${stepCount}`), next);
    panel.appendChild(nav);
    panel.appendChild(this.renderGraphControls());
    panel.appendChild(
      renderGraph(stepGraph, {
        layout: this.state.layout,
        showUnproductive: this.state.showUnproductive,
      }) as unknown as HTMLElement,
    );
    return panel;
  }

  private renderReports(): HTMLElement {
    const panel = el("div", "panel reports");
    const { reports } = this.docs;
    if (this.state.requestOrdinal === null || reports === undefined) {
      panel.appendChild(el("div", "placeholder", "No request selected."));
      return panel;
    }
    if (reports.entries.length === 0) {
      panel.appendChild(el("div", "no-issues", "No uninhabited types found."));
      return panel;
    }
    const byReason = new Map<string, string[]>();
    for (const entry of reports.entries) {
      byReason.set(entry.reason, [
        ...(byReason.get(entry.reason) ?? []),
        entry.type,
      ]);
    }
    for (const [reason, types] of byReason) {
      const group = el("section", "report-group");
      group.appendChild(el("h3", "report-reason", reason));
      const list = el("ul", "report-types");
      for (const type of types) list.appendChild(el("li", "report-type", type));
      group.appendChild(list);
      panel.appendChild(group);
    }
    return panel;
  }

  private renderRepository(): HTMLElement {
    const panel = el("div", "panel repository");
    const { repository } = this.docs;
    if (repository === undefined) {
      panel.appendChild(el("div", "placeholder", "Repository not loaded."));
      return panel;
    }
    const list = el("dl", "combinator-list");
    for (const comb of repository.combinators) {
      const name = el("dt", "combinator-name", comb.name);
      if (comb.source) name.title = comb.source;
      list.appendChild(name);
      list.appendChild(el("dd", "combinator-type", comb.type));
    }
    panel.appendChild(list);
    return panel;
  }
}
