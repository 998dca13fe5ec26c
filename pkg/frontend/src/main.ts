/** Browser wiring: renders the session, talks to the service, and keeps
 * every displayed number a formatted copy of a service response. */

import {
  ApiClient,
  ApiError,
  OfflineError,
  SupersededError,
  type CheckResponse,
  type EvaluateResponse,
} from "./api.js";
import { weightsChart } from "./charts.js";
import { ElicitationSession, type JudgmentField, type SessionExport } from "./session.js";
import {
  checkView,
  evaluationCsv,
  evaluationView,
  whatIfDelta,
} from "./viewmodel.js";

// 17-point elicitation grid for the slider; the numeric field is free-form.
const GRID: number[] = [];
for (let k = 9; k >= 2; k--) GRID.push(1 / k);
for (let k = 1; k <= 9; k++) GRID.push(k);

function gridIndex(value: number): number {
  let best = 0;
  for (let i = 1; i < GRID.length; i++) {
    if (Math.abs(GRID[i]! - value) < Math.abs(GRID[best]! - value)) best = i;
  }
  return best;
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function download(filename: string, text: string, type: string): void {
  const blob = new Blob([text], { type });
  const url = URL.createObjectURL(blob);
  const link = document.createElement("a");
  link.href = url;
  link.download = filename;
  link.click();
  URL.revokeObjectURL(url);
}

class App {
  private readonly api = new ApiClient("");
  private main = new ElicitationSession();
  private branch: ElicitationSession | null = null;
  private branchInvalid: string | null = null;
  private statusTimer: number | undefined;

  get active(): ElicitationSession {
    return this.branch ?? this.main;
  }

  start(): void {
    this.bindControls();
    void this.probeHealth();
    // a small starter frame so the page is not empty
    for (const name of ["c1", "c2", "c3"]) this.main.addCriterion(name);
    this.renderAll();
  }

  private bindControls(): void {
    el<HTMLFormElement>("add-criterion-form").addEventListener("submit", (ev) => {
      ev.preventDefault();
      const input = el<HTMLInputElement>("new-criterion");
      const result = this.active.addCriterion(input.value);
      if (!result.ok) this.flash(result.message);
      input.value = "";
      this.afterEdit();
    });
    el<HTMLSelectElement>("best-select").addEventListener("change", (ev) => {
      const name = (ev.target as HTMLSelectElement).value;
      if (!name) return;
      const result = this.active.setReference("best", name);
      if (!result.ok) this.flash(result.message);
      this.afterEdit();
    });
    el<HTMLSelectElement>("worst-select").addEventListener("change", (ev) => {
      const name = (ev.target as HTMLSelectElement).value;
      if (!name) return;
      const result = this.active.setReference("worst", name);
      if (!result.ok) this.flash(result.message);
      this.afterEdit();
    });
    el<HTMLButtonElement>("undo-button").addEventListener("click", () => {
      if (this.active.undo()) this.afterEdit();
    });
    el<HTMLButtonElement>("redo-button").addEventListener("click", () => {
      if (this.active.redo()) this.afterEdit();
    });
    el<HTMLButtonElement>("evaluate-button").addEventListener("click", () => {
      void this.evaluate();
    });
    el<HTMLButtonElement>("whatif-button").addEventListener("click", () => {
      this.branch = this.main.fork();
      this.branchInvalid = null;
      this.renderAll();
    });
    el<HTMLButtonElement>("whatif-revert").addEventListener("click", () => {
      this.branch = null;
      this.branchInvalid = null;
      this.renderAll();
    });
    el<HTMLButtonElement>("whatif-keep").addEventListener("click", () => {
      if (this.branch) {
        this.main = this.branch;
        this.branch = null;
        this.branchInvalid = null;
      }
      this.renderAll();
    });
    el<HTMLButtonElement>("export-json").addEventListener("click", () => {
      download(
        "session.json",
        JSON.stringify(this.active.toExport(), null, 2),
        "application/json",
      );
    });
    el<HTMLButtonElement>("export-csv").addEventListener("click", () => {
      const evaluation = this.active.lastEvaluation;
      if (!evaluation) {
        this.flash("evaluate first");
        return;
      }
      download("weights.csv", evaluationCsv(evaluation), "text/csv");
    });
    el<HTMLInputElement>("import-file").addEventListener("change", async (ev) => {
      const input = ev.target as HTMLInputElement;
      const file = input.files?.[0];
      if (!file) return;
      try {
        const data = JSON.parse(await file.text()) as SessionExport;
        this.main = ElicitationSession.fromExport(data);
        this.branch = null;
        this.renderAll();
      } catch {
        this.flash("not a session file");
      }
      input.value = "";
    });
  }

  private afterEdit(): void {
    this.renderAll();
    void this.refreshCheck();
  }

  private async probeHealth(): Promise<void> {
    try {
      const health = await this.api.health();
      el("health").textContent = `service ${health.version}`;
      this.setOffline(false);
    } catch {
      this.setOffline(true);
    }
  }

  private setOffline(offline: boolean): void {
    el("offline-banner").hidden = !offline;
  }

  private flash(message: string): void {
    const node = el("status-line");
    node.textContent = message;
    node.hidden = false;
    window.clearTimeout(this.statusTimer);
    this.statusTimer = window.setTimeout(() => {
      node.hidden = true;
    }, 4000);
  }

  /** Live feedback after every committed edit, latest request wins. */
  private async refreshCheck(): Promise<void> {
    const request = this.active.toRequest();
    if (!request) {
      this.renderCheck(null);
      return;
    }
    try {
      const response = await this.api.check(request);
      this.active.lastCheck = response;
      this.setOffline(false);
      this.renderCheck(response);
      if (this.branch) this.renderWhatIf();
    } catch (err) {
      if (err instanceof SupersededError) return;
      if (err instanceof OfflineError) {
        this.setOffline(true);
        return;
      }
      if (err instanceof ApiError) {
        if (this.branch) {
          this.branchInvalid = `${err.code}: ${err.detail}`;
          this.renderWhatIf();
        } else {
          this.flash(`${err.code}: ${err.detail}`);
        }
        return;
      }
      throw err;
    }
  }

  private async evaluate(): Promise<void> {
    const request = this.active.toRequest();
    if (!request) return;
    try {
      const response = await this.api.evaluate(request);
      this.active.lastEvaluation = response;
      this.setOffline(false);
      this.renderResults(response);
      if (this.branch) this.renderWhatIf();
    } catch (err) {
      if (err instanceof OfflineError) {
        this.setOffline(true);
      } else if (err instanceof ApiError) {
        this.flash(`${err.code}: ${err.detail}`);
      } else {
        throw err;
      }
    }
  }

  private renderAll(): void {
    const state = this.active.state;
    el("branch-banner").hidden = this.branch === null;

    // reference selectors
    for (const [id, selected] of [
      ["best-select", state.best],
      ["worst-select", state.worst],
    ] as const) {
      const select = el<HTMLSelectElement>(id);
      select.innerHTML = "";
      const blank = document.createElement("option");
      blank.value = "";
      blank.textContent = "choose";
      select.appendChild(blank);
      for (const name of state.criteria) {
        const option = document.createElement("option");
        option.value = name;
        option.textContent = name;
        option.selected = name === selected;
        select.appendChild(option);
      }
    }

    this.renderJudgments();
    el<HTMLButtonElement>("undo-button").disabled = !this.active.canUndo();
    el<HTMLButtonElement>("redo-button").disabled = !this.active.canRedo();
    const missing = this.active.missingInputs();
    el<HTMLButtonElement>("evaluate-button").disabled = missing.length > 0;
    el("missing-line").textContent =
      missing.length > 0 ? `still needed: ${missing.join(", ")}` : "";
    this.renderCheck(this.active.lastCheck);
    if (this.active.lastEvaluation) this.renderResults(this.active.lastEvaluation);
    if (this.branch) this.renderWhatIf();
    else el("whatif-panel").hidden = true;
  }

  private renderJudgments(): void {
    const state = this.active.state;
    const highlights = new Set(
      this.active.lastCheck ? checkView(this.active.lastCheck).highlights : [],
    );
    const body = el<HTMLTableSectionElement>("judgment-rows");
    body.innerHTML = "";
    for (const name of state.criteria) {
      const row = document.createElement("tr");
      if (highlights.has(name)) row.classList.add("highlight");
      const label = document.createElement("td");
      label.textContent =
        name +
        (name === state.best ? " (best)" : name === state.worst ? " (worst)" : "");
      const remove = document.createElement("button");
      remove.textContent = "x";
      remove.className = "remove";
      remove.addEventListener("click", () => {
        this.active.removeCriterion(name);
        this.afterEdit();
      });
      label.appendChild(remove);
      row.appendChild(label);
      row.appendChild(this.judgmentCell(name, "best_to_other", state.bestToOther[name]));
      row.appendChild(
        this.judgmentCell(name, "other_to_worst", state.otherToWorst[name]),
      );
      body.appendChild(row);
    }
  }

  private judgmentCell(
    criterion: string,
    field: JudgmentField,
    value: number | undefined,
  ): HTMLTableCellElement {
    const cell = document.createElement("td");
    const slider = document.createElement("input");
    slider.type = "range";
    slider.min = "0";
    slider.max = String(GRID.length - 1);
    slider.step = "1";
    slider.value = value === undefined ? "8" : String(gridIndex(value));
    const number = document.createElement("input");
    number.type = "text";
    number.inputMode = "decimal";
    number.value = value === undefined ? "" : String(value);
    number.placeholder = "1/9 .. 9";
    const message = document.createElement("span");
    message.className = "field-error";

    const commit = (raw: string) => {
      const result = this.active.editJudgment(criterion, field, raw);
      message.textContent = result.ok ? "" : result.message;
      if (result.ok) this.afterEdit();
    };
    slider.addEventListener("change", () => {
      const gridValue = GRID[Number(slider.value)]!;
      number.value = String(gridValue);
      commit(number.value);
    });
    number.addEventListener("change", () => commit(number.value));

    cell.appendChild(slider);
    cell.appendChild(number);
    cell.appendChild(message);
    return cell;
  }

  private renderCheck(response: CheckResponse | null): void {
    const panel = el("live-panel");
    if (!response) {
      panel.classList.add("empty");
      el("gauge").className = "gauge";
      el("gauge-value").textContent = "-";
      el("live-summary").textContent = "enter all judgments for live feedback";
      el("eps-rows").innerHTML = "";
      el("live-warnings").innerHTML = "";
      return;
    }
    panel.classList.remove("empty");
    const view = checkView(response);
    el("gauge").className = `gauge ${view.gauge}`;
    el("gauge-value").textContent = view.cr;
    el("live-summary").textContent = view.consistent
      ? `consistent: eps* ${view.epsStar}, CI ${view.ci}`
      : `eps* ${view.epsStar}, CI ${view.ci}, case ${view.caseTag}` +
        (view.highlights.length
          ? ` - revisit ${view.highlights.join(", ")}`
          : "");
    const rows = el("eps-rows");
    rows.innerHTML = "";
    for (const entry of view.epsRows) {
      const row = document.createElement("tr");
      const name = document.createElement("td");
      name.textContent = entry.label;
      const value = document.createElement("td");
      value.textContent = entry.value;
      row.append(name, value);
      rows.appendChild(row);
    }
    const warnings = el("live-warnings");
    warnings.innerHTML = "";
    for (const warning of view.warnings) {
      const item = document.createElement("li");
      item.textContent = warning;
      warnings.appendChild(item);
    }
    this.renderJudgmentHighlights(view.highlights);
  }

  private renderJudgmentHighlights(highlights: string[]): void {
    const wanted = new Set(highlights);
    const rows = el<HTMLTableSectionElement>("judgment-rows").rows;
    const state = this.active.state;
    for (let index = 0; index < rows.length; index++) {
      const name = state.criteria[index];
      rows[index]!.classList.toggle("highlight", name !== undefined && wanted.has(name));
    }
  }

  private renderResults(response: EvaluateResponse): void {
    const view = evaluationView(response);
    el("results-panel").hidden = false;
    el("results-summary").textContent =
      `eps* ${view.epsStar}, CR ${view.cr} - best weights with optimal ranges`;
    el("chart-holder").innerHTML = weightsChart(view.weights);
    const weightRows = el("weight-rows");
    weightRows.innerHTML = "";
    for (const row of view.weights) {
      const tr = document.createElement("tr");
      for (const text of [row.criterion, row.weight, row.low, row.high, row.eta]) {
        const td = document.createElement("td");
        td.textContent = text;
        tr.appendChild(td);
      }
      weightRows.appendChild(tr);
    }
    const cmpRows = el("comparison-rows");
    cmpRows.innerHTML = "";
    for (const row of view.comparison) {
      const tr = document.createElement("tr");
      if (row.changed) tr.classList.add("changed");
      for (const text of [
        row.criterion,
        row.originalBto,
        row.modifiedBto,
        row.originalOtw,
        row.modifiedOtw,
      ]) {
        const td = document.createElement("td");
        td.textContent = text;
        tr.appendChild(td);
      }
      cmpRows.appendChild(tr);
    }
  }

  private renderWhatIf(): void {
    const panel = el("whatif-panel");
    panel.hidden = false;
    const status = el("whatif-status");
    if (this.branchInvalid) {
      status.textContent = `branch invalid - ${this.branchInvalid}`;
      el("whatif-deltas").innerHTML = "";
      return;
    }
    const mainCheck = this.main.lastCheck;
    const branchCheck = this.branch?.lastCheck;
    if (!mainCheck || !branchCheck) {
      status.textContent = "edit the branch to see deltas";
      return;
    }
    const delta = whatIfDelta(
      mainCheck,
      branchCheck,
      this.main.lastEvaluation,
      this.branch?.lastEvaluation,
    );
    status.textContent =
      `CR ${delta.crMain} -> ${delta.crBranch} (${delta.crDelta})`;
    const rows = el("whatif-deltas");
    rows.innerHTML = "";
    for (const entry of delta.weightDeltas) {
      const tr = document.createElement("tr");
      for (const text of [entry.criterion, entry.main, entry.branch, entry.delta]) {
        const td = document.createElement("td");
        td.textContent = text;
        tr.appendChild(td);
      }
      rows.appendChild(tr);
    }
  }
}

new App().start();
