/** Event-sourced elicitation session.
 *
 * Every accepted edit is an event; the visible state is a replay of the
 * event log up to the undo cursor, which makes "history replay reproduces
 * the current state" true by construction and gives undo/redo and what-if
 * forking for free.
 */

import type { CheckResponse, EvaluateResponse, EvaluationRequest } from "./api.js";
import { parseJudgment } from "./format.js";

export type JudgmentField = "best_to_other" | "other_to_worst";

export type SessionEvent =
  | { kind: "add_criterion"; name: string }
  | { kind: "remove_criterion"; name: string }
  | { kind: "set_reference"; role: "best" | "worst"; name: string }
  | { kind: "set_judgment"; field: JudgmentField; criterion: string; value: number };

export interface SessionState {
  criteria: string[];
  best: string | null;
  worst: string | null;
  bestToOther: Record<string, number>;
  otherToWorst: Record<string, number>;
}

export type EditResult = { ok: true } | { ok: false; message: string };

const INITIAL: SessionState = {
  criteria: [],
  best: null,
  worst: null,
  bestToOther: {},
  otherToWorst: {},
};

function cloneState(state: SessionState): SessionState {
  return {
    criteria: [...state.criteria],
    best: state.best,
    worst: state.worst,
    bestToOther: { ...state.bestToOther },
    otherToWorst: { ...state.otherToWorst },
  };
}

/** Pure transition; assumes the event was validated against this state. */
export function applyEvent(state: SessionState, event: SessionEvent): SessionState {
  const next = cloneState(state);
  switch (event.kind) {
    case "add_criterion":
      next.criteria.push(event.name);
      break;
    case "remove_criterion":
      next.criteria = next.criteria.filter((c) => c !== event.name);
      if (next.best === event.name) next.best = null;
      if (next.worst === event.name) next.worst = null;
      delete next.bestToOther[event.name];
      delete next.otherToWorst[event.name];
      break;
    case "set_reference":
      if (event.role === "best") {
        next.best = event.name;
        next.bestToOther[event.name] = 1;
      } else {
        next.worst = event.name;
        next.otherToWorst[event.name] = 1;
      }
      break;
    case "set_judgment":
      if (event.field === "best_to_other") {
        next.bestToOther[event.criterion] = event.value;
        // the cross value is shared: best-to-worst equals worst's entry
        if (event.criterion === next.worst && next.best !== null) {
          next.otherToWorst[next.best] = event.value;
        }
      } else {
        next.otherToWorst[event.criterion] = event.value;
        if (event.criterion === next.best && next.worst !== null) {
          next.bestToOther[next.worst] = event.value;
        }
      }
      break;
  }
  return next;
}

export function replay(events: readonly SessionEvent[]): SessionState {
  let state = INITIAL;
  for (const event of events) state = applyEvent(state, event);
  return state;
}

export interface SessionExport {
  criteria: string[];
  best: string | null;
  worst: string | null;
  best_to_other: Record<string, number>;
  other_to_worst: Record<string, number>;
  ui: {
    events: SessionEvent[];
    cursor: number;
    lastCheck: CheckResponse | null;
    lastEvaluation: EvaluateResponse | null;
  };
}

export class ElicitationSession {
  private events: SessionEvent[] = [];
  private cursor = 0; // events[0..cursor) are live; the rest are redoable
  lastCheck: CheckResponse | null = null;
  lastEvaluation: EvaluateResponse | null = null;

  get state(): SessionState {
    return replay(this.events.slice(0, this.cursor));
  }

  get history(): readonly SessionEvent[] {
    return this.events.slice(0, this.cursor);
  }

  private push(event: SessionEvent): void {
    this.events = this.events.slice(0, this.cursor);
    this.events.push(event);
    this.cursor = this.events.length;
  }

  addCriterion(rawName: string): EditResult {
    const name = rawName.trim();
    if (!name) return { ok: false, message: "criterion name is empty" };
    if (this.state.criteria.includes(name)) {
      return { ok: false, message: `criterion "${name}" already exists` };
    }
    this.push({ kind: "add_criterion", name });
    return { ok: true };
  }

  removeCriterion(name: string): EditResult {
    if (!this.state.criteria.includes(name)) {
      return { ok: false, message: `no criterion "${name}"` };
    }
    this.push({ kind: "remove_criterion", name });
    return { ok: true };
  }

  setReference(role: "best" | "worst", name: string): EditResult {
    const state = this.state;
    if (!state.criteria.includes(name)) {
      return { ok: false, message: `no criterion "${name}"` };
    }
    const other = role === "best" ? state.worst : state.best;
    if (other === name) {
      return {
        ok: false,
        message: "best and worst must be different criteria",
      };
    }
    this.push({ kind: "set_reference", role, name });
    return { ok: true };
  }

  /** Commit one judgment field. The raw text is validated here so invalid
   * input never enters the event log. */
  editJudgment(criterion: string, field: JudgmentField, raw: string): EditResult {
    const state = this.state;
    if (!state.criteria.includes(criterion)) {
      return { ok: false, message: `no criterion "${criterion}"` };
    }
    const value = parseJudgment(raw);
    if (value === null) {
      return { ok: false, message: "enter a positive number" };
    }
    if (field === "best_to_other" && criterion === state.best && value !== 1) {
      return { ok: false, message: "the best criterion compares to itself as 1" };
    }
    if (field === "other_to_worst" && criterion === state.worst && value !== 1) {
      return { ok: false, message: "the worst criterion compares to itself as 1" };
    }
    this.push({ kind: "set_judgment", field, criterion, value });
    return { ok: true };
  }

  canUndo(): boolean {
    return this.cursor > 0;
  }

  canRedo(): boolean {
    return this.cursor < this.events.length;
  }

  undo(): boolean {
    if (!this.canUndo()) return false;
    this.cursor -= 1;
    return true;
  }

  redo(): boolean {
    if (!this.canRedo()) return false;
    this.cursor += 1;
    return true;
  }

  /** Fork for what-if exploration: same history, independent future. */
  fork(): ElicitationSession {
    const branch = new ElicitationSession();
    branch.events = this.events.slice(0, this.cursor);
    branch.cursor = this.cursor;
    branch.lastCheck = this.lastCheck;
    branch.lastEvaluation = this.lastEvaluation;
    return branch;
  }

  /** Which judgments are still missing before the session can be sent. */
  missingInputs(): string[] {
    const state = this.state;
    const missing: string[] = [];
    if (state.criteria.length < 2) missing.push("at least two criteria");
    if (state.best === null) missing.push("a best criterion");
    if (state.worst === null) missing.push("a worst criterion");
    for (const c of state.criteria) {
      if (state.bestToOther[c] === undefined) missing.push(`best vs ${c}`);
      if (state.otherToWorst[c] === undefined) missing.push(`${c} vs worst`);
    }
    return missing;
  }

  /** The service request for the current judgments, or null if incomplete. */
  toRequest(): EvaluationRequest | null {
    if (this.missingInputs().length > 0) return null;
    const state = this.state;
    return {
      criteria: [...state.criteria],
      best: state.best as string,
      worst: state.worst as string,
      best_to_other: { ...state.bestToOther },
      other_to_worst: { ...state.otherToWorst },
    };
  }

  /** Session file: the request schema plus UI metadata the service ignores. */
  toExport(): SessionExport {
    const state = this.state;
    return {
      criteria: [...state.criteria],
      best: state.best,
      worst: state.worst,
      best_to_other: { ...state.bestToOther },
      other_to_worst: { ...state.otherToWorst },
      ui: {
        events: this.events.slice(0, this.cursor),
        cursor: this.cursor,
        lastCheck: this.lastCheck,
        lastEvaluation: this.lastEvaluation,
      },
    };
  }

  static fromExport(data: SessionExport): ElicitationSession {
    const session = new ElicitationSession();
    session.events = [...data.ui.events];
    session.cursor = data.ui.cursor;
    session.lastCheck = data.ui.lastCheck;
    session.lastEvaluation = data.ui.lastEvaluation;
    return session;
  }
}
