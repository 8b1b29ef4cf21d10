/** Annotation session controller: fetch next -> render -> validate ->
 * submit -> advance. The DOM layer renders whatever this emits; tests drive
 * it directly. Advancing happens only after the server acknowledged the
 * judgment (2xx), network failures keep the draft and raise a retry banner,
 * and reloading resumes at the server-side cursor. */

import { ApiError, ServiceClient } from "./api.js";
import type {
  AnnotationTask,
  CorrectnessLabel,
  JudgmentBody,
  JudgmentDraft,
} from "./types.js";
import { emptyDraft } from "./types.js";
import { canSubmit, validationMessage } from "./validation.js";

export type SessionPhase = "instructions" | "loading" | "task" | "done" | "fatal";

export interface SessionState {
  phase: SessionPhase;
  task: AnnotationTask | null;
  draft: JudgmentDraft;
  judged: number;
  total: number;
  /** retry banner text; null when the last request succeeded */
  networkError: string | null;
  fatalMessage: string | null;
}

export class AnnotationSession {
  private state: SessionState = {
    phase: "instructions",
    task: null,
    draft: emptyDraft(),
    judged: 0,
    total: 0,
    networkError: null,
    fatalMessage: null,
  };

  private listeners: Array<(state: SessionState) => void> = [];

  constructor(
    private readonly client: ServiceClient,
    private readonly annotatorId: string,
  ) {}

  get current(): SessionState {
    return { ...this.state, draft: { ...this.state.draft } };
  }

  onChange(listener: (state: SessionState) => void): void {
    this.listeners.push(listener);
  }

  private update(patch: Partial<SessionState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      listener(this.current);
    }
  }

  /** Leave the instructions page and sync with the server cursor. */
  async start(): Promise<void> {
    this.update({ phase: "loading", networkError: null });
    await this.syncAndAdvance();
  }

  private async syncAndAdvance(): Promise<void> {
    try {
      const progress = await this.client.progress();
      const judged = progress.judged_by_annotator[this.annotatorId] ?? 0;
      const next = await this.client.nextTask();
      if (next.done) {
        this.update({
          phase: "done",
          task: null,
          judged,
          total: progress.total,
          networkError: null,
        });
      } else {
        this.update({
          phase: "task",
          task: next,
          judged,
          total: progress.total,
          networkError: null,
          // a fresh task always starts from an empty form
          draft: emptyDraft(),
        });
      }
    } catch (error) {
      this.handleError(error, "Could not load the next task.");
    }
  }

  private handleError(error: unknown, context: string): void {
    if (error instanceof ApiError && (error.status === 401 || error.status === 404)) {
      this.update({ phase: "fatal", fatalMessage: `${context} (${error.message})` });
      return;
    }
    const message = error instanceof Error ? error.message : String(error);
    // recoverable: keep phase and draft, surface the retry banner
    this.update({ networkError: `${context} (${message})` });
  }

  setAgrees(value: boolean): void {
    this.update({ draft: { ...this.state.draft, agrees: value } });
  }

  setReason(text: string): void {
    this.update({ draft: { ...this.state.draft, disagreementReason: text } });
  }

  setCorrectedLabel(label: CorrectnessLabel): void {
    this.update({ draft: { ...this.state.draft, correctedLabel: label } });
  }

  canSubmit(): boolean {
    return this.state.phase === "task" && canSubmit(this.state.draft);
  }

  validationMessage(): string | null {
    return validationMessage(this.state.draft);
  }

  /** POST the judgment; advance only on 2xx. The draft survives failures. */
  async submit(): Promise<void> {
    const { task, draft } = this.state;
    if (!task || !canSubmit(draft)) {
      return;
    }
    const body: JudgmentBody = {
      task_id: task.task_id,
      annotator_id: this.annotatorId,
      agrees: draft.agrees === true,
    };
    if (draft.agrees === false) {
      body.disagreement_reason = draft.disagreementReason.trim();
      body.corrected_label = draft.correctedLabel ?? undefined;
    }
    try {
      await this.client.submitJudgment(body);
    } catch (error) {
      this.handleError(error, "Could not save your judgment.");
      return;
    }
    await this.syncAndAdvance();
  }

  /** Re-run whatever failed last; drafts are untouched. */
  async retry(): Promise<void> {
    this.update({ networkError: null });
    if (this.state.phase === "task" && this.state.draft.agrees !== null) {
      await this.submit();
    } else {
      await this.syncAndAdvance();
    }
  }

  /** Keyboard shortcuts: y / n toggle agreement, 1-4 pick the label. */
  handleKey(key: string): void {
    if (this.state.phase !== "task") {
      return;
    }
    if (key === "y" || key === "Y") {
      this.setAgrees(true);
    } else if (key === "n" || key === "N") {
      this.setAgrees(false);
    } else if (this.state.draft.agrees === false && ["1", "2", "3", "4"].includes(key)) {
      const index = Number(key) - 1;
      const labels: CorrectnessLabel[] = [
        "neither_contradictory_nor_similar",
        "contradictory",
        "more_comprehensive_appropriate",
        "less_comprehensive_appropriate",
      ];
      const label = labels[index];
      if (label) {
        this.setCorrectedLabel(label);
      }
    }
  }
}
