/** Wire types mirrored from the annotation service. */

export type CorrectnessLabel =
  | "neither_contradictory_nor_similar"
  | "contradictory"
  | "more_comprehensive_appropriate"
  | "less_comprehensive_appropriate";

/** Display order follows the grading prompt's numbered options. */
export const CORRECTED_LABEL_OPTIONS: ReadonlyArray<{
  value: CorrectnessLabel;
  display: string;
  shortcut: string;
}> = [
  {
    value: "neither_contradictory_nor_similar",
    display: "Neither contradictory nor similar",
    shortcut: "1",
  },
  { value: "contradictory", display: "Contradictory", shortcut: "2" },
  {
    value: "more_comprehensive_appropriate",
    display: "More comprehensive and appropriate",
    shortcut: "3",
  },
  {
    value: "less_comprehensive_appropriate",
    display: "Less comprehensive and appropriate",
    shortcut: "4",
  },
];

export interface AnnotationTask {
  done: false;
  task_id: string;
  batch_id: string;
  language: string;
  question: string;
  ground_truth: string;
  llm_answer: string;
  automated_reasoning: string;
  automated_label: string;
}

export interface DoneMarker {
  done: true;
  total: number;
}

export type NextResponse = AnnotationTask | DoneMarker;

export interface JudgmentBody {
  task_id: string;
  annotator_id: string;
  agrees: boolean;
  disagreement_reason?: string;
  corrected_label?: CorrectnessLabel;
}

export interface SubmitResponse {
  id: number;
  supersedes?: number;
}

export interface ProgressResponse {
  batch_id: string;
  total: number;
  judged_by_annotator: Record<string, number>;
}

/** Form state for the judgment being composed; survives failed submits. */
export interface JudgmentDraft {
  agrees: boolean | null;
  disagreementReason: string;
  correctedLabel: CorrectnessLabel | null;
}

export function emptyDraft(): JudgmentDraft {
  return { agrees: null, disagreementReason: "", correctedLabel: null };
}
