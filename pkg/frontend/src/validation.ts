/** Client-side mirror of the service's judgment rule: disagreement needs a
 * reason and a corrected label, so the UI can never produce a judgment the
 * server would reject with 422. */

import type { JudgmentDraft } from "./types.js";

export function canSubmit(draft: JudgmentDraft): boolean {
  if (draft.agrees === true) {
    return true;
  }
  if (draft.agrees === false) {
    return draft.disagreementReason.trim().length > 0 && draft.correctedLabel !== null;
  }
  return false;
}

export function validationMessage(draft: JudgmentDraft): string | null {
  if (draft.agrees === null) {
    return "Select yes or no to continue.";
  }
  if (draft.agrees === false) {
    if (draft.disagreementReason.trim().length === 0) {
      return "Please explain why you disagree.";
    }
    if (draft.correctedLabel === null) {
      return "Please pick the correct relationship between the two answers.";
    }
  }
  return null;
}
