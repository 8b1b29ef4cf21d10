/** DOM rendering and event wiring over the session controller. Everything
 * here is deliberately thin; behavior lives in session.ts. */

import type { AnnotationSession, SessionState } from "./session.js";
import { CORRECTED_LABEL_OPTIONS } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

/** Text block carrying its language tag so Hindi/Chinese render correctly. */
function textBlock(doc: Document, heading: string, body: string, lang: string) {
  const wrap = el(doc, "section", { class: "block" });
  wrap.appendChild(el(doc, "h3", {}, heading));
  wrap.appendChild(el(doc, "p", { lang, dir: "auto", class: "content" }, body));
  return wrap;
}

export function render(container: HTMLElement, session: AnnotationSession): void {
  const doc = container.ownerDocument;
  const state = session.current;
  container.textContent = "";

  if (state.networkError) {
    const banner = el(doc, "div", { class: "banner", role: "alert" });
    banner.appendChild(el(doc, "span", {}, state.networkError));
    const retry = el(doc, "button", { id: "retry" }, "Retry");
    retry.addEventListener("click", () => void session.retry());
    banner.appendChild(retry);
    container.appendChild(banner);
  }

  switch (state.phase) {
    case "instructions":
      renderInstructions(doc, container, session);
      return;
    case "loading":
      container.appendChild(el(doc, "p", { class: "status" }, "Loading…"));
      return;
    case "task":
      renderTask(doc, container, session, state);
      return;
    case "done":
      container.appendChild(
        el(doc, "h2", { id: "done" }, "All tasks completed. Thank you!"),
      );
      container.appendChild(
        el(doc, "p", {}, `You judged ${state.judged} of ${state.total} tasks.`),
      );
      return;
    case "fatal":
      container.appendChild(
        el(doc, "p", { class: "error" }, state.fatalMessage ?? "Unrecoverable error."),
      );
      return;
  }
}

function renderInstructions(
  doc: Document,
  container: HTMLElement,
  session: AnnotationSession,
): void {
  container.appendChild(el(doc, "h2", {}, "Annotation instructions"));
  const list = el(doc, "ol");
  for (const line of [
    "Each task shows a question, an expert answer (Answer 1), a model answer (Answer 2), and the automated reasoning with its label.",
    "Answer yes if you agree with the reasoning and the label.",
    "If you answer no, explain why and pick the correct relationship between the two answers.",
    "Keyboard shortcuts: y = yes, n = no, 1-4 = corrected label.",
  ]) {
    list.appendChild(el(doc, "li", {}, line));
  }
  container.appendChild(list);
  const start = el(doc, "button", { id: "start" }, "Start annotating");
  start.addEventListener("click", () => void session.start());
  container.appendChild(start);
}

function renderTask(
  doc: Document,
  container: HTMLElement,
  session: AnnotationSession,
  state: SessionState,
): void {
  const task = state.task;
  if (!task) {
    return;
  }
  container.appendChild(
    el(doc, "div", { class: "progress", id: "progress" },
       `${state.judged} / ${state.total} judged`),
  );

  container.appendChild(textBlock(doc, "Question", task.question, task.language));
  container.appendChild(
    textBlock(doc, "Answer 1 (expert)", task.ground_truth, task.language),
  );
  container.appendChild(
    textBlock(doc, "Answer 2 (model)", task.llm_answer, task.language),
  );
  const reasoning = textBlock(
    doc, "Automated reasoning", task.automated_reasoning, task.language,
  );
  const labelText = CORRECTED_LABEL_OPTIONS.find(
    (option) => option.value === task.automated_label,
  )?.display ?? task.automated_label;
  reasoning.appendChild(el(doc, "p", { class: "label" }, `Automated label: ${labelText}`));
  container.appendChild(reasoning);

  const form = el(doc, "form", { id: "judgment" });
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void session.submit();
  });

  const agreeRow = el(doc, "div", { class: "agree-row" });
  agreeRow.appendChild(
    el(doc, "span", {}, "Do you agree with the reasoning and the label?"),
  );
  for (const [value, caption, id] of [
    [true, "Yes (y)", "agree-yes"],
    [false, "No (n)", "agree-no"],
  ] as const) {
    const button = el(doc, "button", { type: "button", id });
    button.textContent = caption;
    if (state.draft.agrees === value) {
      button.setAttribute("class", "selected");
    }
    button.addEventListener("click", () => {
      session.setAgrees(value);
      render(container, session);
    });
    agreeRow.appendChild(button);
  }
  form.appendChild(agreeRow);

  if (state.draft.agrees === false) {
    const reason = el(doc, "textarea", {
      id: "reason",
      placeholder: "Why do you disagree?",
    });
    reason.value = state.draft.disagreementReason;
    reason.addEventListener("input", () => {
      session.setReason(reason.value);
      syncControls(doc, session);
    });
    form.appendChild(reason);

    const select = el(doc, "select", { id: "corrected-label" });
    select.appendChild(el(doc, "option", { value: "" }, "Correct relationship…"));
    for (const option of CORRECTED_LABEL_OPTIONS) {
      const node = el(doc, "option", { value: option.value },
                      `${option.shortcut}) ${option.display}`);
      select.appendChild(node);
    }
    select.value = state.draft.correctedLabel ?? "";
    select.addEventListener("change", () => {
      if (select.value) {
        session.setCorrectedLabel(select.value as never);
      }
      syncControls(doc, session);
    });
    form.appendChild(select);
  }

  const message = el(doc, "p", { class: "validation", id: "validation" });
  message.textContent = session.validationMessage() ?? "";
  form.appendChild(message);

  const submit = el(doc, "button", { type: "submit", id: "submit" }, "Submit");
  if (!session.canSubmit()) {
    submit.setAttribute("disabled", "disabled");
  }
  form.appendChild(submit);
  container.appendChild(form);
}

/** Refresh enabled state and inline message without a full re-render, so
 * typing in the textarea does not lose focus. */
function syncControls(doc: Document, session: AnnotationSession): void {
  const submit = doc.getElementById("submit");
  if (submit) {
    if (session.canSubmit()) {
      submit.removeAttribute("disabled");
    } else {
      submit.setAttribute("disabled", "disabled");
    }
  }
  const message = doc.getElementById("validation");
  if (message) {
    message.textContent = session.validationMessage() ?? "";
  }
}

export function mount(container: HTMLElement, session: AnnotationSession): void {
  session.onChange(() => render(container, session));
  container.ownerDocument.addEventListener("keydown", (event) => {
    const target = event.target as HTMLElement | null;
    if (target && (target.tagName === "TEXTAREA" || target.tagName === "INPUT")) {
      return; // do not hijack typing
    }
    session.handleKey(event.key);
    render(container, session);
  });
  render(container, session);
}
