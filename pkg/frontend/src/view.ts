// DOM rendering for the result card: draft text, route badge, intent
// chips, and the ordered stage-trace panel.

import type { ComposeResult } from "./api.js";

export interface ResultElements {
  card: HTMLElement;
  output: HTMLElement;
  routeBadge: HTMLElement;
  intentChips: HTMLElement;
  tracePanel: HTMLElement;
}

function clear(element: HTMLElement): void {
  while (element.firstChild) {
    element.removeChild(element.firstChild);
  }
}

export function renderResult(doc: Document, els: ResultElements, result: ComposeResult): void {
  els.card.hidden = false;
  els.output.textContent = result.output;
  els.card.classList.toggle("blocked", result.blocked);

  els.routeBadge.textContent = result.route.kind;
  els.routeBadge.className = `badge badge-${result.route.kind.toLowerCase()}`;
  els.routeBadge.title = result.route.reason;

  clear(els.intentChips);
  const intent = result.intent;
  for (const label of [intent.input_type, intent.content_type, intent.endedness]) {
    const chip = doc.createElement("span");
    chip.className = "chip";
    chip.textContent = label;
    els.intentChips.appendChild(chip);
  }

  clear(els.tracePanel);
  for (const trace of result.traces ?? []) {
    const row = doc.createElement("tr");
    row.className = "trace-row";
    const stage = doc.createElement("td");
    stage.className = "trace-stage";
    stage.textContent = trace.stage_name;
    const text = doc.createElement("td");
    text.className = "trace-text";
    text.textContent = trace.text_after;
    const ms = doc.createElement("td");
    ms.className = "trace-ms";
    ms.textContent = `${trace.elapsed_ms.toFixed(1)} ms`;
    row.append(stage, text, ms);
    els.tracePanel.appendChild(row);
  }
}

export function renderError(toast: HTMLElement, message: string): void {
  toast.hidden = false;
  toast.textContent = message;
}

export function clearError(toast: HTMLElement): void {
  toast.hidden = true;
  toast.textContent = "";
}
