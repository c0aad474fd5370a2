// Page wiring: capture or type a transcript, post it to the compose
// service, render the draft and its stage trace, regenerate on demand.

import { ApiError, compose } from "./api.js";
import { captureSpeech, isSpeechSupported } from "./speech.js";
import { composeRequestOf, initialState, regenerate, validateTranscript } from "./state.js";
import { clearError, renderError, renderResult } from "./view.js";

const BASE_URL = "";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function main(): void {
  const transcript = byId<HTMLTextAreaElement>("transcript");
  const contentType = byId<HTMLSelectElement>("content-type");
  const submitButton = byId<HTMLButtonElement>("submit");
  const regenerateButton = byId<HTMLButtonElement>("regenerate");
  const micButton = byId<HTMLButtonElement>("mic");
  const fallbackBanner = byId<HTMLElement>("fallback-banner");
  const validation = byId<HTMLElement>("validation");
  const toast = byId<HTMLElement>("toast");
  const els = {
    card: byId<HTMLElement>("result-card"),
    output: byId<HTMLElement>("output"),
    routeBadge: byId<HTMLElement>("route-badge"),
    intentChips: byId<HTMLElement>("intent-chips"),
    tracePanel: byId<HTMLElement>("trace-panel"),
  };

  let state = initialState(isSpeechSupported());
  if (!state.captureSupported) {
    fallbackBanner.hidden = false;
    micButton.disabled = true;
  }

  function setPending(pending: boolean): void {
    state = { ...state, pending };
    submitButton.disabled = pending;
    regenerateButton.disabled = pending || state.lastResult === null;
  }

  async function submit(): Promise<void> {
    if (state.pending) return;
    state = { ...state, transcript: transcript.value, contentType: contentType.value };
    const problem = validateTranscript(state.transcript);
    if (problem) {
      validation.textContent = problem;
      validation.hidden = false;
      return;
    }
    validation.hidden = true;
    clearError(toast);
    setPending(true);
    try {
      const result = await compose(BASE_URL, composeRequestOf(state));
      state = { ...state, lastResult: result };
      renderResult(document, els, result);
    } catch (error) {
      if (error instanceof ApiError && error.isClientError) {
        validation.textContent = error.message;
        validation.hidden = false;
      } else if (error instanceof ApiError) {
        renderError(toast, error.stage ? `${error.stage}: ${error.message}` : error.message);
      } else {
        renderError(toast, String(error));
      }
    } finally {
      setPending(false);
    }
  }

  submitButton.addEventListener("click", () => void submit());
  regenerateButton.addEventListener("click", () => {
    state = regenerate(state);
    void submit();
  });
  micButton.addEventListener("click", async () => {
    micButton.disabled = true;
    try {
      transcript.value = await captureSpeech();
    } catch (error) {
      renderError(toast, `microphone: ${String((error as Error).message ?? error)}`);
    } finally {
      micButton.disabled = !state.captureSupported;
    }
  });
}

main();
