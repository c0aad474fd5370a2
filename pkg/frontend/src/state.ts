// Demo state: transcript, content-type override, seed counter, and the
// last result. The UI never mutates server state; regenerate just bumps
// the seed and re-posts.

import type { ComposeResult } from "./api.js";

export const CONTENT_TYPES = ["auto", "email", "message", "notes"] as const;

export interface DemoState {
  transcript: string;
  contentType: string;
  seed: number;
  pending: boolean;
  lastResult: ComposeResult | null;
  captureSupported: boolean;
}

export function initialState(captureSupported: boolean): DemoState {
  return {
    transcript: "",
    contentType: "auto",
    seed: 0,
    pending: false,
    lastResult: null,
    captureSupported,
  };
}

export function validateTranscript(transcript: string): string | null {
  if (!transcript.trim()) {
    return "Say or type something first.";
  }
  return null;
}

export function regenerate(state: DemoState): DemoState {
  return { ...state, seed: state.seed + 1 };
}

export function composeRequestOf(state: DemoState) {
  return {
    transcript: state.transcript,
    content_type: state.contentType === "auto" ? undefined : state.contentType,
    trace: true,
    seed: state.seed,
  };
}
