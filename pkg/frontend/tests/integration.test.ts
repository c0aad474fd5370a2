// Live-service checks for the textarea path. Start the backend with the
// mock adapter (`voicedraft serve`), then run:
//   DEMO_SERVICE_URL=http://127.0.0.1:8000 npm test
import { describe, expect, it } from "vitest";

import { compose, health } from "../src/api.js";
import { composeRequestOf, initialState, regenerate } from "../src/state.js";

const BASE_URL = process.env.DEMO_SERVICE_URL;
const live = BASE_URL ? describe : describe.skip;

live("against a running service", () => {
  it("health reports ok", async () => {
    const info = await health(BASE_URL!);
    expect(info.status).toBe("ok");
  });

  it("typed groceries transcript composes a note over the FT route with traces", async () => {
    const state = { ...initialState(false), transcript: "pick up groceries at 5 pm tomorrow" };
    const result = await compose(BASE_URL!, composeRequestOf(state));
    expect(result.output).toBe("Pick up groceries at 5 pm tomorrow.");
    expect(result.route.kind).toBe("FT");
    expect(result.intent.content_type).toBe("notes");
    expect(result.traces!.length).toBeGreaterThanOrEqual(3);
    const stages = result.traces!.map((t) => t.stage_name);
    expect(stages.slice(0, 3)).toEqual(["disfluency", "gec", "punctuation"]);
  });

  it("regenerate bumps the seed and varies open-ended mock output", async () => {
    let state = {
      ...initialState(false),
      transcript: "write a witty poem about rain make it funny",
    };
    const first = await compose(BASE_URL!, composeRequestOf(state));
    expect(first.route.kind).toBe("LLM");

    const outputs = new Set([first.output]);
    for (let i = 0; i < 5; i++) {
      state = regenerate(state);
      const next = await compose(BASE_URL!, composeRequestOf(state));
      expect(next.traces!.map((t) => t.stage_name)).toEqual(
        first.traces!.map((t) => t.stage_name),
      );
      outputs.add(next.output);
    }
    expect(state.seed).toBe(5);
    expect(outputs.size).toBeGreaterThan(1);
  });
});
