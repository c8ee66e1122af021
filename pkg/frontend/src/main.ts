/** Browser entry point: load a diagram, press vertices by clicking, undo,
 * auto-reduce with a short animation, and compare against a second circling. */

import { ApiClient } from "./api.js";
import { Session } from "./controller.js";
import { renderDiagramSVG } from "./render.js";
import type { SessionState } from "./state.js";

const DEFAULT_BASE = "http://127.0.0.1:8080";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing element #${id}`);
  }
  return found as T;
}

function parseCircling(text: string): number[] {
  return text
    .split(",")
    .map((part) => part.trim())
    .filter((part) => part.length > 0)
    .map((part) => {
      const value = Number(part);
      if (!Number.isInteger(value)) {
        throw new Error(`bad vertex id ${part}`);
      }
      return value;
    })
    .sort((a, b) => a - b);
}

function setup(): void {
  const baseInput = el<HTMLInputElement>("base-url");
  baseInput.value = DEFAULT_BASE;
  let session = new Session(new ApiClient(baseInput.value));

  const familyInput = el<HTMLSelectElement>("family");
  const mInput = el<HTMLInputElement>("param-m");
  const nInput = el<HTMLInputElement>("param-n");
  const alphaInput = el<HTMLInputElement>("param-alpha");
  const circlingInput = el<HTMLInputElement>("circling");
  const compareInput = el<HTMLInputElement>("compare-circling");
  const drawing = el<HTMLDivElement>("drawing");
  const badge = el<HTMLSpanElement>("admissible-badge");
  const message = el<HTMLDivElement>("message");
  const historyInfo = el<HTMLSpanElement>("history-info");
  const verdictPanel = el<HTMLDivElement>("verdict");
  const reduceButton = el<HTMLButtonElement>("auto-reduce");

  function redraw(state: SessionState): void {
    drawing.innerHTML = renderDiagramSVG(
      state.diagram,
      state.current.circling,
      state.current.pressable,
    );
    badge.textContent = state.current.admissible ? "admissible" : "not admissible";
    badge.className = state.current.admissible ? "badge ok" : "badge bad";
    reduceButton.disabled = !state.current.admissible;
    historyInfo.textContent = `${state.history.length} presses`;
    message.textContent = state.error ?? state.hint ?? "";
    message.className = state.error ? "error" : "hint";
    if (state.verdict) {
      const v = state.verdict;
      if (v.equivalent) {
        const perm = v.symmetry ? v.symmetry.perm.join(",") : "";
        const steps = v.steps && v.steps.length > 0 ? v.steps.join(",") : "none";
        verdictPanel.textContent =
          `isomorphic: symmetry (${perm}), presses: ${steps}`;
        verdictPanel.className = "verdict ok";
      } else {
        verdictPanel.textContent = "not isomorphic";
        verdictPanel.className = "verdict bad";
      }
    } else if (state.compare) {
      verdictPanel.textContent = `comparing against [${state.compare.join(",")}]...`;
      verdictPanel.className = "verdict";
    } else {
      verdictPanel.textContent = "";
    }
  }

  function refParams(): Record<string, number | string> {
    const family = familyInput.value;
    if (family === "C") {
      return { n: Number(nInput.value) };
    }
    if (family === "D21A") {
      return alphaInput.value ? { alpha: alphaInput.value } : {};
    }
    if (family === "F4" || family === "G3") {
      return {};
    }
    return { m: Number(mInput.value), n: Number(nInput.value) };
  }

  el<HTMLButtonElement>("load").addEventListener("click", () => {
    session = new Session(new ApiClient(baseInput.value));
    session.onChange(redraw);
    session
      .load({ family: familyInput.value, params: refParams() }, parseCircling(circlingInput.value))
      .catch(() => undefined);
  });

  drawing.addEventListener("click", (event) => {
    const target = (event.target as HTMLElement).closest("[data-vertex]");
    if (target && session.loaded) {
      void session.press(Number(target.getAttribute("data-vertex")));
    }
  });

  el<HTMLButtonElement>("undo").addEventListener("click", () => {
    if (session.loaded) {
      session.undo();
    }
  });

  reduceButton.addEventListener("click", () => {
    if (session.loaded) {
      void session.autoReduce(
        () => new Promise<void>((resolve) => setTimeout(resolve, 400)),
      );
    }
  });

  el<HTMLButtonElement>("compare").addEventListener("click", () => {
    if (session.loaded) {
      void session.compare(parseCircling(compareInput.value));
    }
  });
}

setup();
