/** Session state as a pure fold over server responses.
 *
 * The UI never computes a circling itself: every circling in the state was
 * delivered by the server (the load snapshot or a /press response), and undo
 * restores a previously delivered snapshot.  `replay` refolds an event log
 * and must reproduce the state exactly.
 */

import type {
  Circling,
  Diagram,
  DiagramRef,
  EquivalentResponse,
  PressResponse,
} from "./types.js";

export interface Snapshot {
  circling: Circling;
  admissible: boolean;
  pressable: number[];
}

export interface HistoryEntry extends Snapshot {
  /** vertex pressed to leave this snapshot */
  vertex: number;
}

export interface SessionState {
  ref: DiagramRef;
  diagram: Diagram;
  initial: Snapshot;
  current: Snapshot;
  history: HistoryEntry[];
  compare: Circling | null;
  verdict: EquivalentResponse | null;
  error: string | null;
  hint: string | null;
}

export type SessionEvent =
  | {
      kind: "loaded";
      ref: DiagramRef;
      diagram: Diagram;
      circling: Circling;
      admissible: boolean;
      pressable: number[];
    }
  | { kind: "pressed"; vertex: number; response: PressResponse }
  | { kind: "undone" }
  | { kind: "compare-set"; circling: Circling }
  | { kind: "verdict"; response: EquivalentResponse }
  | { kind: "error"; message: string }
  | { kind: "hint"; message: string };

function snapshotOf(response: PressResponse): Snapshot {
  return {
    circling: [...response.circling.circled],
    admissible: response.admissible,
    pressable: [...response.pressable],
  };
}

export function applyEvent(state: SessionState | null, event: SessionEvent): SessionState {
  if (event.kind === "loaded") {
    const snap: Snapshot = {
      circling: [...event.circling],
      admissible: event.admissible,
      pressable: [...event.pressable],
    };
    return {
      ref: event.ref,
      diagram: event.diagram,
      initial: snap,
      current: snap,
      history: [],
      compare: null,
      verdict: null,
      error: null,
      hint: null,
    };
  }
  if (state === null) {
    throw new Error(`event ${event.kind} before load`);
  }
  switch (event.kind) {
    case "pressed":
      return {
        ...state,
        history: [...state.history, { ...state.current, vertex: event.vertex }],
        current: snapshotOf(event.response),
        error: null,
        hint: null,
      };
    case "undone": {
      if (state.history.length === 0) {
        return { ...state, hint: "nothing to undo" };
      }
      const history = [...state.history];
      const last = history.pop()!;
      return {
        ...state,
        history,
        current: {
          circling: last.circling,
          admissible: last.admissible,
          pressable: last.pressable,
        },
        error: null,
        hint: null,
      };
    }
    case "compare-set":
      return { ...state, compare: [...event.circling], verdict: null };
    case "verdict":
      return { ...state, verdict: event.response, error: null };
    case "error":
      return { ...state, error: event.message };
    case "hint":
      return { ...state, hint: event.message };
  }
}

/** Refold an event log from scratch. */
export function replay(events: SessionEvent[]): SessionState {
  let state: SessionState | null = null;
  for (const event of events) {
    state = applyEvent(state, event);
  }
  if (state === null) {
    throw new Error("empty event log");
  }
  return state;
}

export function undoDepth(state: SessionState): number {
  return state.history.length;
}
