/** Session controller: wires the API client to the state fold.
 *
 * All mutations flow through server responses; API calls are serialized
 * through a single queue (one in flight, presses queue up behind it).  The
 * event log is kept so the state can be re-folded and checked.
 */

import { ApiClient, ApiError } from "./api.js";
import {
  applyEvent,
  replay,
  type SessionEvent,
  type SessionState,
} from "./state.js";
import type { Circling, DiagramRef } from "./types.js";

export type Listener = (state: SessionState) => void;

export class Session {
  private state: SessionState | null = null;
  private queue: Promise<unknown> = Promise.resolve();
  readonly log: SessionEvent[] = [];
  private listeners: Listener[] = [];

  constructor(private readonly api: ApiClient) {}

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  get current(): SessionState {
    if (this.state === null) {
      throw new Error("session not loaded");
    }
    return this.state;
  }

  get loaded(): boolean {
    return this.state !== null;
  }

  private emit(event: SessionEvent): void {
    this.state = applyEvent(this.state, event);
    this.log.push(event);
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  /** Serialize API work: one call in flight, later calls queue. */
  private enqueue<T>(work: () => Promise<T>): Promise<T> {
    const next = this.queue.then(work);
    this.queue = next.catch(() => undefined);
    return next;
  }

  load(ref: DiagramRef, circling: Circling): Promise<void> {
    return this.enqueue(async () => {
      try {
        const diagram = await this.api.getDiagram(ref);
        const admissible = await this.api.probeAdmissible(ref, circling);
        this.emit({
          kind: "loaded",
          ref,
          diagram,
          circling,
          admissible,
          // every circled vertex is even, hence pressable
          pressable: [...circling],
        });
      } catch (err) {
        this.emit({ kind: "error", message: describe(err) });
        throw err;
      }
    });
  }

  /** Press a vertex; no-op with a hint when it is not marked pressable. */
  press(vertex: number): Promise<void> {
    return this.enqueue(async () => {
      const state = this.current;
      if (!state.current.pressable.includes(vertex)) {
        this.emit({ kind: "hint", message: `vertex ${vertex} is not pressable` });
        return;
      }
      try {
        const response = await this.api.press(state.ref, state.current.circling, vertex);
        this.emit({ kind: "pressed", vertex, response });
      } catch (err) {
        this.emit({ kind: "error", message: describe(err) });
      }
    });
  }

  undo(): void {
    this.emit({ kind: "undone" });
  }

  /** Reduce on the server, then animate the returned presses through the
   * ordinary press pathway; the animation must land exactly on the
   * server's reduced circling. */
  autoReduce(onStep?: (state: SessionState) => void | Promise<void>): Promise<void> {
    return this.enqueue(async () => {
      const state = this.current;
      if (!state.current.admissible) {
        this.emit({ kind: "hint", message: "circling is not admissible" });
        return;
      }
      let reduced;
      try {
        reduced = await this.api.reduce(state.ref, state.current.circling);
      } catch (err) {
        this.emit({ kind: "error", message: describe(err) });
        return;
      }
      for (const vertex of reduced.steps) {
        const before = this.current;
        try {
          const response = await this.api.press(before.ref, before.current.circling, vertex);
          this.emit({ kind: "pressed", vertex, response });
        } catch (err) {
          this.emit({ kind: "error", message: describe(err) });
          return;
        }
        if (onStep) {
          await onStep(this.current);
        }
      }
      const final = this.current.current.circling;
      if (!sameCircling(final, reduced.circling.circled)) {
        this.emit({
          kind: "error",
          message:
            `animation ended on [${final}] but the server reduced to ` +
            `[${reduced.circling.circled}]`,
        });
      }
    });
  }

  /** Compare the current circling against another; fills the verdict. */
  compare(other: Circling): Promise<void> {
    return this.enqueue(async () => {
      const state = this.current;
      this.emit({ kind: "compare-set", circling: other });
      try {
        const response = await this.api.equivalent(
          state.ref,
          state.current.circling,
          other,
        );
        this.emit({ kind: "verdict", response });
      } catch (err) {
        this.emit({ kind: "error", message: describe(err) });
      }
    });
  }

  /** Refold the event log and confirm it reproduces the live state. */
  checkReplay(): boolean {
    return JSON.stringify(replay(this.log)) === JSON.stringify(this.current);
  }
}

function sameCircling(a: Circling, b: Circling): boolean {
  return a.length === b.length && a.every((x, i) => x === b[i]);
}

function describe(err: unknown): string {
  if (err instanceof ApiError) {
    return `${err.code}: ${err.message}`;
  }
  return err instanceof Error ? err.message : String(err);
}
