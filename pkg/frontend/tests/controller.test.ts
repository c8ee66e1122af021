import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { Session } from "../src/controller.js";
import {
  DIAGRAM_D53,
  DIAGRAM_SL43,
  EQUIVALENT_D53_PAIR,
  PRESS_D53_139_AT1,
  PRESS_D53_2349_AT3,
  PRESS_D53_249_AT2,
  PRESS_SL43_FIG4_AT2,
  REDUCE_D53_249,
} from "./fixtures.js";
import { makeStubFetch, type Route } from "./stubserver.js";

const SL43_REF = { family: "SL", params: { m: 4, n: 3 } };
const D53_REF = { family: "D", params: { m: 5, n: 3 } };

function sl43Session(extra: Route[] = []) {
  const routes: Route[] = [
    { path: "/diagram?family=SL&m=4&n=3", response: DIAGRAM_SL43 },
    {
      path: "/reduce",
      body: { ...SL43_REF, circling: [1, 2, 3, 4, 6] },
      status: 422,
      response: { code: "not_admissible", message: "circling [1, 2, 3, 4, 6] is not admissible" },
    },
    {
      path: "/press",
      body: { ...SL43_REF, circling: [1, 2, 3, 4, 6], vertex: 2 },
      response: PRESS_SL43_FIG4_AT2,
    },
    {
      path: "/press",
      body: { ...SL43_REF, circling: [1, 2, 3, 4, 6], vertex: 5 },
      status: 422,
      response: { code: "not_pressable", message: "vertex 5 is odd" },
    },
    ...extra,
  ];
  const { fetch, log } = makeStubFetch(routes);
  return { session: new Session(new ApiClient("http://stub", fetch)), log };
}

function d53Session(extra: Route[] = []) {
  const routes: Route[] = [
    { path: "/diagram?family=D&m=5&n=3", response: DIAGRAM_D53 },
    { path: "/reduce", body: { ...D53_REF, circling: [2, 4, 9] }, response: REDUCE_D53_249 },
    { path: "/press", body: { ...D53_REF, circling: [2, 4, 9], vertex: 2 }, response: PRESS_D53_249_AT2 },
    { path: "/press", body: { ...D53_REF, circling: [2, 3, 4, 9], vertex: 3 }, response: PRESS_D53_2349_AT3 },
    { path: "/press", body: { ...D53_REF, circling: [1, 3, 9], vertex: 1 }, response: PRESS_D53_139_AT1 },
    { path: "/equivalent", body: { ...D53_REF, c1: [2, 4, 9], c2: [1, 4, 9] }, response: EQUIVALENT_D53_PAIR },
    ...extra,
  ];
  const { fetch, log } = makeStubFetch(routes);
  return { session: new Session(new ApiClient("http://stub", fetch)), log };
}

describe("pressing", () => {
  it("press 2 on the nine-cycle seed updates the view to {2,4,6}", async () => {
    const { session } = sl43Session();
    await session.load(SL43_REF, [1, 2, 3, 4, 6]);
    expect(session.current.current.admissible).toBe(false);
    await session.press(2);
    expect(session.current.current.circling).toEqual([2, 4, 6]);
    expect(session.current.current.pressable).toEqual([2, 4, 6]);
    expect(session.checkReplay()).toBe(true);
  });

  it("undo restores the seed", async () => {
    const { session } = sl43Session();
    await session.load(SL43_REF, [1, 2, 3, 4, 6]);
    await session.press(2);
    session.undo();
    expect(session.current.current.circling).toEqual([1, 2, 3, 4, 6]);
    expect(session.current.history).toHaveLength(0);
    expect(session.checkReplay()).toBe(true);
  });

  it("pressing a non-highlighted vertex is a no-op with a hint", async () => {
    const { session, log } = sl43Session();
    await session.load(SL43_REF, [1, 2, 3, 4, 6]);
    const calls = log.length;
    await session.press(7); // not circled, hence not pressable
    expect(session.current.current.circling).toEqual([1, 2, 3, 4, 6]);
    expect(session.current.hint).toMatch(/not pressable/);
    expect(log.length).toBe(calls); // no API call went out
  });

  it("server errors surface and leave the state unchanged", async () => {
    const { session } = sl43Session();
    await session.load(SL43_REF, [1, 2, 3, 4, 6]);
    // force through the guard to exercise the API error path
    session.current.current.pressable.push(5);
    await session.press(5);
    expect(session.current.error).toMatch(/not_pressable/);
    expect(session.current.current.circling).toEqual([1, 2, 3, 4, 6]);
  });
});

describe("auto-reduce", () => {
  it("animates the three reduce steps through the press pathway", async () => {
    const { session, log } = d53Session();
    await session.load(D53_REF, [2, 4, 9]);
    expect(session.current.current.admissible).toBe(true);
    const frames: number[][] = [];
    await session.autoReduce((state) => {
      frames.push([...state.current.circling]);
    });
    expect(frames).toEqual([
      [2, 3, 4, 9],
      [1, 3, 9],
      [1, 9],
    ]);
    expect(session.current.current.circling).toEqual([1, 9]);
    expect(session.current.history.map((h) => h.vertex)).toEqual([2, 3, 1]);
    expect(session.current.error).toBeNull();
    // every animated step went through POST /press
    expect(log.filter((e) => e.path === "/press")).toHaveLength(3);
    expect(session.checkReplay()).toBe(true);
  });

  it("is disabled for inadmissible circlings", async () => {
    const { session, log } = sl43Session();
    await session.load(SL43_REF, [1, 2, 3, 4, 6]);
    const calls = log.length;
    await session.autoReduce();
    expect(session.current.hint).toMatch(/not admissible/);
    expect(log.length).toBe(calls);
  });

  it("already reduced: zero-step animation", async () => {
    const { session } = d53Session([
      {
        path: "/reduce",
        body: { ...D53_REF, circling: [1, 9] },
        response: { circling: { circled: [1, 9] }, steps: [] },
      },
    ]);
    await session.load(D53_REF, [1, 9]);
    const frames: number[][] = [];
    await session.autoReduce((s) => frames.push([...s.current.circling]));
    expect(frames).toEqual([]);
    expect(session.current.current.circling).toEqual([1, 9]);
  });
});

describe("compare", () => {
  it("reports the D(5,3) pair isomorphic with the server's witness", async () => {
    const { session } = d53Session();
    await session.load(D53_REF, [2, 4, 9]);
    await session.compare([1, 4, 9]);
    const verdict = session.current.verdict!;
    expect(verdict.equivalent).toBe(true);
    expect(verdict.symmetry?.perm).toHaveLength(9);
    expect(verdict.steps).toEqual([4, 5, 3, 4]);
    expect(session.checkReplay()).toBe(true);
  });

  it("identical circlings: isomorphic with identity and no presses", async () => {
    const { session } = d53Session([
      {
        path: "/equivalent",
        body: { ...D53_REF, c1: [2, 4, 9], c2: [2, 4, 9] },
        response: {
          equivalent: true,
          symmetry: { perm: [1, 2, 3, 4, 5, 6, 7, 8, 9], fixes_lowest: true },
          steps: [],
        },
      },
    ]);
    await session.load(D53_REF, [2, 4, 9]);
    await session.compare([2, 4, 9]);
    expect(session.current.verdict?.equivalent).toBe(true);
    expect(session.current.verdict?.steps).toEqual([]);
  });
});

describe("call serialization", () => {
  it("queued presses run in order, one in flight", async () => {
    const { session, log } = d53Session();
    await session.load(D53_REF, [2, 4, 9]);
    const p1 = session.press(2);
    const p2 = session.press(3); // resolves against the circling AFTER press 2
    await Promise.all([p1, p2]);
    const pressBodies = log
      .filter((e) => e.path === "/press")
      .map((e) => (e.body as { vertex: number }).vertex);
    expect(pressBodies).toEqual([2, 3]);
    expect(session.current.current.circling).toEqual([1, 3, 9]);
  });
});
