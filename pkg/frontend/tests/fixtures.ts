/** Canned server responses, captured verbatim from the HTTP service. */

import type {
  Diagram,
  EquivalentResponse,
  PressResponse,
  ReduceResponse,
} from "../src/types.js";

export const DIAGRAM_SL43: Diagram = {
  family: "SL",
  params: { m: 4, n: 3 },
  nodes: [
    { id: 1, parity: "even", color: "white", a: 1 },
    { id: 2, parity: "even", color: "white", a: 1 },
    { id: 3, parity: "even", color: "white", a: 1 },
    { id: 4, parity: "even", color: "white", a: 1 },
    { id: 5, parity: "odd", color: "grey", a: 1 },
    { id: 6, parity: "even", color: "white", a: 1 },
    { id: 7, parity: "even", color: "white", a: 1 },
    { id: 8, parity: "even", color: "white", a: 1 },
    { id: 9, parity: "odd", color: "grey", a: 1 },
  ],
  edges: [
    { u: 1, v: 2, mult: 1, longer: null },
    { u: 1, v: 9, mult: 1, longer: null },
    { u: 2, v: 3, mult: 1, longer: null },
    { u: 3, v: 4, mult: 1, longer: null },
    { u: 4, v: 5, mult: 1, longer: null },
    { u: 5, v: 6, mult: 1, longer: null },
    { u: 6, v: 7, mult: 1, longer: null },
    { u: 7, v: 8, mult: 1, longer: null },
    { u: 8, v: 9, mult: 1, longer: null },
  ],
  lowest: 9,
};

export const DIAGRAM_D53: Diagram = {
  family: "D",
  params: { m: 5, n: 3 },
  nodes: [
    { id: 1, parity: "even", color: "white", a: 1 },
    { id: 2, parity: "even", color: "white", a: 1 },
    { id: 3, parity: "even", color: "white", a: 2 },
    { id: 4, parity: "even", color: "white", a: 2 },
    { id: 5, parity: "even", color: "white", a: 2 },
    { id: 6, parity: "odd", color: "grey", a: 2 },
    { id: 7, parity: "even", color: "white", a: 2 },
    { id: 8, parity: "even", color: "white", a: 2 },
    { id: 9, parity: "even", color: "white", a: 1 },
  ],
  edges: [
    { u: 1, v: 3, mult: 1, longer: null },
    { u: 2, v: 3, mult: 1, longer: null },
    { u: 3, v: 4, mult: 1, longer: null },
    { u: 4, v: 5, mult: 1, longer: null },
    { u: 5, v: 6, mult: 1, longer: null },
    { u: 6, v: 7, mult: 1, longer: null },
    { u: 7, v: 8, mult: 1, longer: null },
    { u: 8, v: 9, mult: 2, longer: 9 },
  ],
  lowest: 9,
};

export const PRESS_SL43_FIG4_AT2: PressResponse = {
  circling: { circled: [2, 4, 6] },
  admissible: false,
  pressable: [2, 4, 6],
};

export const PRESS_SL43_246_AT2: PressResponse = {
  circling: { circled: [1, 2, 3, 4, 6] },
  admissible: false,
  pressable: [1, 2, 3, 4, 6],
};

export const REDUCE_D53_249: ReduceResponse = {
  circling: { circled: [1, 9] },
  steps: [2, 3, 1],
};

export const PRESS_D53_249_AT2: PressResponse = {
  circling: { circled: [2, 3, 4, 9] },
  admissible: true,
  pressable: [2, 3, 4, 9],
};

export const PRESS_D53_2349_AT3: PressResponse = {
  circling: { circled: [1, 3, 9] },
  admissible: true,
  pressable: [1, 3, 9],
};

export const PRESS_D53_139_AT1: PressResponse = {
  circling: { circled: [1, 9] },
  admissible: true,
  pressable: [1, 9],
};

export const EQUIVALENT_D53_PAIR: EquivalentResponse = {
  equivalent: true,
  symmetry: { perm: [1, 2, 3, 4, 5, 6, 7, 8, 9], fixes_lowest: true },
  steps: [4, 5, 3, 4],
};
