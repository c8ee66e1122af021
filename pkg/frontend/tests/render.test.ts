import { describe, expect, it } from "vitest";

import { computeLayout, renderDiagramSVG, renderListView } from "../src/render.js";
import type { Diagram } from "../src/types.js";
import { DIAGRAM_D53, DIAGRAM_SL43 } from "./fixtures.js";

describe("layout", () => {
  it("puts the lowest root of a cycle on top", () => {
    const pos = computeLayout(DIAGRAM_SL43);
    expect(pos.size).toBe(9);
    const phi = pos.get(9)!;
    for (const node of DIAGRAM_SL43.nodes) {
      if (node.id !== 9) {
        expect(phi.y).toBeLessThan(pos.get(node.id)!.y);
      }
    }
  });

  it("stacks the fork tips at the left for the D family", () => {
    const pos = computeLayout(DIAGRAM_D53);
    const t1 = pos.get(1)!;
    const t2 = pos.get(2)!;
    expect(t1.x).toBe(t2.x);
    expect(t1.y).not.toBe(t2.y);
    for (const node of DIAGRAM_D53.nodes) {
      if (node.id > 2) {
        expect(pos.get(node.id)!.x).toBeGreaterThan(t1.x);
      }
    }
    // spine runs left to right toward the lowest root
    expect(pos.get(9)!.x).toBeGreaterThan(pos.get(3)!.x);
  });
});

describe("svg rendering", () => {
  it("rings circled vertices and highlights pressable ones", () => {
    const svg = renderDiagramSVG(DIAGRAM_SL43, [2, 4, 6], [2, 4, 6]);
    expect(svg).toContain("<svg");
    expect((svg.match(/class="ring"/g) ?? []).length).toBe(3);
    expect((svg.match(/data-vertex=/g) ?? []).length).toBe(3);
    expect(svg).toContain('data-vertex="2"');
    expect(svg).not.toContain('data-vertex="5"');
  });

  it("labels the lowest root phi and tooltips odd vertices", () => {
    const svg = renderDiagramSVG(DIAGRAM_SL43, [], []);
    expect(svg).toContain("φ");
    expect(svg).toContain("odd roots are always non compact");
  });

  it("draws grey vertices filled and ring-free when uncircled", () => {
    const svg = renderDiagramSVG(DIAGRAM_SL43, [3, 5].filter((i) => i !== 5), []);
    expect(svg).toContain('fill="#b9b9b9"');
    expect((svg.match(/class="ring"/g) ?? []).length).toBe(1);
  });

  it("draws the double edge with two lines and an arrow", () => {
    const svg = renderDiagramSVG(DIAGRAM_D53, [], []);
    expect((svg.match(/class="arrow"/g) ?? []).length).toBe(1);
  });

  it("falls back to a list view when layout fails", () => {
    const broken: Diagram = {
      ...DIAGRAM_D53,
      // two branch vertices: no supported layout
      edges: [...DIAGRAM_D53.edges, { u: 5, v: 9, mult: 1, longer: null }, { u: 5, v: 1, mult: 1, longer: null }],
    };
    const html = renderDiagramSVG(broken, [2], [2]);
    expect(html).toContain("diagram-list");
    expect(html).toContain("vertex 2");
  });

  it("list view marks circled and pressable vertices", () => {
    const html = renderListView(DIAGRAM_D53, [2, 4, 9], [2, 4, 9]);
    expect(html).toContain("circled");
    expect((html.match(/data-vertex=/g) ?? []).length).toBe(3);
    expect(html).toContain("phi");
  });
});
