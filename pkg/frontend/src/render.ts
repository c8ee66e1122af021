/** SVG rendering of a Vogan superdiagram.
 *
 * Node glyphs follow the drawing convention: white circles for even
 * vertices, filled grey/black for odd ones, an outer ring around circled
 * vertices, the lowest root labelled phi.  Pressable vertices (per the
 * server's hints) get a highlight and a data-vertex attribute for click
 * handling.  Cycles are laid out on a circle with the lowest root on top,
 * forked diagrams left to right with the fork at the left.  If layout
 * fails the renderer falls back to a plain list view.
 */

import type { Circling, Diagram, DiagramEdge } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

const R = 14; // node radius
const RING = R + 5;
const STEP = 74; // spacing between chain nodes

function adjacency(diagram: Diagram): Map<number, number[]> {
  const adj = new Map<number, number[]>(diagram.nodes.map((n) => [n.id, []]));
  for (const e of diagram.edges) {
    const au = adj.get(e.u);
    const av = adj.get(e.v);
    if (!au || !av) {
      throw new Error(`edge (${e.u},${e.v}) references a missing vertex`);
    }
    au.push(e.v);
    av.push(e.u);
  }
  for (const list of adj.values()) {
    list.sort((a, b) => a - b);
  }
  return adj;
}

function isCycle(diagram: Diagram, adj: Map<number, number[]>): boolean {
  return (
    diagram.nodes.length >= 3 &&
    diagram.nodes.every((n) => (adj.get(n.id) ?? []).length === 2)
  );
}

function cycleOrder(diagram: Diagram, adj: Map<number, number[]>): number[] {
  const start = diagram.lowest;
  const order = [start];
  let prev = -1;
  let cur = start;
  while (order.length < diagram.nodes.length) {
    const nexts = (adj.get(cur) ?? []).filter((j) => j !== prev);
    if (nexts.length === 0) {
      throw new Error("cycle walk stuck");
    }
    prev = cur;
    cur = Math.min(...nexts);
    if (cur === start) {
      break;
    }
    order.push(cur);
  }
  if (order.length !== diagram.nodes.length) {
    throw new Error("not a single cycle");
  }
  return order;
}

/** Vertex positions; throws when the diagram shape is not understood. */
export function computeLayout(diagram: Diagram): Map<number, Point> {
  const adj = adjacency(diagram);
  const pos = new Map<number, Point>();
  if (isCycle(diagram, adj)) {
    const order = cycleOrder(diagram, adj);
    const n = order.length;
    const radius = Math.max(90, (STEP * n) / (2 * Math.PI));
    const cx = radius + RING + 24;
    const cy = radius + RING + 24;
    order.forEach((id, k) => {
      const angle = -Math.PI / 2 + (2 * Math.PI * k) / n; // lowest root on top
      pos.set(id, {
        x: cx + radius * Math.cos(angle),
        y: cy + radius * Math.sin(angle),
      });
    });
    return pos;
  }
  const degree = (i: number) => (adj.get(i) ?? []).length;
  const centers = diagram.nodes.filter((n) => degree(n.id) >= 3).map((n) => n.id);
  const y0 = RING + 40;
  if (centers.length === 0) {
    // plain path, left to right from the smallest-id tip
    const tips = diagram.nodes.filter((n) => degree(n.id) === 1).map((n) => n.id);
    if (tips.length !== 2) {
      throw new Error("path layout needs exactly two tips");
    }
    const order = walk(adj, Math.min(...tips), new Set());
    order.forEach((id, k) => pos.set(id, { x: RING + 24 + k * STEP, y: y0 }));
    return pos;
  }
  if (centers.length > 1) {
    throw new Error("more than one branch vertex");
  }
  const center = centers[0];
  const nbrs = adj.get(center) ?? [];
  // two tips may be joined to each other (the C-family triangle)
  const mates = nbrs.filter((a) => nbrs.some((b) => b !== a && hasEdge(diagram, a, b)));
  let stacked: number[];
  let spineNext: number;
  if (mates.length === 2) {
    stacked = [...mates].sort((a, b) => a - b);
    const rest = nbrs.filter((j) => !mates.includes(j));
    spineNext = rest.length > 0 ? rest[0] : diagram.lowest;
  } else {
    const through = nbrs.filter((j) => degree(j) > 1);
    spineNext = through.length > 0 ? through[0] : diagram.lowest;
    stacked = nbrs.filter((j) => j !== spineNext).slice(0, 2);
  }
  if (stacked.length !== 2) {
    throw new Error("fork layout needs two stacked tips");
  }
  const spine = [center, ...walk(adj, spineNext, new Set([center]))];
  pos.set(stacked[0], { x: RING + 24, y: y0 });
  pos.set(stacked[1], { x: RING + 24, y: y0 + 2 * STEP });
  spine.forEach((id, k) =>
    pos.set(id, { x: RING + 24 + (k + 1) * STEP, y: y0 + STEP }),
  );
  if (pos.size !== diagram.nodes.length) {
    throw new Error("layout did not place every vertex");
  }
  return pos;
}

function hasEdge(diagram: Diagram, a: number, b: number): boolean {
  return diagram.edges.some(
    (e) => (e.u === a && e.v === b) || (e.u === b && e.v === a),
  );
}

function walk(adj: Map<number, number[]>, start: number, seen: Set<number>): number[] {
  const path = [start];
  seen.add(start);
  let cur = start;
  for (;;) {
    const nexts = (adj.get(cur) ?? []).filter((j) => !seen.has(j));
    if (nexts.length === 0) {
      return path;
    }
    cur = Math.min(...nexts);
    path.push(cur);
    seen.add(cur);
  }
}

function edgeSvg(e: DiagramEdge, a: Point, b: Point): string {
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len = Math.hypot(dx, dy) || 1;
  const nx = -dy / len;
  const ny = dx / len;
  const lines: string[] = [];
  const offsets =
    e.mult === 1 ? [0] : e.mult === 2 ? [-2.5, 2.5] : e.mult === 3 ? [-5, 0, 5] : [-7, -2.5, 2.5, 7];
  for (const o of offsets) {
    lines.push(
      `<line x1="${(a.x + nx * o).toFixed(1)}" y1="${(a.y + ny * o).toFixed(1)}" ` +
        `x2="${(b.x + nx * o).toFixed(1)}" y2="${(b.y + ny * o).toFixed(1)}" class="edge"/>`,
    );
  }
  if (e.mult > 1 && e.longer !== null) {
    // chevron pointing at the shorter end
    const longAt = e.longer === e.u ? a : b;
    const shortAt = e.longer === e.u ? b : a;
    const mx = (a.x + b.x) / 2;
    const my = (a.y + b.y) / 2;
    const ux = (shortAt.x - longAt.x) / len;
    const uy = (shortAt.y - longAt.y) / len;
    const tipX = mx + ux * 9;
    const tipY = my + uy * 9;
    const baseX = mx - ux * 5;
    const baseY = my - uy * 5;
    lines.push(
      `<polygon class="arrow" points="${tipX.toFixed(1)},${tipY.toFixed(1)} ` +
        `${(baseX + nx * 8).toFixed(1)},${(baseY + ny * 8).toFixed(1)} ` +
        `${(baseX - nx * 8).toFixed(1)},${(baseY - ny * 8).toFixed(1)}"/>`,
    );
  }
  return lines.join("");
}

const FILL = { white: "#ffffff", grey: "#b9b9b9", black: "#222222" };

export function renderDiagramSVG(
  diagram: Diagram,
  circling: Circling,
  pressable: number[],
): string {
  let pos: Map<number, Point>;
  try {
    pos = computeLayout(diagram);
  } catch {
    return renderListView(diagram, circling, pressable);
  }
  const xs = [...pos.values()].map((p) => p.x);
  const ys = [...pos.values()].map((p) => p.y);
  const width = Math.max(...xs) + RING + 24;
  const height = Math.max(...ys) + RING + 40;
  const circled = new Set(circling);
  const canPress = new Set(pressable);
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width.toFixed(0)} ${height.toFixed(0)}" ` +
      `width="${width.toFixed(0)}" height="${height.toFixed(0)}" role="img">`,
  ];
  for (const e of diagram.edges) {
    const a = pos.get(e.u)!;
    const b = pos.get(e.v)!;
    parts.push(edgeSvg(e, a, b));
  }
  for (const node of diagram.nodes) {
    const p = pos.get(node.id)!;
    const cls = ["node", node.color];
    if (canPress.has(node.id)) {
      cls.push("pressable");
    }
    const odd = node.parity === "odd";
    const title = odd
      ? "<title>odd roots are always non compact</title>"
      : `<title>vertex ${node.id}, a=${node.a}</title>`;
    parts.push(
      `<g class="${cls.join(" ")}"${canPress.has(node.id) ? ` data-vertex="${node.id}"` : ""}>`,
    );
    if (circled.has(node.id)) {
      parts.push(
        `<circle class="ring" cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${RING}"/>`,
      );
    }
    parts.push(
      `<circle class="body" cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${R}" ` +
        `fill="${FILL[node.color]}"/>`,
    );
    parts.push(
      `<text class="id" x="${p.x.toFixed(1)}" y="${(p.y + 4).toFixed(1)}" ` +
        `text-anchor="middle"${node.color === "black" ? ' fill="#fff"' : ""}>${node.id}</text>`,
    );
    parts.push(
      `<text class="alabel" x="${p.x.toFixed(1)}" y="${(p.y + R + 14).toFixed(1)}" ` +
        `text-anchor="middle">a=${node.a}</text>`,
    );
    if (node.id === diagram.lowest) {
      parts.push(
        `<text class="phi" x="${p.x.toFixed(1)}" y="${(p.y - R - 8).toFixed(1)}" ` +
          `text-anchor="middle">φ</text>`,
      );
    }
    parts.push(title, "</g>");
  }
  parts.push("</svg>");
  return parts.join("");
}

/** Fallback when no layout applies: one row per vertex. */
export function renderListView(
  diagram: Diagram,
  circling: Circling,
  pressable: number[],
): string {
  const circled = new Set(circling);
  const rows = diagram.nodes
    .map((node) => {
      const marks = [
        node.color,
        circled.has(node.id) ? "circled" : "",
        node.id === diagram.lowest ? "phi" : "",
      ]
        .filter(Boolean)
        .join(", ");
      const press = pressable.includes(node.id)
        ? ` <button data-vertex="${node.id}">press</button>`
        : "";
      return `<li class="list-node">vertex ${node.id} (a=${node.a}): ${marks}${press}</li>`;
    })
    .join("");
  return `<ul class="diagram-list">${rows}</ul>`;
}
