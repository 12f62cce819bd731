/** Client-side graph transformations: the unproductive-cycle filter and the
 * automatic layouts.  Pure functions over hypergraph documents. */

import type { HypergraphDoc } from "./api.js";

/** Drop unproductive edges, then unproductive nodes left without any
 * incident edge.  The first-listed node anchors the requested type and is
 * always kept — mirrors the service's `unproductive=false` responses. */
export function filterUnproductive(doc: HypergraphDoc): HypergraphDoc {
  const edges = doc.edges.filter((e) => !e.unproductive);
  const used = new Set<string>();
  for (const e of edges) {
    used.add(e.result);
    for (const a of e.args) used.add(a.node);
  }
  const anchor = doc.nodes[0]?.id;
  const nodes = doc.nodes.filter(
    (n) => used.has(n.id) || n.status !== "unproductive" || n.id === anchor,
  );
  return { nodes, edges };
}

export interface Point {
  x: number;
  y: number;
}

/** Positions for every node and every edge box, keyed by element id. */
export type Layout = Map<string, Point>;

export type LayoutName = "circle" | "layered";

export const LAYOUTS: LayoutName[] = ["circle", "layered"];

/** Nodes on an outer circle, edge boxes on an inner circle between their
 * endpoints' angular positions. */
export function circleLayout(
  doc: HypergraphDoc,
  width = 640,
  height = 480,
): Layout {
  const layout: Layout = new Map();
  const cx = width / 2;
  const cy = height / 2;
  const r = Math.max(60, Math.min(width, height) / 2 - 60);
  const n = Math.max(doc.nodes.length, 1);
  doc.nodes.forEach((node, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    layout.set(node.id, {
      x: cx + r * Math.cos(angle),
      y: cy + r * Math.sin(angle),
    });
  });
  doc.edges.forEach((edge, i) => {
    const endpoints = [edge.result, ...edge.args.map((a) => a.node)]
      .map((id) => layout.get(id))
      .filter((p): p is Point => p !== undefined);
    if (endpoints.length === 0) {
      layout.set(edge.id, { x: cx, y: cy });
      return;
    }
    const mean = endpoints.reduce(
      (acc, p) => ({ x: acc.x + p.x / endpoints.length, y: acc.y + p.y / endpoints.length }),
      { x: 0, y: 0 },
    );
    // pull toward the center, fanning coincident boxes apart
    const t = 0.45 + 0.12 * (i % 3);
    layout.set(edge.id, {
      x: cx + (mean.x - cx) * t,
      y: cy + (mean.y - cy) * t,
    });
  });
  return layout;
}

/** Nodes in layers by distance from the first node (breadth-first over edge
 * incidence), edge boxes between the layers of their endpoints. */
export function layeredLayout(
  doc: HypergraphDoc,
  width = 640,
  height = 480,
): Layout {
  const layerOf = new Map<string, number>();
  if (doc.nodes.length > 0) {
    const queue = [doc.nodes[0].id];
    layerOf.set(doc.nodes[0].id, 0);
    while (queue.length > 0) {
      const current = queue.shift()!;
      for (const e of doc.edges) {
        const endpoints = [e.result, ...e.args.map((a) => a.node)];
        if (!endpoints.includes(current)) continue;
        for (const other of endpoints) {
          if (!layerOf.has(other)) {
            layerOf.set(other, layerOf.get(current)! + 1);
            queue.push(other);
          }
        }
      }
    }
  }
  let unplaced = 0;
  const maxLayer = Math.max(0, ...layerOf.values());
  for (const node of doc.nodes) {
    if (!layerOf.has(node.id)) layerOf.set(node.id, maxLayer + 1 + unplaced++);
  }

  const byLayer = new Map<number, string[]>();
  for (const node of doc.nodes) {
    const layer = layerOf.get(node.id)!;
    byLayer.set(layer, [...(byLayer.get(layer) ?? []), node.id]);
  }
  const layers = [...byLayer.keys()].sort((a, b) => a - b);
  const layout: Layout = new Map();
  layers.forEach((layer, row) => {
    const ids = byLayer.get(layer)!;
    const y = (height * (row + 1)) / (layers.length + 1);
    ids.forEach((id, col) => {
      layout.set(id, { x: (width * (col + 1)) / (ids.length + 1), y });
    });
  });
  doc.edges.forEach((edge, i) => {
    const endpoints = [edge.result, ...edge.args.map((a) => a.node)]
      .map((id) => layout.get(id))
      .filter((p): p is Point => p !== undefined);
    if (endpoints.length === 0) {
      layout.set(edge.id, { x: width / 2, y: height / 2 });
      return;
    }
    const mean = endpoints.reduce(
      (acc, p) => ({ x: acc.x + p.x / endpoints.length, y: acc.y + p.y / endpoints.length }),
      { x: 0, y: 0 },
    );
    // nudge overlapping boxes apart horizontally
    layout.set(edge.id, { x: mean.x + 24 * (i % 2 === 0 ? 1 : -1), y: mean.y });
  });
  return layout;
}

export function computeLayout(
  name: LayoutName,
  doc: HypergraphDoc,
  width = 640,
  height = 480,
): Layout {
  return name === "circle"
    ? circleLayout(doc, width, height)
    : layeredLayout(doc, width, height);
}
