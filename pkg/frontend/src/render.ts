/** SVG rendering of hypergraphs: nonterminals as circles, hyperedges as
 * labeled boxes connected to their result node and, with numbered
 * connectors, to their argument nodes.  Unproductive content is red, to-do
 * nodes are green.  Rendering is a pure function of the document and the
 * options; zoom and dragging mutate only the produced element. */

import type { HypergraphDoc } from "./api.js";
import {
  computeLayout,
  filterUnproductive,
  type Layout,
  type LayoutName,
} from "./graph.js";

export interface RenderOptions {
  layout?: LayoutName;
  showUnproductive?: boolean;
  width?: number;
  height?: number;
  interactive?: boolean;
}

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

const NODE_RADIUS = 18;
const BOX_WIDTH = 64;
const BOX_HEIGHT = 26;

const STATUS_COLOR: Record<string, string> = {
  normal: "#333333",
  todo: "green",
  unproductive: "red",
};

export function renderGraph(
  doc: HypergraphDoc,
  options: RenderOptions = {},
): SVGSVGElement {
  const {
    layout: layoutName = "circle",
    showUnproductive = true,
    width = 640,
    height = 480,
    interactive = true,
  } = options;

  const shown = showUnproductive ? doc : filterUnproductive(doc);
  const layout = computeLayout(layoutName, shown, width, height);

  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${height}`,
    width: String(width),
    height: String(height),
    class: "hypergraph",
  });
  const canvas = svgEl("g", { class: "graph-canvas" });
  svg.appendChild(canvas);

  const connectorLayer = svgEl("g", { class: "graph-connectors" });
  const elementLayer = svgEl("g", { class: "graph-elements" });
  canvas.appendChild(connectorLayer);
  canvas.appendChild(elementLayer);

  for (const edge of shown.edges) {
    const color = edge.unproductive ? "red" : "#333333";
    const from = layout.get(edge.id)!;
    const resultPos = layout.get(edge.result);
    if (resultPos) {
      connectorLayer.appendChild(
        svgEl("line", {
          class: "graph-connector graph-connector-result",
          "data-edge": edge.id,
          "data-node": edge.result,
          x1: String(from.x),
          y1: String(from.y),
          x2: String(resultPos.x),
          y2: String(resultPos.y),
          stroke: color,
        }),
      );
    }
    for (const arg of edge.args) {
      const argPos = layout.get(arg.node);
      if (!argPos) continue;
      connectorLayer.appendChild(
        svgEl("line", {
          class: "graph-connector graph-connector-arg",
          "data-edge": edge.id,
          "data-node": arg.node,
          x1: String(from.x),
          y1: String(from.y),
          x2: String(argPos.x),
          y2: String(argPos.y),
          stroke: color,
          "stroke-dasharray": "4 3",
        }),
      );
      const label = svgEl("text", {
        class: "graph-arg-position",
        "data-edge": edge.id,
        x: String((from.x + argPos.x) / 2),
        y: String((from.y + argPos.y) / 2 - 4),
        fill: color,
        "font-size": "11",
      });
      label.textContent = String(arg.pos);
      connectorLayer.appendChild(label);
    }
  }

  for (const edge of shown.edges) {
    const pos = layout.get(edge.id)!;
    const color = edge.unproductive ? "red" : "#333333";
    const group = svgEl("g", {
      class: "graph-edge-box",
      "data-id": edge.id,
      "data-unproductive": String(edge.unproductive),
      transform: `translate(${pos.x}, ${pos.y})`,
    });
    group.appendChild(
      svgEl("rect", {
        x: String(-BOX_WIDTH / 2),
        y: String(-BOX_HEIGHT / 2),
        width: String(BOX_WIDTH),
        height: String(BOX_HEIGHT),
        rx: "4",
        fill: "white",
        stroke: color,
      }),
    );
    const text = svgEl("text", {
      "text-anchor": "middle",
      dy: "4",
      fill: color,
      "font-size": "12",
    });
    text.textContent = edge.label;
    group.appendChild(text);
    if (edge.source) {
      const source = svgEl("title", {});
      source.textContent = edge.source;
      group.appendChild(source);
    }
    elementLayer.appendChild(group);
  }

  for (const node of shown.nodes) {
    const pos = layout.get(node.id)!;
    const color = STATUS_COLOR[node.status] ?? "#333333";
    const group = svgEl("g", {
      class: "graph-node",
      "data-id": node.id,
      "data-status": node.status,
      transform: `translate(${pos.x}, ${pos.y})`,
    });
    group.appendChild(
      svgEl("circle", {
        r: String(NODE_RADIUS),
        fill: "white",
        stroke: color,
        "stroke-width": "2",
      }),
    );
    const text = svgEl("text", {
      "text-anchor": "middle",
      dy: String(NODE_RADIUS + 14),
      fill: color,
      "font-size": "12",
    });
    text.textContent = node.type;
    group.appendChild(text);
    elementLayer.appendChild(group);
  }

  if (interactive) {
    attachZoom(svg, canvas);
    attachDragging(svg, elementLayer, connectorLayer);
  }
  return svg;
}

/** Wheel zoom around the canvas center via a scale transform. */
function attachZoom(svg: SVGSVGElement, canvas: SVGGElement): void {
  let scale = 1;
  svg.addEventListener("wheel", (event: WheelEvent) => {
    event.preventDefault();
    scale = Math.min(8, Math.max(0.125, scale * (event.deltaY < 0 ? 1.2 : 1 / 1.2)));
    canvas.setAttribute("data-scale", scale.toFixed(3));
    canvas.setAttribute("transform", `scale(${scale.toFixed(3)})`);
  });
}

function translateOf(el: Element): { x: number; y: number } {
  const match = /translate\(([-\d.]+),\s*([-\d.]+)\)/.exec(
    el.getAttribute("transform") ?? "",
  );
  return match
    ? { x: Number(match[1]), y: Number(match[2]) }
    : { x: 0, y: 0 };
}

/** Pointer dragging for nodes and edge boxes; incident connectors follow. */
function attachDragging(
  svg: SVGSVGElement,
  elementLayer: SVGGElement,
  connectorLayer: SVGGElement,
): void {
  let dragged: SVGGElement | null = null;
  let last = { x: 0, y: 0 };

  elementLayer.addEventListener("pointerdown", (event: PointerEvent) => {
    const target = (event.target as Element).closest(
      ".graph-node, .graph-edge-box",
    ) as SVGGElement | null;
    if (!target) return;
    dragged = target;
    last = { x: event.clientX, y: event.clientY };
  });

  svg.addEventListener("pointermove", (event: PointerEvent) => {
    if (!dragged) return;
    const pos = translateOf(dragged);
    const next = {
      x: pos.x + event.clientX - last.x,
      y: pos.y + event.clientY - last.y,
    };
    last = { x: event.clientX, y: event.clientY };
    dragged.setAttribute("transform", `translate(${next.x}, ${next.y})`);
    const id = dragged.getAttribute("data-id")!;
    const isNode = dragged.classList.contains("graph-node");
    for (const line of connectorLayer.querySelectorAll("line")) {
      if (isNode && line.getAttribute("data-node") === id) {
        line.setAttribute("x2", String(next.x));
        line.setAttribute("y2", String(next.y));
      }
      if (!isNode && line.getAttribute("data-edge") === id) {
        line.setAttribute("x1", String(next.x));
        line.setAttribute("y1", String(next.y));
      }
    }
  });

  svg.addEventListener("pointerup", () => {
    dragged = null;
  });
}
