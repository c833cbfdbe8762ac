/** SVG rendering of a laid-out graph.  Pure DOM construction, no styling
 * logic beyond classes; visual identity of replays follows from the
 * deterministic layout. */

import type { GraphData } from "./graph.js";
import type { Layout } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function svgElement(tag: string, attrs: Record<string, string>): SVGElement {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

export function renderGraph(svg: SVGSVGElement, graph: GraphData, layout: Layout): void {
  svg.replaceChildren();
  for (const edge of graph.edges) {
    const a = layout.get(edge.source);
    const b = layout.get(edge.target);
    if (!a || !b) continue;
    if (edge.source === edge.target) {
      const loop = svgElement("path", {
        d: `M ${a.x} ${a.y - 12} C ${a.x - 40} ${a.y - 60}, ${a.x + 40} ${a.y - 60}, ${a.x} ${a.y - 12}`,
        class: "edge",
        fill: "none",
      });
      svg.appendChild(loop);
    } else {
      svg.appendChild(
        svgElement("line", {
          x1: String(a.x),
          y1: String(a.y),
          x2: String(b.x),
          y2: String(b.y),
          class: "edge",
        }),
      );
    }
    const midX = edge.source === edge.target ? a.x : (a.x + b.x) / 2;
    const midY = edge.source === edge.target ? a.y - 52 : (a.y + b.y) / 2;
    const label = svgElement("text", {
      x: String(midX),
      y: String(midY - 4),
      class: "edge-label",
      "text-anchor": "middle",
    });
    label.textContent = edge.label;
    svg.appendChild(label);
  }
  for (const node of graph.nodes) {
    const p = layout.get(node.id);
    if (!p) continue;
    svg.appendChild(
      svgElement("circle", { cx: String(p.x), cy: String(p.y), r: "12", class: "node" }),
    );
    const label = svgElement("text", {
      x: String(p.x),
      y: String(p.y + 26),
      class: "node-label",
      "text-anchor": "middle",
    });
    label.textContent = node.label;
    svg.appendChild(label);
  }
}
