import type { ApiClient } from "./api.js";
import { ApiError } from "./api.js";
import type { TreeDocument } from "./types.js";

const NODE_W = 96;
const NODE_H = 30;
const H_GAP = 24;
const V_GAP = 60;

/** Longest-path layering: node depth = longest distance from the root. */
function layerNodes(doc: TreeDocument): Map<number, number> {
  const depth = new Map<number, number>();
  doc.nodes.forEach((node) => depth.set(node.id, 0));
  // edges always point to later nodes in DFS preorder is not guaranteed,
  // so relax until fixed point (the graph is a small DAG)
  let changed = true;
  while (changed) {
    changed = false;
    for (const edge of doc.edges) {
      const d = depth.get(edge.source)! + 1;
      if (d > depth.get(edge.target)!) {
        depth.set(edge.target, d);
        changed = true;
      }
    }
  }
  return depth;
}

function svgEl(tag: string): SVGElement {
  return document.createElementNS("http://www.w3.org/2000/svg", tag) as SVGElement;
}

export function renderTree(container: HTMLElement, doc: TreeDocument): void {
  container.replaceChildren();
  const depth = layerNodes(doc);
  const layers = new Map<number, number[]>();
  for (const node of doc.nodes) {
    const d = depth.get(node.id)!;
    if (!layers.has(d)) layers.set(d, []);
    layers.get(d)!.push(node.id);
  }
  const pos = new Map<number, { x: number; y: number }>();
  const maxWidth = Math.max(...[...layers.values()].map((ids) => ids.length));
  for (const [d, ids] of layers) {
    ids.forEach((id, i) => {
      const offset = (maxWidth - ids.length) / 2;
      pos.set(id, {
        x: (i + offset) * (NODE_W + H_GAP) + NODE_W / 2,
        y: d * (NODE_H + V_GAP) + NODE_H / 2,
      });
    });
  }

  const width = maxWidth * (NODE_W + H_GAP);
  const height = (Math.max(...layers.keys()) + 1) * (NODE_H + V_GAP);
  const svg = svgEl("svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "tree-svg");

  for (const edge of doc.edges) {
    const a = pos.get(edge.source)!;
    const b = pos.get(edge.target)!;
    const line = svgEl("line");
    line.setAttribute("x1", String(a.x));
    line.setAttribute("y1", String(a.y + NODE_H / 2));
    line.setAttribute("x2", String(b.x));
    line.setAttribute("y2", String(b.y - NODE_H / 2));
    line.setAttribute(
      "class",
      edge.on_winning_line ? "tree-edge winning-edge" : "tree-edge",
    );
    line.setAttribute("stroke", edge.on_winning_line ? "green" : "#999");
    line.setAttribute("stroke-width", edge.on_winning_line ? "3" : "1");
    svg.append(line);
  }

  for (const node of doc.nodes) {
    const p = pos.get(node.id)!;
    const group = svgEl("g");
    group.setAttribute("class", `tree-node tree-node-${node.winner}`);
    const rect = svgEl("rect");
    rect.setAttribute("x", String(p.x - NODE_W / 2));
    rect.setAttribute("y", String(p.y - NODE_H / 2));
    rect.setAttribute("width", String(NODE_W));
    rect.setAttribute("height", String(NODE_H));
    rect.setAttribute("fill", node.winner === "terminal" ? "#dfd" : "#fff");
    rect.setAttribute("stroke", "#333");
    const label = svgEl("text");
    label.setAttribute("x", String(p.x));
    label.setAttribute("y", String(p.y + 4));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("font-size", "11");
    label.textContent = node.label;
    group.append(rect, label);
    svg.append(group);
  }
  container.append(svg);
}

export async function showTree(
  api: ApiClient,
  container: HTMLElement,
  n: number,
): Promise<void> {
  container.replaceChildren();
  try {
    renderTree(container, await api.getTree(n));
  } catch (err) {
    const note = document.createElement("div");
    note.className = "error tree-capacity";
    note.textContent =
      err instanceof ApiError ? err.detail : `failed to load tree: ${err}`;
    container.append(note);
  }
}
