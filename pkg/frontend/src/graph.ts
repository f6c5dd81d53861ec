// SVG attack-graph view: nodes are arguments, directed edges are
// attacks, self-attacks draw as loops.  Facets are highlighted, settled
// arguments muted; membership in the current sample extension gets a
// ring.  Pure view: it only re-renders what it is handed.

import { computeLayout, LayoutNode } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 640;
const HEIGHT = 420;
const RADIUS = 16;

export interface GraphData {
  seedKey: string;
  argumentNames: string[];
  attacks: [string, string][];
}

export interface GraphHighlight {
  facets: Set<string>;
  sample: Set<string>;
}

export class GraphView {
  private svg: SVGSVGElement;
  private layout: LayoutNode[] = [];
  private byName = new Map<string, LayoutNode>();
  private nodeGroups = new Map<string, SVGGElement>();
  private data: GraphData | null = null;

  constructor(host: HTMLElement) {
    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
    this.svg.setAttribute("class", "graph");
    this.svg.appendChild(this.arrowDefs());
    host.appendChild(this.svg);
  }

  private arrowDefs(): SVGDefsElement {
    const defs = document.createElementNS(SVG_NS, "defs");
    const marker = document.createElementNS(SVG_NS, "marker");
    marker.setAttribute("id", "arrow");
    marker.setAttribute("viewBox", "0 0 10 10");
    marker.setAttribute("refX", "9");
    marker.setAttribute("refY", "5");
    marker.setAttribute("markerWidth", "7");
    marker.setAttribute("markerHeight", "7");
    marker.setAttribute("orient", "auto-start-reverse");
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", "M 0 0 L 10 5 L 0 10 z");
    path.setAttribute("class", "arrow-head");
    marker.appendChild(path);
    defs.appendChild(marker);
    return defs;
  }

  setFramework(data: GraphData): void {
    this.data = data;
    this.layout = computeLayout(
      data.seedKey, data.argumentNames, data.attacks, WIDTH, HEIGHT,
    );
    this.byName = new Map(this.layout.map((n) => [n.name, n]));
    this.redraw({ facets: new Set(), sample: new Set() });
  }

  clear(): void {
    this.data = null;
    while (this.svg.childNodes.length > 1) {
      this.svg.removeChild(this.svg.lastChild!);
    }
  }

  redraw(highlight: GraphHighlight): void {
    if (!this.data) {
      return;
    }
    while (this.svg.childNodes.length > 1) {
      this.svg.removeChild(this.svg.lastChild!);
    }
    this.nodeGroups.clear();

    const edges = document.createElementNS(SVG_NS, "g");
    for (const [a, b] of this.data.attacks) {
      edges.appendChild(a === b ? this.selfLoop(a) : this.edge(a, b));
    }
    this.svg.appendChild(edges);

    const nodes = document.createElementNS(SVG_NS, "g");
    for (const node of this.layout) {
      const isFacet = highlight.facets.has(node.name);
      const inSample = highlight.sample.has(node.name);
      const g = document.createElementNS(SVG_NS, "g");
      g.setAttribute("data-node", node.name);
      g.setAttribute(
        "class",
        ["node", isFacet ? "facet" : "muted", inSample ? "in-sample" : ""]
          .filter(Boolean)
          .join(" "),
      );
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", node.x.toFixed(1));
      circle.setAttribute("cy", node.y.toFixed(1));
      circle.setAttribute("r", String(RADIUS));
      g.appendChild(circle);
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", node.x.toFixed(1));
      label.setAttribute("y", node.y.toFixed(1));
      label.setAttribute("dy", "0.35em");
      label.textContent = node.name;
      g.appendChild(label);
      nodes.appendChild(g);
      this.nodeGroups.set(node.name, g);
    }
    this.svg.appendChild(nodes);
  }

  nodeElement(name: string): SVGGElement | undefined {
    return this.nodeGroups.get(name);
  }

  private edge(a: string, b: string): SVGLineElement {
    const from = this.byName.get(a)!;
    const to = this.byName.get(b)!;
    const dx = to.x - from.x;
    const dy = to.y - from.y;
    const d = Math.sqrt(dx * dx + dy * dy) || 1;
    const trim = (RADIUS + 2) / d;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", (from.x + dx * trim).toFixed(1));
    line.setAttribute("y1", (from.y + dy * trim).toFixed(1));
    line.setAttribute("x2", (to.x - dx * trim).toFixed(1));
    line.setAttribute("y2", (to.y - dy * trim).toFixed(1));
    line.setAttribute("class", "attack");
    line.setAttribute("marker-end", "url(#arrow)");
    line.setAttribute("data-attack", `${a}->${b}`);
    return line;
  }

  private selfLoop(a: string): SVGPathElement {
    const node = this.byName.get(a)!;
    const r = RADIUS;
    const path = document.createElementNS(SVG_NS, "path");
    const x = node.x;
    const y = node.y - r;
    path.setAttribute(
      "d",
      `M ${x - 6} ${y} C ${x - 22} ${y - 26}, ${x + 22} ${y - 26}, ${x + 6} ${y}`,
    );
    path.setAttribute("class", "attack self-loop");
    path.setAttribute("marker-end", "url(#arrow)");
    path.setAttribute("data-attack", `${a}->${a}`);
    return path;
  }
}
