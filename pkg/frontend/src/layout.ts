// Deterministic force-directed layout.
//
// Positions depend only on the framework id, the argument list, and the
// attack list, so reloading the same framework always draws the same
// picture.  A fixed number of relaxation steps keeps it synchronous.

export interface LayoutNode {
  name: string;
  x: number;
  y: number;
}

export interface LayoutEdge {
  source: number;
  target: number;
}

function hashString(text: string): number {
  let h = 2166136261;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 16777619);
  }
  return h >>> 0;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function computeLayout(
  seedKey: string,
  argumentNames: string[],
  attacks: [string, string][],
  width: number,
  height: number,
  iterations = 180,
): LayoutNode[] {
  const n = argumentNames.length;
  const rand = mulberry32(hashString(seedKey));
  const index = new Map(argumentNames.map((name, i) => [name, i]));
  const edges: LayoutEdge[] = attacks
    .filter(([a, b]) => a !== b)
    .map(([a, b]) => ({ source: index.get(a)!, target: index.get(b)! }));

  const xs = new Float64Array(n);
  const ys = new Float64Array(n);
  for (let i = 0; i < n; i++) {
    xs[i] = (rand() - 0.5) * width * 0.8;
    ys[i] = (rand() - 0.5) * height * 0.8;
  }

  const area = width * height;
  const k = Math.sqrt(area / Math.max(n, 1)) * 0.6;
  let temperature = Math.min(width, height) / 8;
  const cool = 0.955;

  for (let step = 0; step < iterations; step++) {
    const dx = new Float64Array(n);
    const dy = new Float64Array(n);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let ex = xs[i] - xs[j];
        let ey = ys[i] - ys[j];
        let d2 = ex * ex + ey * ey;
        if (d2 < 1e-6) {
          ex = rand() - 0.5;
          ey = rand() - 0.5;
          d2 = ex * ex + ey * ey;
        }
        const repulse = (k * k) / d2;
        dx[i] += ex * repulse;
        dy[i] += ey * repulse;
        dx[j] -= ex * repulse;
        dy[j] -= ey * repulse;
      }
    }
    for (const { source, target } of edges) {
      const ex = xs[source] - xs[target];
      const ey = ys[source] - ys[target];
      const d = Math.sqrt(ex * ex + ey * ey) || 1e-3;
      const attract = (d * d) / k / d;
      dx[source] -= ex * attract;
      dy[source] -= ey * attract;
      dx[target] += ex * attract;
      dy[target] += ey * attract;
    }
    for (let i = 0; i < n; i++) {
      // light gravity keeps disconnected arguments on screen
      dx[i] -= xs[i] * 0.03;
      dy[i] -= ys[i] * 0.03;
      const d = Math.sqrt(dx[i] * dx[i] + dy[i] * dy[i]) || 1e-3;
      const clamp = Math.min(d, temperature);
      xs[i] += (dx[i] / d) * clamp;
      ys[i] += (dy[i] / d) * clamp;
    }
    temperature = Math.max(temperature * cool, 0.5);
  }

  // normalize into the viewport with a margin
  let minX = Infinity, maxX = -Infinity, minY = Infinity, maxY = -Infinity;
  for (let i = 0; i < n; i++) {
    minX = Math.min(minX, xs[i]);
    maxX = Math.max(maxX, xs[i]);
    minY = Math.min(minY, ys[i]);
    maxY = Math.max(maxY, ys[i]);
  }
  const margin = 36;
  const spanX = Math.max(maxX - minX, 1e-3);
  const spanY = Math.max(maxY - minY, 1e-3);
  return argumentNames.map((name, i) => ({
    name,
    x: margin + ((xs[i] - minX) / spanX) * (width - 2 * margin),
    y: margin + ((ys[i] - minY) / spanY) * (height - 2 * margin),
  }));
}
