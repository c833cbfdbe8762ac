/** Deterministic force-directed layout.  Seeding the initial positions from
 * the sample seed makes a replayed sample render identically, which is what
 * the history feature promises. */

import type { GraphData } from "./graph.js";

export interface Point {
  x: number;
  y: number;
}

export type Layout = Map<string, Point>;

/** Small deterministic PRNG (mulberry32); good enough for jittering layouts. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface LayoutOptions {
  width: number;
  height: number;
  iterations: number;
}

const DEFAULTS: LayoutOptions = { width: 800, height: 600, iterations: 150 };

export function computeLayout(
  graph: GraphData,
  seed: number,
  options: Partial<LayoutOptions> = {},
): Layout {
  const { width, height, iterations } = { ...DEFAULTS, ...options };
  const rng = mulberry32(seed);
  const ids = graph.nodes.map((n) => n.id);
  const pos = new Map<string, Point>();
  for (const id of ids) {
    pos.set(id, { x: rng() * width, y: rng() * height });
  }
  if (ids.length <= 1) {
    const only = ids[0];
    if (only !== undefined) pos.set(only, { x: width / 2, y: height / 2 });
    return pos;
  }

  const area = width * height;
  const ideal = Math.sqrt(area / ids.length) / 2;
  for (let step = 0; step < iterations; step++) {
    // temperature decays linearly so the layout settles
    const temperature = (0.1 * Math.min(width, height) * (iterations - step)) / iterations;
    const force = new Map<string, Point>(ids.map((id) => [id, { x: 0, y: 0 }]));

    for (let i = 0; i < ids.length; i++) {
      for (let j = i + 1; j < ids.length; j++) {
        const a = pos.get(ids[i]!)!;
        const b = pos.get(ids[j]!)!;
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        let dist = Math.hypot(dx, dy);
        if (dist < 1e-6) {
          dx = 1e-3;
          dy = 1e-3;
          dist = Math.hypot(dx, dy);
        }
        const repulsion = (ideal * ideal) / dist;
        const fa = force.get(ids[i]!)!;
        const fb = force.get(ids[j]!)!;
        fa.x += (dx / dist) * repulsion;
        fa.y += (dy / dist) * repulsion;
        fb.x -= (dx / dist) * repulsion;
        fb.y -= (dy / dist) * repulsion;
      }
    }

    for (const edge of graph.edges) {
      if (edge.source === edge.target) continue; // self-loops exert no spring
      const a = pos.get(edge.source)!;
      const b = pos.get(edge.target)!;
      const dx = a.x - b.x;
      const dy = a.y - b.y;
      const dist = Math.max(Math.hypot(dx, dy), 1e-6);
      const attraction = (dist * dist) / ideal;
      const fa = force.get(edge.source)!;
      const fb = force.get(edge.target)!;
      fa.x -= (dx / dist) * attraction;
      fa.y -= (dy / dist) * attraction;
      fb.x += (dx / dist) * attraction;
      fb.y += (dy / dist) * attraction;
    }

    for (const id of ids) {
      const p = pos.get(id)!;
      const f = force.get(id)!;
      const magnitude = Math.max(Math.hypot(f.x, f.y), 1e-6);
      const limited = Math.min(magnitude, temperature);
      p.x += (f.x / magnitude) * limited;
      p.y += (f.y / magnitude) * limited;
      p.x = Math.min(width - 20, Math.max(20, p.x));
      p.y = Math.min(height - 20, Math.max(20, p.y));
    }
  }
  return pos;
}
