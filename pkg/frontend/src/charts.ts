// Chart builders returning SVG markup strings. No chart library: every
// function consumes an emitted dataset as-is and stays renderer-agnostic
// so tests can assert on the output without a DOM.

import type {
  MapArtifact,
  MatrixArtifact,
  NetworkArtifact,
  PieArtifact,
} from "./types.js";
import { recipesHash } from "./router.js";
import { emptyFilter } from "./filters.js";

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

// Dot map on an equirectangular projection fitted to the point spread.
export function svgMap(map: MapArtifact, width = 460, height = 300): string {
  if (map.points.length === 0) {
    return `<svg class="chart chart-map" viewBox="0 0 ${width} ${height}" role="img"><text x="12" y="24">no geolocated cookbooks</text></svg>`;
  }
  const lats = map.points.map((p) => p.latitude);
  const lons = map.points.map((p) => p.longitude);
  const pad = 0.25;
  const latSpan = Math.max(Math.max(...lats) - Math.min(...lats), 0.5);
  const lonSpan = Math.max(Math.max(...lons) - Math.min(...lons), 0.5);
  const latMin = Math.min(...lats) - latSpan * pad;
  const lonMin = Math.min(...lons) - lonSpan * pad;
  const latMax = Math.max(...lats) + latSpan * pad;
  const lonMax = Math.max(...lons) + lonSpan * pad;

  const dots = map.points.map((p) => {
    const x = ((p.longitude - lonMin) / (lonMax - lonMin)) * width;
    const y = height - ((p.latitude - latMin) / (latMax - latMin)) * height;
    const r = 6 + Math.sqrt(p.recipes) * 4;
    const name = escapeHtml(p.city);
    const link = recipesHash({ ...emptyFilter(), provenance: new Set([p.city]) });
    return (
      `<a href="${escapeHtml(link)}">` +
      `<circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="${r.toFixed(1)}" data-city="${name}">` +
      `<title>${name}: ${p.cookbooks} cookbooks, ${p.recipes} recipes</title></circle>` +
      `<text x="${x.toFixed(1)}" y="${(y - r - 4).toFixed(1)}" text-anchor="middle">${name}</text></a>`
    );
  });
  return `<svg class="chart chart-map" viewBox="0 0 ${width} ${height}" role="img">${dots.join("")}</svg>`;
}

// Heatmap of the co-occurrence counts; cell shade scales with the count.
export function svgMatrix(matrix: MatrixArtifact, size = 460): string {
  const n = matrix.labels.length;
  if (n === 0) {
    return `<svg class="chart chart-matrix" viewBox="0 0 ${size} ${size}" role="img"><text x="12" y="24">no ingredients</text></svg>`;
  }
  const label = 110;
  const cell = (size - label) / n;
  const peak = Math.max(1, ...matrix.cells.flat());
  const parts: string[] = [];
  for (let i = 0; i < n; i++) {
    const name = escapeHtml(matrix.labels[i]!);
    parts.push(
      `<text x="${label - 4}" y="${(label + i * cell + cell * 0.7).toFixed(1)}" text-anchor="end" font-size="${Math.min(10, cell)}">${name}</text>`,
    );
    for (let j = 0; j < n; j++) {
      const value = matrix.cells[i]![j]!;
      const alpha = value / peak;
      parts.push(
        `<rect x="${(label + j * cell).toFixed(1)}" y="${(label + i * cell).toFixed(1)}" ` +
        `width="${cell.toFixed(1)}" height="${cell.toFixed(1)}" ` +
        `fill="rgba(146, 64, 14, ${alpha.toFixed(3)})" data-count="${value}">` +
        `<title>${name} + ${escapeHtml(matrix.labels[j]!)}: ${value}</title></rect>`,
      );
    }
  }
  return `<svg class="chart chart-matrix" viewBox="0 0 ${size} ${size}" role="img">${parts.join("")}</svg>`;
}

// Nodes on a circle, edges as chords with width scaled by weight.
export function svgNetwork(network: NetworkArtifact, size = 460): string {
  const n = network.nodes.length;
  if (n === 0) {
    return `<svg class="chart chart-network" viewBox="0 0 ${size} ${size}" role="img"><text x="12" y="24">no ingredients</text></svg>`;
  }
  const cx = size / 2;
  const cy = size / 2;
  const radius = size / 2 - 60;
  const position = new Map<string, { x: number; y: number }>();
  network.nodes.forEach((node, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    position.set(node.id, {
      x: cx + radius * Math.cos(angle),
      y: cy + radius * Math.sin(angle),
    });
  });
  const maxWeight = Math.max(1, ...network.edges.map((e) => e.weight));
  const lines = network.edges.map((edge) => {
    const a = position.get(edge.source)!;
    const b = position.get(edge.target)!;
    const w = 0.5 + (edge.weight / maxWeight) * 3.5;
    return (
      `<line x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}" ` +
      `stroke-width="${w.toFixed(2)}" data-pair="${escapeHtml(edge.source)}|${escapeHtml(edge.target)}">` +
      `<title>${escapeHtml(edge.source)} + ${escapeHtml(edge.target)}: ${edge.weight}</title></line>`
    );
  });
  const dots = network.nodes.map((node) => {
    const p = position.get(node.id)!;
    const r = 3 + Math.sqrt(node.weight) * 2;
    return (
      `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${r.toFixed(1)}" data-node="${escapeHtml(node.id)}">` +
      `<title>${escapeHtml(node.id)}: ${node.weight} recipes</title></circle>` +
      `<text x="${p.x.toFixed(1)}" y="${(p.y - r - 3).toFixed(1)}" text-anchor="middle" font-size="9">${escapeHtml(node.id)}</text>`
    );
  });
  return `<svg class="chart chart-network" viewBox="0 0 ${size} ${size}" role="img">${lines.join("")}${dots.join("")}</svg>`;
}

// Pie of course counts; every slice deep-links into the filtered recipes
// page. Slices arrive pre-sorted largest first.
export function svgPie(pie: PieArtifact, size = 300): string {
  const total = pie.slices.reduce((sum, s) => sum + s.count, 0);
  if (total === 0) {
    return `<svg class="chart chart-pie" viewBox="0 0 ${size} ${size}" role="img"><text x="12" y="24">no recipes</text></svg>`;
  }
  const cx = size / 2;
  const cy = size / 2;
  const r = size / 2 - 10;
  const hues = [25, 95, 200, 265, 330, 50, 160, 290];
  let angle = -Math.PI / 2;
  const parts = pie.slices.map((slice, i) => {
    const sweep = (slice.count / total) * 2 * Math.PI;
    const x1 = cx + r * Math.cos(angle);
    const y1 = cy + r * Math.sin(angle);
    angle += sweep;
    const x2 = cx + r * Math.cos(angle);
    const y2 = cy + r * Math.sin(angle);
    const large = sweep > Math.PI ? 1 : 0;
    const label = escapeHtml(slice.label);
    const link = slice.label === "uncategorised"
      ? "#/recipes"
      : recipesHash({ ...emptyFilter(), courses: new Set([slice.label]) });
    const path = total === slice.count
      ? `<circle cx="${cx}" cy="${cy}" r="${r}" fill="hsl(${hues[i % hues.length]}, 60%, 55%)" data-course="${label}"><title>${label}: ${slice.count}</title></circle>`
      : `<path d="M ${cx} ${cy} L ${x1.toFixed(1)} ${y1.toFixed(1)} A ${r} ${r} 0 ${large} 1 ${x2.toFixed(1)} ${y2.toFixed(1)} Z" ` +
        `fill="hsl(${hues[i % hues.length]}, 60%, 55%)" data-course="${label}"><title>${label}: ${slice.count}</title></path>`;
    return `<a href="${escapeHtml(link)}">${path}</a>`;
  });
  return `<svg class="chart chart-pie" viewBox="0 0 ${size} ${size}" role="img">${parts.join("")}</svg>`;
}

// Horizontal bars for count profiles (units of measure, gender tallies).
export function svgBars(
  entries: { label: string; count: number }[],
  width = 460,
): string {
  if (entries.length === 0) {
    return `<svg class="chart chart-bars" viewBox="0 0 ${width} 40" role="img"><text x="12" y="24">nothing to show</text></svg>`;
  }
  const rowH = 24;
  const height = entries.length * rowH + 8;
  const peak = Math.max(1, ...entries.map((e) => e.count));
  const labelW = 120;
  const rows = entries.map((entry, i) => {
    const y = 4 + i * rowH;
    const w = ((width - labelW - 60) * entry.count) / peak;
    const label = escapeHtml(entry.label);
    return (
      `<text x="${labelW - 6}" y="${y + 16}" text-anchor="end">${label}</text>` +
      `<rect x="${labelW}" y="${y + 4}" width="${Math.max(w, 1).toFixed(1)}" height="${rowH - 10}" data-label="${label}" data-count="${entry.count}"></rect>` +
      `<text x="${(labelW + Math.max(w, 1) + 6).toFixed(1)}" y="${y + 16}">${entry.count}</text>`
    );
  });
  return `<svg class="chart chart-bars" viewBox="0 0 ${width} ${height}" role="img">${rows.join("")}</svg>`;
}
