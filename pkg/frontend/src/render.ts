// SVG drawing derived from the tile tables: strand paths are generated
// from each tile's side pairings, so pictures cannot drift from semantics.

import { Side, TILES } from "./tiles.js";

const MID: Record<Side, [number, number]> = {
  top: [0.5, 0],
  right: [1, 0.5],
  bottom: [0.5, 1],
  left: [0, 0.5],
};

// Corner shared by two adjacent sides (arc center for quarter circles).
function corner(a: Side, b: Side): [number, number] {
  const x = a === "left" || b === "left" ? 0 : 1;
  const y = a === "top" || b === "top" ? 0 : 1;
  return [x, y];
}

function strandPath(a: Side, b: Side): string {
  const [x1, y1] = MID[a];
  const [x2, y2] = MID[b];
  if ((a === "left" && b === "right") || (a === "right" && b === "left")
      || (a === "top" && b === "bottom") || (a === "bottom" && b === "top")) {
    return `M ${x1} ${y1} L ${x2} ${y2}`;
  }
  const [cx, cy] = corner(a, b);
  const sweep = (cx === x2 && cy === y1) || (cx === x1 && cy === y2) ? 1 : 0;
  // Quarter circle of radius 1/2 around the shared corner.
  return `M ${x1} ${y1} A 0.5 0.5 0 0 ${sweep === 1 ? 1 : 0} ${x2} ${y2}`;
}

function gappedUnderPath(a: Side, b: Side): string {
  // Straight strand with a gap in the middle (the under strand at a
  // crossing): two stubs from the sides toward the center.
  const [x1, y1] = MID[a];
  const [x2, y2] = MID[b];
  const gap = 0.18;
  const mx = (x1 + x2) / 2;
  const my = (y1 + y2) / 2;
  const ux = x2 - x1;
  const uy = y2 - y1;
  return (
    `M ${x1} ${y1} L ${mx - ux * gap} ${my - uy * gap} ` +
    `M ${mx + ux * gap} ${my + uy * gap} L ${x2} ${y2}`
  );
}

export function tilePaths(kind: number): string[] {
  const tile = TILES[kind];
  if (!tile.pairs.length) return [];
  if (tile.over === null) {
    return tile.pairs.map(([a, b]) => strandPath(a, b));
  }
  const vertical: [Side, Side] = ["top", "bottom"];
  const horizontal: [Side, Side] = ["left", "right"];
  const overPair = tile.over === "vertical" ? vertical : horizontal;
  const underPair = tile.over === "vertical" ? horizontal : vertical;
  return [gappedUnderPath(...underPair), strandPath(...overPair)];
}

export function tileSvg(kind: number, size: number, extraClass = ""): string {
  const paths = tilePaths(kind)
    .map((d) => `<path d="${d}" fill="none" stroke="currentColor" stroke-width="0.12"/>`)
    .join("");
  return (
    `<svg class="tile ${extraClass}" width="${size}" height="${size}" ` +
    `viewBox="0 0 1 1">${paths}</svg>`
  );
}

export function markOverlay(side: Side): string {
  const [x, y] = MID[side];
  return `<circle class="mark" cx="${x}" cy="${y}" r="0.09" fill="#d33"/>`;
}
