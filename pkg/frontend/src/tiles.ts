// Tile semantics for the mosaic editor.  These tables mirror the engine's
// tile definitions; the shared test-vector file keeps the two in sync.

export type Side = "top" | "right" | "bottom" | "left";

export const SIDES: Side[] = ["top", "right", "bottom", "left"];

export const OPPOSITE: Record<Side, Side> = {
  top: "bottom",
  bottom: "top",
  left: "right",
  right: "left",
};

export interface TileInfo {
  kind: number;
  connections: Side[];
  pairs: [Side, Side][];
  over: "vertical" | "horizontal" | null;
}

const P = (a: Side, b: Side): [Side, Side] => [a, b];

export const TILES: TileInfo[] = [
  { kind: 0, connections: [], pairs: [], over: null },
  { kind: 1, connections: ["left", "bottom"], pairs: [P("left", "bottom")], over: null },
  { kind: 2, connections: ["bottom", "right"], pairs: [P("bottom", "right")], over: null },
  { kind: 3, connections: ["top", "right"], pairs: [P("top", "right")], over: null },
  { kind: 4, connections: ["top", "left"], pairs: [P("top", "left")], over: null },
  { kind: 5, connections: ["left", "right"], pairs: [P("left", "right")], over: null },
  { kind: 6, connections: ["top", "bottom"], pairs: [P("top", "bottom")], over: null },
  {
    kind: 7,
    connections: ["top", "right", "bottom", "left"],
    pairs: [P("top", "right"), P("bottom", "left")],
    over: null,
  },
  {
    kind: 8,
    connections: ["top", "right", "bottom", "left"],
    pairs: [P("top", "left"), P("bottom", "right")],
    over: null,
  },
  {
    kind: 9,
    connections: ["top", "right", "bottom", "left"],
    pairs: [P("top", "bottom"), P("left", "right")],
    over: "vertical",
  },
  {
    kind: 10,
    connections: ["top", "right", "bottom", "left"],
    pairs: [P("top", "bottom"), P("left", "right")],
    over: "horizontal",
  },
];

export function hasConnection(kind: number, side: Side): boolean {
  return TILES[kind].connections.includes(side);
}

// Rotation cycles quarter-turn clockwise within each tile family.
const ROTATION_NEXT: Record<number, number> = {
  0: 0, 1: 2, 2: 3, 3: 4, 4: 1, 5: 6, 6: 5, 7: 8, 8: 7, 9: 10, 10: 9,
};

export function rotateKind(kind: number): number {
  return ROTATION_NEXT[kind];
}
