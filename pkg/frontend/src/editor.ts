// Editor state: the grid being built, the selected palette tile, and the
// live connectivity marks.  Pure functions; the DOM layer consumes them.

import { OPPOSITE, SIDES, Side, hasConnection, rotateKind } from "./tiles.js";

export interface EdgeMark {
  row: number;
  col: number;
  side: Side;
}

export interface EditorState {
  n: number;
  cells: number[][];
  selected: number;
  marks: EdgeMark[];
}

export function emptyGrid(n: number): number[][] {
  return Array.from({ length: n }, () => Array(n).fill(0));
}

export function newEditor(n: number): EditorState {
  if (n < 3 || n > 10) throw new Error(`grid size ${n} out of range 3..10`);
  return { n, cells: emptyGrid(n), selected: 2, marks: [] };
}

function step(row: number, col: number, side: Side): [number, number] {
  switch (side) {
    case "top": return [row - 1, col];
    case "bottom": return [row + 1, col];
    case "left": return [row, col - 1];
    case "right": return [row, col + 1];
  }
}

// Every edge where suitable connectedness fails: a connection point facing
// the boundary, or a shared edge where exactly one cell has a point.
// Interior edges are reported once, from the row-major first cell.
export function computeMarks(cells: number[][]): EdgeMark[] {
  const n = cells.length;
  const marks: EdgeMark[] = [];
  for (let row = 0; row < n; row++) {
    for (let col = 0; col < n; col++) {
      const kind = cells[row][col];
      for (const side of ["right", "bottom"] as Side[]) {
        const [r2, c2] = step(row, col, side);
        if (r2 < n && c2 < n) {
          const mine = hasConnection(kind, side);
          const theirs = hasConnection(cells[r2][c2], OPPOSITE[side]);
          if (mine !== theirs) marks.push({ row, col, side });
        }
      }
      for (const side of SIDES) {
        const [r2, c2] = step(row, col, side);
        const outside = r2 < 0 || c2 < 0 || r2 >= n || c2 >= n;
        if (outside && hasConnection(kind, side)) marks.push({ row, col, side });
      }
    }
  }
  return marks;
}

export function withRecomputedMarks(state: EditorState): EditorState {
  return { ...state, marks: computeMarks(state.cells) };
}

export function placeTile(state: EditorState, row: number, col: number, kind: number): EditorState {
  if (row < 0 || col < 0 || row >= state.n || col >= state.n) {
    throw new Error(`cell (${row}, ${col}) out of bounds`);
  }
  if (kind < 0 || kind > 10) throw new Error(`tile kind ${kind} out of range`);
  const cells = state.cells.map((r) => r.slice());
  cells[row][col] = kind;
  return withRecomputedMarks({ ...state, cells });
}

export function rotateTile(state: EditorState, row: number, col: number): EditorState {
  const kind = state.cells[row][col];
  if (kind === 0) return state;
  return placeTile(state, row, col, rotateKind(kind));
}

export function clearGrid(state: EditorState): EditorState {
  return withRecomputedMarks({ ...state, cells: emptyGrid(state.n) });
}

export function resizeGrid(state: EditorState, n: number): EditorState {
  const next = newEditor(n);
  return { ...next, selected: state.selected };
}

// Matrix text import/export, compatible with the engine's codec: rows on
// lines (or separated by "/"), whitespace- or comma-separated entries.
export function exportMatrix(state: EditorState): string {
  return state.cells.map((row) => row.join(" ")).join("\n");
}

export function importMatrix(text: string): EditorState {
  const rows: number[][] = [];
  for (const line of text.split(/\n|\//)) {
    const tokens = line.replace(/,/g, " ").trim().split(/\s+/).filter(Boolean);
    if (!tokens.length) continue;
    const row = tokens.map((tok) => {
      const value = Number(tok);
      if (!Number.isInteger(value) || value < 0 || value > 10) {
        throw new Error(`bad matrix entry ${tok}`);
      }
      return value;
    });
    rows.push(row);
  }
  if (!rows.length) throw new Error("empty matrix text");
  const n = rows.length;
  if (rows.some((row) => row.length !== n)) throw new Error("matrix is not square");
  return withRecomputedMarks({ n, cells: rows, selected: 2, marks: [] });
}
