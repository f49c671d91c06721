// DOM wiring for the mosaic builder: palette, grid, identify panel, and a
// catalog browser backed by the identification service.

import { ApiClient, IdentifyResponse, resultHeadline } from "./api.js";
import {
  EditorState,
  exportMatrix,
  importMatrix,
  newEditor,
  placeTile,
  resizeGrid,
  rotateTile,
} from "./editor.js";
import { markOverlay, tileSvg, tilePaths } from "./render.js";

interface ResultPanel {
  headline: string;
  details: string[];
}

export function panelFor(result: IdentifyResponse): ResultPanel {
  const details: string[] = [];
  if (result.kind === "knot") {
    details.push(`${result.nonblank} non-blank tiles, ${result.crossings} crossings`);
    if (result.dt) details.push(`DT code: ${result.dt.join(" ")}`);
    if (result.invariants) {
      details.push(`determinant: ${result.invariants.determinant}`);
      details.push(`Jones (4x exponents): ${result.invariants.jones}`);
      details.push(`Alexander: ${result.invariants.alexander}`);
    }
  } else {
    details.push(...result.errors);
  }
  return { headline: resultHeadline(result), details };
}

// One in-flight identify at a time: later calls supersede earlier ones.
export class IdentifyController {
  private generation = 0;

  constructor(private api: ApiClient, private show: (panel: ResultPanel) => void) {}

  async identify(state: EditorState): Promise<void> {
    const mine = ++this.generation;
    this.show({ headline: "identifying…", details: [] });
    try {
      const result = await this.api.identify(state.cells);
      if (mine === this.generation) this.show(panelFor(result));
    } catch (error) {
      if (mine === this.generation) {
        this.show({ headline: "request failed", details: [String(error)] });
      }
    }
  }
}

export function startApp(root: HTMLElement, fetchImpl = fetch.bind(globalThis)): void {
  const api = new ApiClient(fetchImpl);
  let state = newEditor(5);

  root.innerHTML = `
    <h1>Knot mosaic builder</h1>
    <div class="toolbar">
      size <select id="size">${[3, 4, 5, 6, 7, 8, 9, 10]
        .map((n) => `<option ${n === 5 ? "selected" : ""}>${n}</option>`)
        .join("")}</select>
      <button id="clear">clear</button>
      <button id="identify">identify</button>
      <span class="hint">left click: place selected tile, right click: rotate</span>
    </div>
    <div id="palette"></div>
    <div id="grid"></div>
    <div id="result"><em>build a mosaic and press identify</em></div>
    <details>
      <summary>matrix text</summary>
      <textarea id="matrix" rows="8" cols="40"></textarea>
      <button id="import">import</button>
    </details>
    <details>
      <summary>catalog search</summary>
      <input id="knot-name" placeholder="3_1"/>
      <select id="realize">
        <option value="">best mosaics</option>
        <option value="mosaic">mosaic number realized</option>
        <option value="tile">tile number realized</option>
        <option value="crossing">crossing number realized</option>
      </select>
      <button id="lookup">search</button>
      <div id="catalog-result"></div>
    </details>`;

  const grid = root.querySelector("#grid") as HTMLElement;
  const palette = root.querySelector("#palette") as HTMLElement;
  const resultBox = root.querySelector("#result") as HTMLElement;
  const matrixBox = root.querySelector("#matrix") as HTMLTextAreaElement;

  const controller = new IdentifyController(api, (panel) => {
    resultBox.innerHTML =
      `<strong>${panel.headline}</strong>` +
      panel.details.map((d) => `<div>${d}</div>`).join("");
  });

  function redraw(): void {
    palette.innerHTML = "";
    for (let kind = 0; kind <= 10; kind++) {
      const button = document.createElement("button");
      button.className = kind === state.selected ? "palette selected" : "palette";
      button.innerHTML = tileSvg(kind, 34) || "&nbsp;";
      button.title = `T${kind}`;
      button.onclick = () => {
        state = { ...state, selected: kind };
        redraw();
      };
      palette.appendChild(button);
    }
    grid.innerHTML = "";
    grid.style.display = "grid";
    grid.style.gridTemplateColumns = `repeat(${state.n}, 44px)`;
    for (let row = 0; row < state.n; row++) {
      for (let col = 0; col < state.n; col++) {
        const cell = document.createElement("div");
        cell.className = "cell";
        const kind = state.cells[row][col];
        const overlays = state.marks
          .filter((m) => m.row === row && m.col === col)
          .map((m) => markOverlay(m.side))
          .join("");
        const paths = tilePaths(kind)
          .map((d) => `<path d="${d}" fill="none" stroke="currentColor" stroke-width="0.12"/>`)
          .join("");
        cell.innerHTML = `<svg width="44" height="44" viewBox="0 0 1 1">${paths}${overlays}</svg>`;
        cell.onclick = () => {
          state = placeTile(state, row, col, state.selected);
          redraw();
        };
        cell.oncontextmenu = (event) => {
          event.preventDefault();
          state = rotateTile(state, row, col);
          redraw();
        };
        grid.appendChild(cell);
      }
    }
    matrixBox.value = exportMatrix(state);
  }

  (root.querySelector("#size") as HTMLSelectElement).onchange = (event) => {
    state = resizeGrid(state, Number((event.target as HTMLSelectElement).value));
    redraw();
  };
  (root.querySelector("#clear") as HTMLButtonElement).onclick = () => {
    state = newEditor(state.n);
    redraw();
  };
  (root.querySelector("#identify") as HTMLButtonElement).onclick = () => {
    void controller.identify(state);
  };
  (root.querySelector("#import") as HTMLButtonElement).onclick = () => {
    try {
      state = importMatrix(matrixBox.value);
      redraw();
    } catch (error) {
      resultBox.innerHTML = `<strong>import failed</strong><div>${String(error)}</div>`;
    }
  };
  (root.querySelector("#lookup") as HTMLButtonElement).onclick = () => {
    const name = (root.querySelector("#knot-name") as HTMLInputElement).value.trim();
    const realize = (root.querySelector("#realize") as HTMLSelectElement).value;
    const target = root.querySelector("#catalog-result") as HTMLElement;
    api
      .catalog(name, realize || undefined)
      .then((body) => {
        target.innerHTML = body.mosaics
          .map(
            (m) =>
              `<div><code>${m.matrix}</code> — ${m.n}x${m.n}, ${m.nonblank} tiles, ` +
              `${m.crossings} crossings</div>`
          )
          .join("");
      })
      .catch((error) => {
        target.textContent = String(error);
      });
  };

  redraw();
}

declare global {
  interface Window {
    knotmosaicsStart?: typeof startApp;
  }
}

if (typeof window !== "undefined") {
  window.knotmosaicsStart = startApp;
  const root = document.getElementById("app");
  if (root) startApp(root);
}
