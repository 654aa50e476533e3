// Board view model and DOM rendering for the game panel.
//
// The view model is a pure function of the API state plus the optional hint
// and class overlays, which keeps it testable and makes "board equals a
// fresh API re-fetch" a checkable invariant rather than a hope.

import type { DecompositionDoc, StateDoc } from "./api.js";

export type VertexClass = "D" | "A" | "C";

export interface CellView {
  value: number;
  used: boolean;
  current: boolean;
  legal: boolean;
  hinted: boolean;
  overlay: VertexClass | null;
}

export interface BoardViewModel {
  n: number;
  cells: CellView[];
  turn: "player1" | "player2";
  finished: boolean;
  banner: string;
}

export interface BoardOverlays {
  hints?: number[] | null;
  classes?: DecompositionDoc | null;
}

function bannerFor(state: StateDoc): string {
  if (state.result === "player1") return "Player 1 wins: opponent has no legal move";
  if (state.result === "player2") return "Player 2 wins: opponent has no legal move";
  const who = state.to_move === "player1" ? "Player 1" : "Player 2";
  return state.moves.length === 0 ? `${who} to open` : `${who} to move`;
}

export function classLookup(dec: DecompositionDoc): Map<number, VertexClass> {
  const lookup = new Map<number, VertexClass>();
  for (const v of dec.d) lookup.set(v, "D");
  for (const v of dec.a) lookup.set(v, "A");
  for (const v of dec.c) lookup.set(v, "C");
  return lookup;
}

export function buildBoardViewModel(
  state: StateDoc,
  overlays: BoardOverlays = {},
): BoardViewModel {
  const used = new Set(state.used);
  const legal = new Set(state.legal_moves);
  const hinted = new Set(overlays.hints ?? []);
  const classes = overlays.classes ? classLookup(overlays.classes) : null;
  const cells: CellView[] = [];
  for (let value = 1; value <= state.n; value += 1) {
    cells.push({
      value,
      used: used.has(value),
      current: state.current === value,
      legal: legal.has(value),
      hinted: hinted.has(value),
      overlay: classes ? (classes.get(value) ?? null) : null,
    });
  }
  const vm: BoardViewModel = {
    n: state.n,
    cells,
    turn: state.to_move,
    finished: state.result !== "ongoing",
    banner: bannerFor(state),
  };
  checkViewModelInvariants(vm, state);
  return vm;
}

export function checkViewModelInvariants(vm: BoardViewModel, state: StateDoc): void {
  const currentCells = vm.cells.filter((c) => c.current);
  if (state.moves.length > 0 && currentCells.length !== 1) {
    throw new Error(`expected exactly one current cell, found ${currentCells.length}`);
  }
  if (state.moves.length === 0 && currentCells.length !== 0) {
    throw new Error("current cell shown before any move");
  }
  for (const cell of vm.cells) {
    if (cell.legal && cell.used) {
      throw new Error(`cell ${cell.value} is both legal and used`);
    }
  }
}

export function renderBoard(
  root: HTMLElement,
  vm: BoardViewModel,
  onCellClick: (value: number) => void,
): void {
  const doc = root.ownerDocument;
  root.textContent = "";

  const banner = doc.createElement("p");
  banner.className = vm.finished ? "banner banner-final" : "banner";
  banner.textContent = vm.banner;
  root.appendChild(banner);

  const grid = doc.createElement("div");
  grid.className = "board-grid";
  for (const cell of vm.cells) {
    const button = doc.createElement("button");
    button.textContent = String(cell.value);
    button.dataset.value = String(cell.value);
    const classNames = ["cell"];
    if (cell.used) classNames.push("used");
    if (cell.current) classNames.push("current");
    if (cell.legal) classNames.push("legal");
    if (cell.hinted) classNames.push("hinted");
    if (cell.overlay) classNames.push(`class-${cell.overlay.toLowerCase()}`);
    button.className = classNames.join(" ");
    if (cell.legal && !vm.finished) {
      button.addEventListener("click", () => onCellClick(cell.value));
    } else {
      button.disabled = true;
    }
    grid.appendChild(button);
  }
  root.appendChild(grid);
}

// Read the rendered board back into comparable facts, for re-fetch checks.
export function readBoard(root: HTMLElement): {
  used: number[];
  current: number | null;
  legal: number[];
} {
  const used: number[] = [];
  const legal: number[] = [];
  let current: number | null = null;
  for (const button of Array.from(root.querySelectorAll<HTMLButtonElement>("button.cell"))) {
    const value = Number(button.dataset.value);
    if (button.classList.contains("used")) used.push(value);
    if (button.classList.contains("legal")) legal.push(value);
    if (button.classList.contains("current")) current = value;
  }
  return { used, current, legal };
}
