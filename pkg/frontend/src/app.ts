// One page, three panels: play the game, toggle exact hints, explore the
// decomposition. All game facts come from the service; this file only moves
// them between the API and the DOM.

import { ApiError, GameApi } from "./api.js";
import type { Constraint, DecompositionDoc, EngineRole, StateDoc } from "./api.js";
import { buildBoardViewModel, renderBoard } from "./board.js";
import { loadRatioSeries, renderClassGrid, renderRatioChart } from "./explorer.js";

export interface AppElements {
  board: HTMLElement;
  notice: HTMLElement;
  hintMessage: HTMLElement;
  hintToggle: HTMLInputElement;
  overlayToggle: HTMLInputElement;
  explorerGrid: HTMLElement;
  explorerChart: HTMLElement;
  explorerLabel: HTMLElement;
}

export class AppController {
  gameId: string | null = null;
  state: StateDoc | null = null;
  private hints: number[] | null = null;
  private classes: DecompositionDoc | null = null;
  private moveInFlight = false;
  private explorerAbort: AbortController | null = null;

  constructor(
    private readonly api: GameApi,
    private readonly els: AppElements,
  ) {}

  notice(text: string): void {
    this.els.notice.textContent = text;
  }

  async newGame(n: number, constraint: Constraint, engineRole: EngineRole): Promise<void> {
    if (this.gameId !== null) {
      await this.api.deleteGame(this.gameId).catch(() => undefined);
    }
    const created = await this.api.createGame(n, constraint, engineRole);
    this.gameId = created.id;
    this.state = created.state;
    this.notice("");
    await this.refreshOverlaysAndRender();
  }

  hintsOn(): boolean {
    return this.els.hintToggle.checked;
  }

  async refreshOverlaysAndRender(): Promise<void> {
    if (this.state === null || this.gameId === null) return;
    this.hints = null;
    this.els.hintMessage.textContent = "";
    if (this.hintsOn() && this.state.result === "ongoing") {
      const hint = await this.api.getHint(this.gameId);
      this.hints = hint.winning_moves;
      this.els.hintMessage.textContent =
        hint.winning_moves.length > 0
          ? `Winning moves: ${hint.winning_moves.join(", ")}`
          : "No winning move";
    }
    this.classes = this.els.overlayToggle.checked
      ? await this.api.getDecomposition(this.state.n)
      : null;
    this.render();
  }

  render(): void {
    if (this.state === null) return;
    const vm = buildBoardViewModel(this.state, {
      hints: this.hints,
      classes: this.classes,
    });
    renderBoard(this.els.board, vm, (value) => {
      void this.clickCell(value);
    });
  }

  async clickCell(value: number): Promise<void> {
    // At most one in-flight move per session; extra clicks are dropped.
    if (this.moveInFlight || this.gameId === null) return;
    this.moveInFlight = true;
    try {
      const applied = await this.api.postMove(this.gameId, value);
      this.state = applied.state;
      await this.refreshOverlaysAndRender();
    } catch (error) {
      if (error instanceof ApiError && (error.status === 409 || error.status === 404)) {
        this.notice(error.message);
      } else {
        throw error;
      }
    } finally {
      this.moveInFlight = false;
    }
  }

  async syncFromServer(): Promise<void> {
    if (this.gameId === null) return;
    const session = await this.api.getGame(this.gameId);
    this.state = session.state;
    await this.refreshOverlaysAndRender();
  }

  async showExplorer(n: number): Promise<void> {
    this.explorerAbort?.abort();
    const abort = new AbortController();
    this.explorerAbort = abort;
    this.els.explorerLabel.textContent = `n = ${n}`;
    try {
      const dec = await this.api.getDecomposition(n, abort.signal);
      renderClassGrid(this.els.explorerGrid, dec);
      const series = await loadRatioSeries(this.api, n, abort.signal);
      renderRatioChart(this.els.explorerChart, series);
    } catch (error) {
      if ((error as { name?: string }).name === "AbortError") return;
      throw error;
    }
  }
}

export function mount(doc: Document, api: GameApi): AppController {
  const byId = <T extends HTMLElement>(id: string): T => {
    const el = doc.getElementById(id);
    if (el === null) throw new Error(`missing element #${id}`);
    return el as T;
  };
  const controller = new AppController(api, {
    board: byId("board"),
    notice: byId("notice"),
    hintMessage: byId("hint-message"),
    hintToggle: byId<HTMLInputElement>("hint-toggle"),
    overlayToggle: byId<HTMLInputElement>("overlay-toggle"),
    explorerGrid: byId("explorer-grid"),
    explorerChart: byId("explorer-chart"),
    explorerLabel: byId("explorer-label"),
  });

  byId<HTMLFormElement>("new-game-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const n = Number(byId<HTMLInputElement>("game-n").value);
    const constraint = byId<HTMLSelectElement>("game-constraint").value as Constraint;
    const role = byId<HTMLSelectElement>("game-engine-role").value as EngineRole;
    void controller.newGame(n, constraint, role).catch((error) => {
      controller.notice(String(error));
    });
  });
  byId<HTMLInputElement>("hint-toggle").addEventListener("change", () => {
    void controller.refreshOverlaysAndRender();
  });
  byId<HTMLInputElement>("overlay-toggle").addEventListener("change", () => {
    void controller.refreshOverlaysAndRender();
  });
  const slider = byId<HTMLInputElement>("explorer-n");
  slider.addEventListener("input", () => {
    void controller.showExplorer(Number(slider.value)).catch(() => undefined);
  });
  return controller;
}

declare global {
  interface Window {
    jgApp?: AppController;
  }
}

// Browser entry point; tests import mount() and drive it directly instead.
if (typeof window !== "undefined" && typeof document !== "undefined" && !("__vitest__" in globalThis)) {
  const params = new URLSearchParams(window.location.search);
  const api = new GameApi(params.get("api") ?? "");
  window.jgApp = mount(document, api);
}
