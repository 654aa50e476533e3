// Typed client for the game service. The UI never decides legality, winners
// or hints itself; every answer comes from these endpoints.

export type Constraint = "none" | "even" | "composite";
export type EngineRole = "first" | "second" | "none";
export type Player = "player1" | "player2";
export type GameResult = "ongoing" | Player;

export interface StateDoc {
  n: number;
  constraint: Constraint;
  moves: number[];
  used: number[];
  current: number | null;
  to_move: Player;
  result: GameResult;
  legal_moves: number[];
}

export interface SessionDoc {
  id: string;
  engine_role: EngineRole;
  created_at: number;
  updated_at: number;
  state: StateDoc;
}

export interface CreateGameResponse {
  id: string;
  state: StateDoc;
}

export interface MoveResponse {
  id: string;
  moves: number[];
  state: StateDoc;
}

export interface HintResponse {
  winning_moves: number[];
  exact: boolean;
}

export interface DecompositionDoc {
  n: number;
  d: number[];
  a: number[];
  c: number[];
}

export interface OpeningsDoc {
  n: number;
  constraint: Constraint;
  winning: number[];
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`API ${status}: ${detail}`);
  }
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: unknown };
      if (body && body.detail !== undefined) detail = JSON.stringify(body.detail);
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class GameApi {
  constructor(private readonly baseUrl: string = "") {}

  private url(path: string): string {
    return `${this.baseUrl}/api/v1${path}`;
  }

  async createGame(
    n: number,
    constraint: Constraint = "none",
    engineRole: EngineRole = "none",
  ): Promise<CreateGameResponse> {
    const response = await fetch(this.url("/games"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ n, constraint, engine_role: engineRole }),
    });
    return asJson<CreateGameResponse>(response);
  }

  async getGame(id: string): Promise<SessionDoc> {
    return asJson<SessionDoc>(await fetch(this.url(`/games/${id}`)));
  }

  async postMove(id: string, move: number): Promise<MoveResponse> {
    const response = await fetch(this.url(`/games/${id}/moves`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ move }),
    });
    return asJson<MoveResponse>(response);
  }

  async getHint(id: string): Promise<HintResponse> {
    return asJson<HintResponse>(await fetch(this.url(`/games/${id}/hint`)));
  }

  async deleteGame(id: string): Promise<void> {
    const response = await fetch(this.url(`/games/${id}`), { method: "DELETE" });
    if (!response.ok) {
      throw new ApiError(response.status, response.statusText);
    }
  }

  async getDecomposition(n: number, signal?: AbortSignal): Promise<DecompositionDoc> {
    return asJson<DecompositionDoc>(await fetch(this.url(`/decomposition/${n}`), { signal }));
  }

  async getOpenings(n: number, constraint: Constraint = "none"): Promise<OpeningsDoc> {
    return asJson<OpeningsDoc>(
      await fetch(this.url(`/openings/${n}?constraint=${constraint}`)),
    );
  }
}
