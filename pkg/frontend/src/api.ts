import type { GameView, MoveJson, NewGameOptions, TreeDocument } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}

async function parseError(res: Response): Promise<never> {
  let detail = res.statusText;
  try {
    const body = await res.json();
    if (body.detail) {
      detail = typeof body.detail === "string" ? body.detail : JSON.stringify(body.detail);
    }
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(res.status, detail);
}

export class ApiClient {
  constructor(private baseUrl: string) {}

  async createGame(options: NewGameOptions): Promise<GameView> {
    const res = await fetch(`${this.baseUrl}/games`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(options),
    });
    if (!res.ok) return parseError(res);
    return res.json();
  }

  async getGame(id: string): Promise<GameView> {
    const res = await fetch(`${this.baseUrl}/games/${id}`);
    if (!res.ok) return parseError(res);
    return res.json();
  }

  async postMove(id: string, move: MoveJson): Promise<GameView> {
    const res = await fetch(`${this.baseUrl}/games/${id}/moves`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(move),
    });
    if (!res.ok) return parseError(res);
    return res.json();
  }

  async getTree(n: number): Promise<TreeDocument> {
    const res = await fetch(`${this.baseUrl}/analysis/tree?n=${n}&format=json`);
    if (!res.ok) return parseError(res);
    const body = await res.json();
    return JSON.parse(body.document);
  }
}
