import { ApiClient, ApiError } from "./api.js";
import { renderBoard, renderError } from "./board.js";
import { showTree } from "./tree.js";
import type { GameView, MoveJson, NewGameOptions } from "./types.js";

/**
 * Single-page app state: one session at a time, at most one in-flight
 * mutation. After every accepted POST the board is refreshed from a GET
 * (the service is polled rather than trusted to push).
 */
export class App {
  view: GameView | null = null;
  private busy = false;

  constructor(
    private api: ApiClient,
    private boardEl: HTMLElement,
    private treeEl: HTMLElement,
  ) {}

  async newGame(options: NewGameOptions): Promise<void> {
    this.view = await this.api.createGame(options);
    this.render();
  }

  async chooseMove(move: MoveJson): Promise<void> {
    if (!this.view || this.busy) return;
    this.busy = true;
    try {
      await this.api.postMove(this.view.id, move);
      this.view = await this.api.getGame(this.view.id);
      this.render();
    } catch (err) {
      if (err instanceof ApiError) {
        // conflict/illegal: show the server's message verbatim, resync
        this.view = await this.api.getGame(this.view.id);
        this.render();
        renderError(this.boardEl, err.detail);
      } else {
        throw err;
      }
    } finally {
      this.busy = false;
    }
  }

  async viewTree(n: number): Promise<void> {
    await showTree(this.api, this.treeEl, n);
  }

  render(): void {
    if (!this.view) return;
    renderBoard(this.boardEl, this.view, (move) => void this.chooseMove(move));
  }
}

function readOptions(form: HTMLFormElement): NewGameOptions {
  const data = new FormData(form);
  return {
    n: Number(data.get("n")),
    mode: data.get("mode") as NewGameOptions["mode"],
    policy: data.get("policy") as NewGameOptions["policy"],
    engine_seat: Number(data.get("engine_seat")) as 1 | 2,
    seed: Number(data.get("seed") ?? 0),
  };
}

export function mount(root: Document, baseUrl: string): App {
  const api = new ApiClient(baseUrl);
  const boardEl = root.getElementById("board")!;
  const treeEl = root.getElementById("tree")!;
  const app = new App(api, boardEl, treeEl);

  const form = root.getElementById("new-game-form") as HTMLFormElement;
  const formError = root.getElementById("form-error")!;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    formError.textContent = "";
    app.newGame(readOptions(form)).catch((err) => {
      formError.textContent =
        err instanceof ApiError ? err.detail : String(err);
    });
  });

  const treeForm = root.getElementById("tree-form") as HTMLFormElement;
  treeForm.addEventListener("submit", (event) => {
    event.preventDefault();
    const n = Number(new FormData(treeForm).get("tree_n"));
    void app.viewTree(n);
  });

  return app;
}
