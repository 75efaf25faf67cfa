import { afterAll, beforeAll, beforeEach, describe, expect, it } from "vitest";

import { mount, App } from "../src/app.js";
import { renderBoard } from "../src/board.js";
import { ApiError } from "../src/api.js";
import type { GameView, MoveJson } from "../src/types.js";
import { moveKey } from "../src/types.js";
import { BASE_URL, startServer, stopServer } from "./server.js";

beforeAll(startServer);
afterAll(stopServer);

function setupDom(): App {
  document.body.innerHTML = `
    <form id="new-game-form">
      <input name="n" type="number" value="10" />
      <select name="mode">
        <option value="human_vs_engine" selected>vs engine</option>
        <option value="human_vs_human">two humans</option>
      </select>
      <select name="policy">
        <option value="random" selected>random</option>
        <option value="greedy">greedy</option>
      </select>
      <select name="engine_seat">
        <option value="2" selected>2</option>
        <option value="1">1</option>
      </select>
      <input name="seed" type="number" value="0" />
      <button type="submit">New game</button>
      <span id="form-error"></span>
    </form>
    <div id="board"></div>
    <form id="tree-form"><input name="tree_n" value="9" /></form>
    <div id="tree"></div>
  `;
  return mount(document, BASE_URL);
}

function renderedActionKeys(): string[] {
  return [...document.querySelectorAll<HTMLButtonElement>("#board .action")].map(
    (button) => button.dataset.move!,
  );
}

async function waitFor(
  predicate: () => boolean,
  timeoutMs = 10_000,
): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (!predicate()) {
    if (Date.now() > deadline) throw new Error("timed out waiting for UI");
    await new Promise((resolve) => setTimeout(resolve, 20));
  }
}

async function serviceView(id: string): Promise<GameView> {
  const res = await fetch(`${BASE_URL}/games/${id}`);
  expect(res.ok).toBe(true);
  return res.json();
}

describe("playing against the engine", () => {
  it("n=10 vs random engine: rendered actions always match the service, banner matches the winner", async () => {
    const app = setupDom();
    await app.newGame({
      n: 10,
      mode: "human_vs_engine",
      policy: "random",
      engine_seat: 2,
      seed: 7,
    });

    const transcript: GameView[] = [];
    let guard = 0;
    while (app.view!.status === "in_progress") {
      expect(guard++).toBeLessThan(100);
      transcript.push(app.view!);
      const fromService = await serviceView(app.view!.id);
      const expected = fromService.legal_moves.map(moveKey);
      expect(renderedActionKeys()).toEqual(expected);

      const historyBefore = app.view!.history.length;
      const button = document.querySelector<HTMLButtonElement>("#board .action")!;
      button.click();
      await waitFor(() => app.view!.history.length > historyBefore);
    }
    transcript.push(app.view!);

    const final = await serviceView(app.view!.id);
    expect(final.status).toBe("finished");
    const banner = document.querySelector("#board .winner-banner")!;
    const expectedBanner =
      final.winner === "player1" ? "Player 1 wins" : "Player 2 wins";
    expect(banner.textContent).toBe(expectedBanner);
    expect(renderedActionKeys()).toEqual([]);

    // contract replay: re-rendering each recorded view reproduces exactly
    // the legal-move set the service reported at that turn
    for (const view of transcript) {
      const container = document.createElement("div");
      document.body.append(container);
      renderBoard(container, view, () => {});
      const keys = [...container.querySelectorAll<HTMLButtonElement>(".action")]
        .filter((b) => !b.disabled)
        .map((b) => b.dataset.move);
      expect(keys).toEqual(view.legal_moves.map(moveKey));
      container.remove();
    }
  });

  it("n=2 with engine in seat 1 opens already finished, winner Player 1", async () => {
    const app = setupDom();
    await app.newGame({
      n: 2,
      mode: "human_vs_engine",
      policy: "random",
      engine_seat: 1,
      seed: 0,
    });
    expect(app.view!.status).toBe("finished");
    expect(app.view!.winner).toBe("player1");
    const banner = document.querySelector("#board .winner-banner")!;
    expect(banner.textContent).toBe("Player 1 wins");
    expect(renderedActionKeys()).toEqual([]);
  });

  it("n=10 initial board shows ten F_1 chips and one enabled action", async () => {
    const app = setupDom();
    await app.newGame({
      n: 10,
      mode: "human_vs_engine",
      policy: "random",
      engine_seat: 2,
      seed: 1,
    });
    const chips = [...document.querySelectorAll("#board .chip")];
    expect(chips).toHaveLength(1);
    expect(chips[0]!.textContent).toBe("1×10");
    expect(renderedActionKeys()).toEqual(["merge_ones"]);
    expect(
      document.querySelector("#board .monovariant")!.textContent,
    ).toContain("10.00000");
  });
});

describe("new game form", () => {
  it("surfaces the server's validation message for n=1", async () => {
    setupDom();
    const form = document.getElementById("new-game-form") as HTMLFormElement;
    (form.elements.namedItem("n") as HTMLInputElement).value = "1";
    form.dispatchEvent(new Event("submit", { cancelable: true }));
    await waitFor(
      () => document.getElementById("form-error")!.textContent !== "",
    );
    expect(document.querySelector("#board .chips")).toBeNull();
  });

  it("creates a game through the form", async () => {
    const app = setupDom();
    const form = document.getElementById("new-game-form") as HTMLFormElement;
    (form.elements.namedItem("n") as HTMLInputElement).value = "4";
    form.dispatchEvent(new Event("submit", { cancelable: true }));
    await waitFor(() => app.view !== null);
    expect(app.view!.n).toBe(4);
    expect(renderedActionKeys()).toEqual(["merge_ones"]);
  });
});

describe("illegal and conflicting moves", () => {
  it("shows the server error verbatim and resyncs the board", async () => {
    const app = setupDom();
    await app.newGame({
      n: 4,
      mode: "human_vs_human",
      policy: "random",
      engine_seat: 2,
      seed: 0,
    });
    const illegal: MoveJson = { kind: "combine", index: 1 };
    await app.chooseMove(illegal);
    const error = document.querySelector("#board .error");
    expect(error).not.toBeNull();
    expect(error!.textContent).toContain("illegal");
    // board still consistent with the service
    const fromService = await serviceView(app.view!.id);
    expect(renderedActionKeys()).toEqual(fromService.legal_moves.map(moveKey));
  });
});

describe("tree view", () => {
  it("renders the n=4 DAG: 4 canonical states, 4 edges", async () => {
    const app = setupDom();
    await app.viewTree(4);
    expect(document.querySelectorAll("#tree .tree-node")).toHaveLength(4);
    expect(document.querySelectorAll("#tree .tree-edge")).toHaveLength(4);
  });

  it("marks winning-line edges for n=9", async () => {
    const app = setupDom();
    await app.viewTree(9);
    const winning = document.querySelectorAll("#tree .winning-edge");
    expect(winning.length).toBeGreaterThan(0);
  });

  it("shows the capacity notice for n=30", async () => {
    const app = setupDom();
    await app.viewTree(30);
    const note = document.querySelector("#tree .tree-capacity");
    expect(note).not.toBeNull();
    expect(note!.textContent).toContain("15");
  });
});

describe("api error type", () => {
  it("carries status and detail", async () => {
    const res = await fetch(`${BASE_URL}/analysis/solve?n=999`);
    expect(res.status).toBe(422);
    const err = new ApiError(res.status, (await res.json()).detail);
    expect(err.message).toContain("422");
  });
});
