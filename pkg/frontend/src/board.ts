import type { GameView, MoveJson } from "./types.js";
import { describeMove, fibValue, moveKey } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function winnerLabel(winner: GameView["winner"]): string {
  if (winner === "player1") return "Player 1 wins";
  if (winner === "player2") return "Player 2 wins";
  return "No moves were made";
}

/**
 * Render the multiset as chips grouped by Fibonacci value, e.g. 1×4 2×1.
 * Every displayed fact except the chip face values comes from the server
 * view; the client never decides legality or termination itself.
 */
function renderChips(view: GameView): HTMLElement {
  const row = el("div", "chips");
  view.state.counts.forEach((count, i) => {
    if (count === 0) return;
    const chip = el("span", "chip");
    chip.append(
      el("b", "chip-value", String(fibValue(i + 1))),
      el("span", "chip-mult", `×${count}`),
    );
    row.append(chip);
  });
  return row;
}

function renderActions(
  view: GameView,
  onMove: (move: MoveJson) => void,
): HTMLElement {
  const panel = el("div", "actions");
  for (const move of view.legal_moves) {
    const button = el("button", "action", describeMove(move));
    button.dataset.move = moveKey(move);
    button.disabled = view.status === "finished";
    button.addEventListener("click", () => onMove(move));
    panel.append(button);
  }
  return panel;
}

function renderHistory(view: GameView): HTMLElement {
  const list = el("ol", "history");
  for (const entry of view.history) {
    list.append(
      el("li", "history-entry", `P${entry.player}: ${describeMove(entry.move)}`),
    );
  }
  return list;
}

export function renderBoard(
  container: HTMLElement,
  view: GameView,
  onMove: (move: MoveJson) => void,
): void {
  container.replaceChildren();
  const header = el("div", "board-header");
  header.append(el("h2", undefined, `Game on n = ${view.n}`));
  if (view.status === "finished") {
    header.append(el("div", "banner winner-banner", winnerLabel(view.winner)));
  } else {
    const turn =
      view.mode === "human_vs_engine" && view.to_move === view.engine_seat
        ? "engine thinking…"
        : `Player ${view.to_move} to move`;
    header.append(el("div", "banner turn-banner", turn));
  }
  container.append(
    header,
    renderChips(view),
    el(
      "div",
      "monovariant",
      `monovariant: ${view.monovariant.toFixed(5)}`,
    ),
    renderActions(view, onMove),
    renderHistory(view),
  );
}

export function renderError(container: HTMLElement, message: string): void {
  const note = el("div", "error", message);
  container.prepend(note);
}
