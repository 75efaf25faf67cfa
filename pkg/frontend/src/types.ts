export type MoveKind = "merge_ones" | "split_twos" | "split" | "combine";

export interface MoveJson {
  kind: MoveKind;
  index?: number;
}

export interface StateJson {
  n: number;
  /** counts[i] is the multiplicity of the Fibonacci number with index i+1 */
  counts: number[];
}

export interface HistoryEntry {
  player: number;
  move: MoveJson;
}

export interface GameView {
  id: string;
  n: number;
  mode: "human_vs_human" | "human_vs_engine";
  engine_seat: number | null;
  policy: string | null;
  state: StateJson;
  legal_moves: MoveJson[];
  history: HistoryEntry[];
  monovariant: number;
  status: "in_progress" | "finished";
  winner: "player1" | "player2" | "no_moves" | null;
  to_move: number | null;
}

export interface NewGameOptions {
  n: number;
  mode: "human_vs_human" | "human_vs_engine";
  policy: "random" | "greedy" | "longest";
  engine_seat: 1 | 2;
  seed: number;
}

export interface TreeNode {
  id: number;
  label: string;
  counts: number[];
  winner: "mover" | "opponent" | "terminal";
}

export interface TreeEdge {
  source: number;
  target: number;
  move: MoveJson;
  on_winning_line: boolean;
}

export interface TreeDocument {
  n: number;
  nodes: TreeNode[];
  edges: TreeEdge[];
}

/** Fibonacci value for a 1-based game index (F_1 = 1, F_2 = 2). */
export function fibValue(index: number): number {
  let a = 1;
  let b = 2;
  for (let i = 1; i < index; i++) {
    [a, b] = [b, a + b];
  }
  return a;
}

export function describeMove(move: MoveJson): string {
  switch (move.kind) {
    case "merge_ones":
      return "merge two 1s → 2";
    case "split_twos":
      return "split two 2s → 1 + 3";
    case "split": {
      const v = fibValue(move.index!);
      return `split two ${v}s → ${fibValue(move.index! - 2)} + ${fibValue(move.index! + 1)}`;
    }
    case "combine": {
      const a = fibValue(move.index!);
      const b = fibValue(move.index! + 1);
      return `combine ${a} + ${b} → ${fibValue(move.index! + 2)}`;
    }
  }
}

export function moveKey(move: MoveJson): string {
  return move.index === undefined ? move.kind : `${move.kind}:${move.index}`;
}
