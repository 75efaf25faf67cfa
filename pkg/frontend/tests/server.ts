import { type ChildProcess, spawn } from "node:child_process";

export const PORT = 8137;
export const BASE_URL = `http://127.0.0.1:${PORT}`;

let proc: ChildProcess | null = null;

export async function startServer(): Promise<void> {
  proc = spawn(
    "python3",
    ["-m", "uvicorn", "zeckgame.service:app", "--host", "127.0.0.1", "--port", String(PORT)],
    { cwd: "..", stdio: ["ignore", "pipe", "pipe"] },
  );
  const deadline = Date.now() + 30_000;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE_URL}/analysis/bounds?n=4`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error("service did not come up");
}

export function stopServer(): void {
  proc?.kill();
  proc = null;
}
