// End-to-end: the real UI DOM driven against a live argfacets service.
//
// Spawns `python -m argfacets.cli serve --port 0`, mounts the App in
// jsdom, loads the breakfast framework under stable semantics, and
// walks the flow the UI exists for: inspect facets, approve, undo.

import { spawn, ChildProcess } from "node:child_process";
import * as path from "node:path";
import * as readline from "node:readline";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { App } from "../src/app.js";

const EX1_APX = `
arg(w). arg(s). arg(b). arg(m). arg(t). arg(e). arg(p).
att(w,s). att(s,w). att(s,m). att(w,b). att(m,t).
att(t,e). att(p,t). att(t,p). att(p,e). att(e,b).
`;

let server: ChildProcess;
let baseUrl: string;

async function startServer(): Promise<string> {
  const repoRoot = path.resolve(__dirname, "..", "..");
  server = spawn("python3", ["-m", "argfacets.cli", "serve", "--port", "0"], {
    cwd: repoRoot,
    stdio: ["ignore", "pipe", "inherit"],
  });
  const rl = readline.createInterface({ input: server.stdout! });
  const port = await new Promise<number>((resolve, reject) => {
    const timer = setTimeout(() => reject(new Error("server boot timeout")), 30_000);
    rl.on("line", (line) => {
      const match = /listening on .*:(\d+)/.exec(line);
      if (match) {
        clearTimeout(timer);
        resolve(Number(match[1]));
      }
    });
    server.on("exit", (code) => reject(new Error(`server exited: ${code}`)));
  });
  const url = `http://127.0.0.1:${port}`;
  for (let i = 0; i < 50; i++) {
    try {
      const r = await fetch(`${url}/health`);
      if (r.ok) {
        return url;
      }
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error("health check never succeeded");
}

beforeAll(async () => {
  baseUrl = await startServer();
});

afterAll(() => {
  server?.kill("SIGINT");
});

describe("navigation flow against a live service", () => {
  it("load ex1/stab, approve w, undo", async () => {
    document.body.innerHTML = "<div id='app'></div>";
    const app = new App(document.getElementById("app")!, baseUrl);

    await app.loadFrameworkText(EX1_APX, "apx", "ex1");
    await app.whenIdle();

    // initial view: six facet rows, twelve exact score bars, e muted
    expect(document.querySelectorAll("[data-facet-row]")).toHaveLength(6);
    expect(document.querySelectorAll("[data-score-bar]")).toHaveLength(12);
    const muted = document.querySelectorAll("[data-muted-row]");
    expect(muted).toHaveLength(1);
    expect(muted[0].getAttribute("data-muted-row")).toBe("e");
    const labels = [...document.querySelectorAll(".score-label")].map(
      (el) => el.textContent,
    );
    expect(labels.filter((t) => t === "2/3")).toHaveLength(4);

    // the graph mirrors the report: e muted, everything else highlighted
    expect(
      document.querySelector('[data-node="e"]')!.classList.contains("muted"),
    ).toBe(true);
    expect(
      document.querySelector('[data-node="w"]')!.classList.contains("facet"),
    ).toBe(true);

    // approving w settles the whole space
    const approveW = document.querySelector(
      'button[data-action="approve"][data-arg="w"]',
    ) as HTMLButtonElement;
    expect(approveW.closest("[data-facet-row]")!.querySelector(".score-label")!
      .textContent).toBe("1");
    approveW.click();
    await app.whenIdle();

    expect(document.querySelectorAll("[data-facet-row]")).toHaveLength(0);
    expect(document.querySelector("[data-banner]")).not.toBeNull();
    expect(document.querySelector("[data-history]")!.textContent).toContain("w");
    expect(document.querySelector("[data-sample]")!.textContent).toBe(
      "{m, p, w}",
    );

    // undo restores the twelve-row panel
    (document.querySelector('button[data-action="undo"]') as HTMLButtonElement).click();
    await app.whenIdle();
    expect(document.querySelectorAll("[data-score-bar]")).toHaveLength(12);
    expect(document.querySelectorAll("[data-facet-row]")).toHaveLength(6);
  });

  it("approving a stale facet surfaces the 409 notice", async () => {
    document.body.innerHTML = "<div id='app'></div>";
    const app = new App(document.getElementById("app")!, baseUrl);
    await app.loadFrameworkText(EX1_APX, "apx", "ex1");
    await app.whenIdle();

    // drive the API out from under the UI: approve via a second client
    const state = app.currentState()!;
    await fetch(`${baseUrl}/sessions/${state.id}/approve`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ argument: "w", polarity: "approve" }),
    });

    // the UI still shows the old panel; clicking s now 409s
    const approveS = document.querySelector(
      'button[data-action="approve"][data-arg="s"]',
    ) as HTMLButtonElement;
    approveS.click();
    await app.whenIdle();
    expect(document.querySelector(".notice")!.textContent).toContain(
      "no longer a facet",
    );
    // and the panel re-synced to the authoritative server state
    expect(document.querySelectorAll("[data-facet-row]")).toHaveLength(0);
  });

  it("semantics selector refetches the report", async () => {
    document.body.innerHTML = "<div id='app'></div>";
    const app = new App(document.getElementById("app")!, baseUrl);
    await app.loadFrameworkText(EX1_APX, "apx", "ex1");
    await app.whenIdle();
    await app.setSemantics("cnf");
    await app.whenIdle();
    // under conflict-free semantics all seven arguments are facets
    expect(document.querySelectorAll("[data-facet-row]")).toHaveLength(7);
    expect(document.querySelectorAll("[data-muted-row]")).toHaveLength(0);
  });
});
