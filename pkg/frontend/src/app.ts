// Top-level controller: owns the view state and serializes mutations.
//
// One in-flight mutation at a time: buttons are disabled while a
// request runs, and every view below re-renders from the response that
// comes back, never from client-side recomputation.

import { ApiClient, ApiError } from "./api.js";
import { GraphView } from "./graph.js";
import {
  FacetPanel,
  HistoryStrip,
  SampleExtensionView,
} from "./panel.js";
import {
  ALL_SEMANTICS,
  FrameworkDetail,
  Polarity,
  SemanticsTag,
  SessionStatePayload,
} from "./types.js";

export class App {
  readonly api: ApiClient;
  private graph: GraphView;
  private panel: FacetPanel;
  private history: HistoryStrip;
  private sample: SampleExtensionView;

  private framework: FrameworkDetail | null = null;
  private semantics: SemanticsTag = "stab";
  private sessionId: string | null = null;
  private state: SessionStatePayload | null = null;
  private pending: Promise<void> = Promise.resolve();

  private semanticsSelect: HTMLSelectElement;
  private noticeHost: HTMLElement;
  private titleHost: HTMLElement;

  constructor(root: HTMLElement, baseUrl: string) {
    this.api = new ApiClient(baseUrl);
    root.innerHTML = `
      <header>
        <h1>argfacets navigator</h1>
        <div class="controls">
          <label>semantics
            <select data-role="semantics"></select>
          </label>
          <span data-role="title" class="framework-title"></span>
        </div>
        <div data-role="notice" class="notice"></div>
      </header>
      <main>
        <section data-role="graph" class="graph-host"></section>
        <section class="side">
          <div data-role="history" class="history"></div>
          <div data-role="sample" class="sample"></div>
          <div data-role="panel" class="panel"></div>
        </section>
      </main>`;
    const pick = (role: string) =>
      root.querySelector(`[data-role="${role}"]`) as HTMLElement;

    this.semanticsSelect = pick("semantics") as HTMLSelectElement;
    for (const tag of ALL_SEMANTICS) {
      const option = document.createElement("option");
      option.value = tag;
      option.textContent = tag;
      this.semanticsSelect.appendChild(option);
    }
    this.semanticsSelect.value = this.semantics;
    this.semanticsSelect.addEventListener("change", () => {
      this.setSemantics(this.semanticsSelect.value as SemanticsTag);
    });

    this.noticeHost = pick("notice");
    this.titleHost = pick("title");
    this.graph = new GraphView(pick("graph"));
    const callbacks = {
      onApprove: (argument: string, polarity: Polarity) =>
        this.approve(argument, polarity),
      onUndo: () => this.undo(),
    };
    this.panel = new FacetPanel(pick("panel"), callbacks);
    this.history = new HistoryStrip(pick("history"), callbacks);
    this.sample = new SampleExtensionView(pick("sample"));
  }

  /** Resolves when every queued mutation has settled (for tests). */
  whenIdle(): Promise<void> {
    return this.pending;
  }

  private enqueue(op: () => Promise<void>): Promise<void> {
    this.pending = this.pending.then(op, op);
    return this.pending;
  }

  private notice(text: string): void {
    this.noticeHost.textContent = text;
  }

  loadFrameworkText(text: string, format: string, name: string): Promise<void> {
    return this.enqueue(async () => {
      const handle = await this.api.uploadFramework(text, format, name);
      await this.openFramework(handle.id);
    });
  }

  loadExample(name: string): Promise<void> {
    return this.enqueue(async () => {
      const handle = await this.api.loadExample(name);
      await this.openFramework(handle.id);
    });
  }

  setSemantics(tag: SemanticsTag): Promise<void> {
    return this.enqueue(async () => {
      this.semantics = tag;
      if (this.framework) {
        await this.startSession();
      }
    });
  }

  approve(argument: string, polarity: Polarity): Promise<void> {
    return this.enqueue(async () => {
      if (!this.sessionId) {
        return;
      }
      this.panel.setBusy(true);
      try {
        const state = await this.api.approve(this.sessionId, argument, polarity);
        this.applyState(state);
        this.notice("");
      } catch (err) {
        if (err instanceof ApiError && err.status === 409) {
          this.notice(`${argument} is no longer a facet`);
          await this.refreshState();
        } else {
          this.notice(String(err));
        }
      } finally {
        this.panel.setBusy(false);
      }
    });
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      if (!this.sessionId) {
        return;
      }
      this.panel.setBusy(true);
      try {
        const state = await this.api.undo(this.sessionId);
        this.applyState(state);
        this.notice("");
      } catch (err) {
        this.notice(String(err));
      } finally {
        this.panel.setBusy(false);
      }
    });
  }

  private async openFramework(id: string): Promise<void> {
    this.framework = await this.api.frameworkDetail(id);
    this.titleHost.textContent =
      `${this.framework.name} (${this.framework.arguments.length} arguments, ` +
      `${this.framework.attacks.length} attacks)`;
    this.graph.setFramework({
      seedKey: this.framework.id,
      argumentNames: this.framework.arguments,
      attacks: this.framework.attacks,
    });
    await this.startSession();
  }

  private async startSession(): Promise<void> {
    if (!this.framework) {
      return;
    }
    const handle = await this.api.createSession(this.framework.id, this.semantics);
    this.sessionId = handle.id;
    await this.refreshState();
  }

  private async refreshState(): Promise<void> {
    if (!this.sessionId) {
      return;
    }
    this.applyState(await this.api.sessionState(this.sessionId));
  }

  private applyState(state: SessionStatePayload): void {
    this.state = state;
    if (!this.framework) {
      return;
    }
    this.graph.redraw({
      facets: new Set(state.facets),
      sample: new Set(state.sample_extension ?? []),
    });
    this.panel.render(state, this.framework.arguments);
    this.history.render(state);
    this.sample.render(state);
  }

  currentState(): SessionStatePayload | null {
    return this.state;
  }
}
