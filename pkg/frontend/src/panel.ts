// Facet panel, history strip, and sample-extension inspector.
//
// Everything rendered here is a pure function of the latest server
// payloads; the panel never recomputes facets or scores client-side.
// Rows follow the server's canonical significance order (best score
// first); settled arguments render muted and without controls.

import { Polarity, SessionStatePayload, SignificanceEntry } from "./types.js";

export interface PanelCallbacks {
  onApprove(argument: string, polarity: Polarity): void;
  onUndo(): void;
}

interface FacetRowModel {
  argument: string;
  approve?: SignificanceEntry;
  disapprove?: SignificanceEntry;
}

export function facetRowModels(state: SessionStatePayload): FacetRowModel[] {
  const rows = new Map<string, FacetRowModel>();
  const order: string[] = [];
  for (const entry of state.significance) {
    if (!rows.has(entry.argument)) {
      rows.set(entry.argument, { argument: entry.argument });
      order.push(entry.argument);
    }
    rows.get(entry.argument)![entry.polarity] = entry;
  }
  for (const name of state.facets) {
    if (!rows.has(name)) {
      rows.set(name, { argument: name });
      order.push(name);
    }
  }
  return order.map((name) => rows.get(name)!);
}

export function scorePercent(entry: SignificanceEntry): number {
  if (entry.score.den === 0) {
    return 0;
  }
  return Math.round((entry.score.num / entry.score.den) * 100);
}

export class FacetPanel {
  private busy = false;

  constructor(
    private readonly host: HTMLElement,
    private readonly callbacks: PanelCallbacks,
  ) {}

  setBusy(busy: boolean): void {
    this.busy = busy;
    for (const button of this.host.querySelectorAll("button")) {
      (button as HTMLButtonElement).disabled = busy;
    }
  }

  render(state: SessionStatePayload, allArguments: string[]): void {
    this.host.textContent = "";
    const facetSet = new Set(state.facets);

    if (facetSet.size === 0) {
      const banner = document.createElement("div");
      banner.className = "banner";
      banner.setAttribute("data-banner", "determined");
      banner.textContent = "space fully determined - no facets remain";
      this.host.appendChild(banner);
    }

    const list = document.createElement("div");
    list.className = "facet-rows";
    for (const model of facetRowModels(state)) {
      list.appendChild(this.facetRow(model));
    }
    for (const name of allArguments) {
      if (!facetSet.has(name)) {
        list.appendChild(this.mutedRow(name));
      }
    }
    this.host.appendChild(list);
  }

  private facetRow(model: FacetRowModel): HTMLElement {
    const row = document.createElement("div");
    row.className = "facet-row";
    row.setAttribute("data-facet-row", model.argument);
    const name = document.createElement("span");
    name.className = "arg-name";
    name.textContent = model.argument;
    row.appendChild(name);
    for (const polarity of ["approve", "disapprove"] as Polarity[]) {
      row.appendChild(this.scoreCell(model, polarity));
    }
    return row;
  }

  private scoreCell(model: FacetRowModel, polarity: Polarity): HTMLElement {
    const entry = model[polarity];
    const cell = document.createElement("div");
    cell.className = `score-cell ${polarity}`;
    const button = document.createElement("button");
    button.setAttribute("data-action", polarity);
    button.setAttribute("data-arg", model.argument);
    button.textContent = polarity === "approve" ? "+" : "-";
    button.disabled = this.busy;
    button.addEventListener("click", () =>
      this.callbacks.onApprove(model.argument, polarity),
    );
    cell.appendChild(button);
    if (entry) {
      const bar = document.createElement("div");
      bar.className = "score-bar";
      bar.setAttribute("data-score-bar", `${model.argument}:${polarity}`);
      const fill = document.createElement("div");
      fill.className = "score-fill";
      fill.style.width = `${scorePercent(entry)}%`;
      bar.appendChild(fill);
      const label = document.createElement("span");
      label.className = "score-label";
      label.textContent = entry.score.display;
      bar.appendChild(label);
      cell.appendChild(bar);
    }
    return cell;
  }

  private mutedRow(name: string): HTMLElement {
    const row = document.createElement("div");
    row.className = "facet-row muted";
    row.setAttribute("data-muted-row", name);
    const label = document.createElement("span");
    label.className = "arg-name";
    label.textContent = name;
    row.appendChild(label);
    const note = document.createElement("span");
    note.className = "muted-note";
    note.textContent = "settled";
    row.appendChild(note);
    return row;
  }
}

export class HistoryStrip {
  constructor(
    private readonly host: HTMLElement,
    private readonly callbacks: PanelCallbacks,
  ) {}

  render(state: SessionStatePayload): void {
    this.host.textContent = "";
    const items = document.createElement("span");
    items.className = "history-items";
    items.setAttribute("data-history", "");
    items.textContent = state.history.length
      ? state.history
          .map((h) => (h.polarity === "approve" ? h.argument : `~${h.argument}`))
          .join("  ")
      : "(no approvals yet)";
    this.host.appendChild(items);
    const undo = document.createElement("button");
    undo.setAttribute("data-action", "undo");
    undo.textContent = "undo";
    undo.disabled = state.history.length === 0;
    undo.addEventListener("click", () => this.callbacks.onUndo());
    this.host.appendChild(undo);
  }
}

export class SampleExtensionView {
  constructor(private readonly host: HTMLElement) {}

  render(state: SessionStatePayload): void {
    this.host.textContent = "";
    const label = document.createElement("span");
    label.className = "sample-label";
    label.textContent = "sample extension: ";
    this.host.appendChild(label);
    const value = document.createElement("span");
    value.setAttribute("data-sample", "");
    value.textContent = state.sample_extension
      ? `{${[...state.sample_extension].sort().join(", ")}}`
      : "(none)";
    this.host.appendChild(value);
  }
}
