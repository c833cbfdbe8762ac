/** Page wiring: upload a profile, steer constraints and predicate weights,
 * sample, render the merged sub-profile, and replay past draws.  At most one
 * sample request is in flight; starting a new one aborts the previous. */

import { ApiClient, ApiError, type ProfileStats, type SampleBody } from "./api.js";
import { buildGraph } from "./graph.js";
import { computeLayout } from "./layout.js";
import { renderGraph } from "./render.js";
import { ExplorerState } from "./state.js";

const api = new ApiClient("");
const state = new ExplorerState();
let inFlight: AbortController | null = null;

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function toast(message: string, isError = true): void {
  const box = el<HTMLDivElement>("toast");
  box.textContent = message;
  box.className = isError ? "toast error" : "toast";
  box.style.display = "block";
  window.setTimeout(() => {
    box.style.display = "none";
  }, 4000);
}

function showStats(stats: ProfileStats): void {
  const rows: [string, string][] = [
    ["Nodes", String(stats.nodes)],
    ["Edges", String(stats.edges)],
    ["Predicates", stats.predicates.join(", ")],
    ["Total weight", String(stats.totalWeight)],
  ];
  if (stats.transactions) {
    rows.push(
      ["Transactions", String(stats.transactions.transactions)],
      ["Distinct items", String(stats.transactions.items)],
      ["Avg length", stats.transactions.avgLength.toFixed(2)],
      ["Total utility", String(stats.transactions.totalUtility)],
    );
  }
  el<HTMLTableElement>("stats").innerHTML = rows
    .map(([k, v]) => `<tr><th>${k}</th><td>${v}</td></tr>`)
    .join("");
}

function rebuildWeightEditor(predicates: string[]): void {
  const editor = el<HTMLDivElement>("weights");
  editor.replaceChildren();
  for (const predicate of predicates) {
    const row = document.createElement("label");
    row.textContent = `${predicate} `;
    const input = document.createElement("input");
    input.type = "number";
    input.min = "1";
    input.step = "1";
    input.value = String(state.weightOf(predicate));
    input.addEventListener("change", () => {
      try {
        state.setPredicateWeight(predicate, Number(input.value));
      } catch (err) {
        toast((err as Error).message);
        input.value = String(state.weightOf(predicate));
      }
    });
    row.appendChild(input);
    editor.appendChild(row);
  }
}

function readControls(): void {
  const maxRaw = el<HTMLInputElement>("max-len").value.trim();
  state.setControls({
    minLen: Number(el<HTMLInputElement>("min-len").value),
    maxLen: maxRaw === "" ? null : Number(maxRaw),
    mode: el<HTMLSelectElement>("mode").value as "hup" | "haup",
    k: Number(el<HTMLInputElement>("k").value),
  });
}

function renderHistory(): void {
  const list = el<HTMLOListElement>("history");
  list.replaceChildren();
  state.history.forEach((entry, index) => {
    const item = document.createElement("li");
    const maxText = entry.request.maxLen === null ? "inf" : String(entry.request.maxLen);
    item.textContent = `k=${entry.request.k} len=[${entry.request.minLen}..${maxText}] seed=${entry.seed} `;
    const button = document.createElement("button");
    button.textContent = "replay";
    button.addEventListener("click", () => {
      void runSample(state.replayRequest(index));
    });
    item.appendChild(button);
    list.appendChild(item);
  });
}

async function runSample(request: SampleBody): Promise<void> {
  if (state.profileId === null) {
    toast("upload a profile first");
    return;
  }
  inFlight?.abort();
  const controller = new AbortController();
  inFlight = controller;
  try {
    const response = await api.sample(state.profileId, request, controller.signal);
    if (controller.signal.aborted) return;
    state.recordResult(request, response);
    const graph = buildGraph(response.subProfile);
    const svg = el<HTMLElement>("graph") as unknown as SVGSVGElement;
    renderGraph(svg, graph, computeLayout(graph, response.seed));
    el<HTMLSpanElement>("last-seed").textContent = String(response.seed);
    el<HTMLSpanElement>("timing").textContent =
      `${response.timings.drawMsPerPattern.toFixed(2)} ms/pattern`;
    renderHistory();
  } catch (err) {
    if ((err as Error).name === "AbortError") return;
    toast(err instanceof ApiError ? `${err.status}: ${err.message}` : String(err));
  } finally {
    if (inFlight === controller) inFlight = null;
  }
}

function setup(): void {
  el<HTMLButtonElement>("upload").addEventListener("click", async () => {
    let profile: unknown;
    try {
      profile = JSON.parse(el<HTMLTextAreaElement>("profile-json").value);
    } catch {
      toast("profile is not valid JSON");
      return;
    }
    try {
      const response = await api.uploadProfile(profile);
      state.setProfile(response.profileId);
      showStats(response.stats);
      rebuildWeightEditor(response.stats.predicates);
      renderHistory();
      toast(`profile ${response.profileId.slice(0, 8)} uploaded`, false);
    } catch (err) {
      toast(err instanceof ApiError ? err.message : String(err));
    }
  });

  el<HTMLButtonElement>("sample").addEventListener("click", () => {
    try {
      readControls();
    } catch (err) {
      toast((err as Error).message);
      return;
    }
    void runSample(state.buildRequest());
  });

  el<HTMLButtonElement>("resample").addEventListener("click", () => {
    try {
      readControls();
    } catch (err) {
      toast((err as Error).message);
      return;
    }
    void runSample(state.buildRequest());
  });
}

document.addEventListener("DOMContentLoaded", setup);
