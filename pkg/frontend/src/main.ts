/** Explorer wiring: canvas, panels, flip interaction, undo, generators and
 * the path animation.  All model computation happens in the engine service.
 */

import { ServiceClient, ServiceError } from "./client.js";
import { hitTest } from "./geometry.js";
import type { Glyph } from "./geometry.js";
import { canvasToWorld, renderScene, viewportFor } from "./render.js";
import { applyFlip, generatorTri, newState, replayHistory, undo } from "./state.js";
import type { ViewState } from "./state.js";
import type { CheckReport } from "./types.js";

const client = new ServiceClient("");

const canvas = document.getElementById("scene") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const panelZeta = document.getElementById("panel-zeta")!;
const panelIota = document.getElementById("panel-iota")!;
const panelNames = document.getElementById("panel-names")!;
const panelCase = document.getElementById("panel-case")!;
const banner = document.getElementById("banner")!;
const undoBtn = document.getElementById("undo") as HTMLButtonElement;
const loadBtn = document.getElementById("load") as HTMLButtonElement;
const pathBtn = document.getElementById("canonical") as HTMLButtonElement;
const panLeft = document.getElementById("pan-left") as HTMLButtonElement;
const panRight = document.getElementById("pan-right") as HTMLButtonElement;
const nInput = document.getElementById("n") as HTMLInputElement;
const aInput = document.getElementById("a") as HTMLInputElement;
const kindInput = document.getElementById("kind") as HTMLSelectElement;

let state: ViewState = newState(generatorTri("arrow", 0, 4));
let glyphs: Glyph[] = [];
let animating = false;

function showError(message: string) {
  banner.textContent = message;
  banner.classList.add("visible");
  window.setTimeout(() => banner.classList.remove("visible"), 4000);
}

function redraw() {
  const vp = viewportFor(state.current, state.params.liftCopies,
                         state.params.offset, canvas.width, canvas.height);
  glyphs = renderScene(ctx, vp, state.current, state.selected);
  undoBtn.disabled = state.history.length === 0 || animating;
}

async function refreshPanels() {
  try {
    const reply = await client.validate(state.current);
    renderPanels(reply.data);
  } catch (err) {
    if (err instanceof ServiceError) {
      renderPanels(err.payload as CheckReport);
    } else {
      showError("service unreachable; panels are stale");
    }
  }
}

function renderPanels(report: CheckReport) {
  if (!report.ok) {
    panelZeta.textContent = "invalid: " +
      report.violations.map((v) => v.code).join(", ");
    panelIota.textContent = "";
    panelNames.textContent = "";
    return;
  }
  panelZeta.textContent = `zeta = (${report.zeta![0]}, ${report.zeta![1]})`;
  panelIota.textContent = report.fv
    ? `iota = (${report.iota!.join(", ")})`
    : "not in the stable family";
  panelNames.innerHTML = "";
  for (const name of report.names!) {
    const li = document.createElement("li");
    li.textContent = name;
    panelNames.appendChild(li);
  }
}

async function setState(next: ViewState, caseLabel?: string) {
  state = next;
  if (caseLabel !== undefined) {
    panelCase.textContent = `last flip: ${caseLabel}`;
  }
  redraw();
  await refreshPanels();
}

let inFlight = false;

canvas.addEventListener("click", async (ev) => {
  if (animating || inFlight) return; // keep at most one request in flight
  const rect = canvas.getBoundingClientRect();
  const vp = viewportFor(state.current, state.params.liftCopies,
                         state.params.offset, canvas.width, canvas.height);
  const [wx, wy] = canvasToWorld(vp, ev.clientX - rect.left, ev.clientY - rect.top);
  const arc = hitTest(glyphs, wx, wy);
  if (!arc) return;
  const seq = client.nextSeq();
  inFlight = true;
  try {
    const reply = await client.flip(state.current, arc);
    if (!client.isCurrent(seq)) return; // stale response, a newer call won
    await setState(applyFlip(state, reply.data), reply.data.case);
  } catch (err) {
    if (err instanceof ServiceError) {
      showError(`flip rejected (${err.status})`);
    } else {
      showError("service unreachable");
    }
  } finally {
    inFlight = false;
  }
});

undoBtn.addEventListener("click", async () => {
  await setState(undo(state), "");
});

loadBtn.addEventListener("click", async () => {
  const n = Math.max(2, Number(nInput.value) || 4);
  const a = Number(aInput.value) || 0;
  const kind = kindInput.value === "under" ? "under" : "arrow";
  const tri = generatorTri(kind, a, n);
  try {
    await client.validate(tri); // the engine stays the source of truth
    await setState(newState(tri), "");
  } catch {
    showError("generator rejected by the engine");
  }
});

pathBtn.addEventListener("click", async () => {
  if (animating) return;
  const target = generatorTri("arrow", 0, state.current.n);
  try {
    const reply = await client.path(state.current, target);
    animating = true;
    for (const step of reply.data.steps) {
      await setState(applyFlip(state, step), step.case);
      await new Promise((resolve) => window.setTimeout(resolve, 350));
    }
  } catch (err) {
    showError(err instanceof ServiceError
      ? `path rejected (${err.status})` : "service unreachable");
  } finally {
    animating = false;
    redraw();
  }
});

panLeft.addEventListener("click", () => {
  state = { ...state, params: { ...state.params, offset: state.params.offset - 1 } };
  redraw();
});

panRight.addEventListener("click", () => {
  state = { ...state, params: { ...state.params, offset: state.params.offset + 1 } };
  redraw();
});

// consistency guard: the recorded history must replay to the current state
window.addEventListener("beforeunload", () => {
  replayHistory(state.initial, state.history);
});

redraw();
void refreshPanels();
