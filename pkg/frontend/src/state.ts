/** Explorer view state: the current triangulation, the flip history that
 * produced it, and rendering parameters.  History is the source of truth:
 * replaying it from the initial triangulation must reproduce the current
 * one exactly, and undo recomputes the previous state from the prefix.
 */

import { arcKey, sameArc, triKey } from "./types.js";
import type { WireArc, WireFlip, WireTri } from "./types.js";

export interface RenderParams {
  liftCopies: number;
  offset: number;
}

export interface ViewState {
  initial: WireTri;
  current: WireTri;
  history: WireFlip[];
  selected: WireArc | null;
  params: RenderParams;
}

export function newState(tri: WireTri, params?: Partial<RenderParams>): ViewState {
  return {
    initial: tri,
    current: tri,
    history: [],
    selected: null,
    params: { liftCopies: 3, offset: 0, ...params },
  };
}

/** Apply one engine flip result. */
export function applyFlip(state: ViewState, flip: WireFlip): ViewState {
  const expected = stepArcs(state.current, flip);
  if (triKey(expected) !== triKey(flip.tri)) {
    throw new Error("flip result does not match the removed/added arcs");
  }
  return {
    ...state,
    current: flip.tri,
    history: [...state.history, flip],
    selected: flip.added,
  };
}

/** Drop the last flip and recompute the state it left. */
export function undo(state: ViewState): ViewState {
  if (state.history.length === 0) {
    return state;
  }
  const history = state.history.slice(0, -1);
  const current = replayHistory(state.initial, history);
  return { ...state, current, history, selected: null };
}

/** The arc set after applying a single flip's removed/added delta. */
function stepArcs(tri: WireTri, flip: WireFlip): WireTri {
  const arcs = tri.arcs.filter((a) => !sameArc(a, flip.removed));
  if (arcs.length !== tri.arcs.length - 1) {
    throw new Error(`flip removes ${arcKey(flip.removed)} which is absent`);
  }
  arcs.push(flip.added);
  return { n: tri.n, arcs };
}

/** Replay a history from the initial triangulation, checking every step
 * against the triangulation embedded in the flip record. */
export function replayHistory(initial: WireTri, history: WireFlip[]): WireTri {
  let cur = initial;
  for (const flip of history) {
    cur = stepArcs(cur, flip);
    if (triKey(cur) !== triKey(flip.tri)) {
      throw new Error("history replay diverged from the recorded state");
    }
    cur = flip.tri;
  }
  return cur;
}

/** The explicit stable generator families, used only to seed the explorer;
 * the service re-validates every seeded triangulation. */
export function generatorTri(
  kind: "arrow" | "under",
  a: number,
  n: number,
): WireTri {
  const b = -a;
  const arcs: WireArc[] = [
    { type: "half", cross: 1, index: a, sign: "+" },
    { type: "half", cross: 1, index: a, sign: "-" },
  ];
  for (let k = 1; k < n; k++) {
    const m = Math.floor(k / 2);
    let bot: number;
    if (k % 2 === 0) {
      bot = b + m;
    } else {
      bot = kind === "arrow" ? b + m : b + m + 1;
    }
    arcs.push({ type: "pair", i: bot, k });
  }
  const evenUp = n + 1 - ((n + 1) % 2); // largest even number <= n+1
  const evenDn = n - (n % 2);           // largest even number <= n
  const halfUp = evenUp / 2;
  const halfDn = evenDn / 2;
  const top = kind === "arrow" ? a + halfUp : a + halfDn;
  const bot = kind === "arrow" ? b + halfDn : b + halfUp;
  const index = top - (top + bot + n) / 2;
  arcs.push({ type: "half", cross: 2, index, sign: "+" });
  arcs.push({ type: "half", cross: 2, index, sign: "-" });
  return { n, arcs };
}
