/** Wire types shared with the engine service; field names are normative. */

export type Sign = "+" | "-";

export interface HalfArc {
  type: "half";
  cross: 1 | 2;
  index: number;
  sign: Sign;
}

export interface PairArc {
  type: "pair";
  i: number;
  k: number;
}

export interface TorsArc {
  type: "tors";
  res: number;
  len: number;
}

export interface StarArc {
  type: "star";
  e1: Sign;
  e2: Sign;
}

export interface PwLoopArc {
  type: "pwloop";
  lam: [number, number];
  j: number;
}

export interface SpLoopArc {
  type: "sploop";
  lam: 1 | -1;
  j: number;
  sign: Sign;
}

export type WireArc = HalfArc | PairArc | TorsArc | StarArc | PwLoopArc | SpLoopArc;

export interface WireTri {
  n: number;
  arcs: WireArc[];
}

export interface WireFlip {
  tri: WireTri;
  removed: WireArc;
  added: WireArc;
  case: string;
}

export interface Violation {
  code: string;
  detail: string;
}

export interface CheckReport {
  ok: boolean;
  violations: Violation[];
  zeta?: [string, string];
  names?: string[];
  fv?: boolean;
  iota?: number[] | null;
}

export interface PathResponse {
  steps: WireFlip[];
}

export interface MapResponse {
  sheaf: string;
  arc: WireArc;
  equivariant: string;
}

/** Stable identity key for an arc (object equality is structural). */
export function arcKey(arc: WireArc): string {
  switch (arc.type) {
    case "half":
      return `half:${arc.cross}:${arc.index}:${arc.sign}`;
    case "pair":
      return `pair:${arc.i}:${arc.k}`;
    case "tors":
      return `tors:${arc.res}:${arc.len}`;
    case "star":
      return `star:${arc.e1}${arc.e2}`;
    case "pwloop":
      return `pwloop:${arc.lam[0]}/${arc.lam[1]}:${arc.j}`;
    case "sploop":
      return `sploop:${arc.lam}:${arc.j}:${arc.sign}`;
  }
}

export function sameArc(a: WireArc, b: WireArc): boolean {
  return arcKey(a) === arcKey(b);
}

export function triKey(tri: WireTri): string {
  return `${tri.n}|` + tri.arcs.map(arcKey).sort().join(";");
}
