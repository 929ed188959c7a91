/** Wire formats of the workbench service. The UI stores these verbatim. */

export type ColorName = "BLUE" | "GREEN" | "RED";

export type TransitionTriple = [string, string, string];

export interface AutomatonSummary {
  states: string[];
  alphabet: string[];
  deterministic: boolean;
  initialState: string;
  acceptStates: string[];
  transitions: TransitionTriple[];
}

export interface SessionView {
  position: number;
  remaining: number;
  colors: Record<string, ColorName>;
  status: "RUNNING" | "FINISHED";
  wordView: string;
  caption: string;
  verdict?: "ACCEPTED" | "REJECTED_END" | "REJECTED_STUCK";
}

export interface ExampleEntry {
  name: string;
  document: unknown;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail?: string;
}

export type NatureKind = "productive" | "accessible" | "useful";
