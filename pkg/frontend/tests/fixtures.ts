import { readFileSync } from "node:fs";

import type { AutomatonSummary, SessionView } from "../src/types.js";

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(new URL(`./fixtures/${name}`, import.meta.url), "utf8")) as T;
}

export function fixtureText(name: string): string {
  return readFileSync(new URL(`./fixtures/${name}`, import.meta.url), "utf8");
}

export const summaryM1 = () => fixture<AutomatonSummary>("summary_example1DFA.json");
export const summaryTrap = () => fixture<AutomatonSummary>("summary_trap.json");
export const viewsAba = () => fixture<SessionView[]>("views_aba.json");
export const viewsAbaa = () => fixture<SessionView[]>("views_abaa.json");
export const natureTrap = () =>
  fixture<Record<"productive" | "accessible" | "useful", string[]>>("nature_trap.json");
