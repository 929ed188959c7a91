/**
 * Application state machine. Holds the UI model and wires every action to
 * its service call; all displayed colors, positions and word views are
 * service responses stored verbatim -- the UI never computes automata logic.
 */

import { ApiClient, ApiError } from "./api.js";
import type { AutomatonSummary, NatureKind, SessionView } from "./types.js";

export interface UiModel {
  exampleNames: string[];
  summary: AutomatonSummary | null;
  sessionId: string | null;
  view: SessionView | null;
  natureKind: NatureKind | null;
  natureStates: string[];
  running: boolean;
  error: string | null;
}

export type ChangeListener = (model: UiModel) => void;

export class AppController {
  readonly model: UiModel = {
    exampleNames: [],
    summary: null,
    sessionId: null,
    view: null,
    natureKind: null,
    natureStates: [],
    running: false,
    error: null,
  };

  private documents = new Map<string, unknown>();

  constructor(
    private readonly api: ApiClient,
    private readonly onChange: ChangeListener = () => {},
  ) {}

  private notify(): void {
    this.onChange(this.model);
  }

  /** Run an action, turning canonical service errors into an inline message. */
  private async guarded(action: () => Promise<void>): Promise<void> {
    this.model.error = null;
    try {
      await action();
    } catch (error) {
      if (error instanceof ApiError) {
        this.model.error = `${error.code}: ${error.message}`;
        this.notify();
        return;
      }
      throw error;
    }
  }

  private applySummary(summary: AutomatonSummary): void {
    this.model.summary = summary;
    // edits invalidate server sessions, so drop ours too
    this.model.sessionId = null;
    this.model.view = null;
    this.model.natureKind = null;
    this.model.natureStates = [];
    this.notify();
  }

  async refreshExamples(): Promise<void> {
    await this.guarded(async () => {
      const entries = await this.api.getExamples();
      this.documents = new Map(entries.map((e) => [e.name, e.document]));
      this.model.exampleNames = entries.map((e) => e.name);
      this.notify();
    });
  }

  async loadExample(name: string): Promise<void> {
    const document = this.documents.get(name);
    if (document === undefined) return;
    await this.guarded(async () => {
      this.applySummary(await this.api.loadAutomaton(document));
    });
  }

  async startNewAutomaton(initial: string, accept: boolean): Promise<void> {
    await this.guarded(async () => {
      this.applySummary(
        await this.api.loadAutomaton({
          initialState: initial,
          transitions: [],
          acceptStates: accept ? [initial] : [],
        }),
      );
    });
  }

  async addState(name: string, accept: boolean): Promise<void> {
    await this.guarded(async () => {
      this.applySummary(await this.api.addState(name, accept));
    });
  }

  async addTransition(from: string, symbol: string, to: string): Promise<void> {
    await this.guarded(async () => {
      this.applySummary(await this.api.addTransition(from, symbol, to));
    });
  }

  async startWord(word: string): Promise<void> {
    await this.guarded(async () => {
      const { sessionId, view } = await this.api.startSession(word);
      this.model.sessionId = sessionId;
      this.model.view = view;
      this.notify();
    });
  }

  async stepForward(): Promise<void> {
    const sessionId = this.model.sessionId;
    if (!sessionId) return;
    await this.guarded(async () => {
      this.model.view = await this.api.forward(sessionId);
      this.notify();
    });
  }

  async stepBack(): Promise<void> {
    const sessionId = this.model.sessionId;
    if (!sessionId) return;
    await this.guarded(async () => {
      this.model.view = await this.api.back(sessionId);
      this.notify();
    });
  }

  async refreshView(): Promise<void> {
    const sessionId = this.model.sessionId;
    if (!sessionId) return;
    await this.guarded(async () => {
      this.model.view = await this.api.getSession(sessionId);
      this.notify();
    });
  }

  async runAnimated(delayMs = 500): Promise<void> {
    const sessionId = this.model.sessionId;
    if (!sessionId || this.model.running) return;
    this.model.running = true;
    this.notify();
    try {
      await this.guarded(async () => {
        await this.api.run(sessionId, delayMs, (event, data) => {
          if (event === "tick" || event === "done") {
            this.model.view = data as SessionView;
            this.notify();
          }
        });
      });
    } finally {
      this.model.running = false;
      this.notify();
    }
  }

  async showNature(kind: NatureKind): Promise<void> {
    await this.guarded(async () => {
      const states = await this.api.nature(kind);
      this.model.natureKind = kind;
      this.model.natureStates = states;
      this.notify();
    });
  }

  clearNature(): void {
    this.model.natureKind = null;
    this.model.natureStates = [];
    this.notify();
  }
}
