import { ApiError } from "./client.js";
import type { Candidate, ExportFormat, SessionState } from "./types.js";

/** The slice of the client the controller needs; tests substitute a stub. */
export interface Transport {
  createSession(goal: string, config: string): Promise<SessionState>;
  getSession(id: string): Promise<SessionState>;
  rules(id: string, holeId: string): Promise<Candidate[]>;
  apply(id: string, holeId: string, candidate: number): Promise<SessionState>;
  undo(id: string): Promise<SessionState>;
  exportProof(id: string, format: ExportFormat, scale?: string): Promise<string>;
}

export interface ViewModel {
  session: SessionState | null;
  selectedHole: string | null;
  candidates: Candidate[];
  error: string | null;
  errorHole: string | null;
}

/** Session state machine.  Optimistic updates are deliberately absent:
 * every mutation round-trips to the service, and the view model only ever
 * caches what the service returned. */
export class SessionController {
  private vm: ViewModel = {
    session: null,
    selectedHole: null,
    candidates: [],
    error: null,
    errorHole: null,
  };

  constructor(
    private transport: Transport,
    private onChange: (vm: ViewModel) => void = () => {},
  ) {}

  get state(): ViewModel {
    return this.vm;
  }

  private emit(patch: Partial<ViewModel>) {
    this.vm = { ...this.vm, ...patch };
    this.onChange(this.vm);
  }

  private async guard<T>(holeId: string | null, action: () => Promise<T>): Promise<T | null> {
    try {
      const out = await action();
      return out;
    } catch (err) {
      const message = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
      this.emit({ error: message, errorHole: holeId });
      return null;
    }
  }

  async start(goal: string, config: string): Promise<void> {
    const session = await this.guard(null, () => this.transport.createSession(goal, config));
    if (session) {
      this.emit({ session, selectedHole: null, candidates: [], error: null, errorHole: null });
    }
  }

  /** Re-fetch the session; reloading the page reproduces the same view. */
  async refresh(): Promise<void> {
    if (!this.vm.session) return;
    const session = await this.guard(null, () => this.transport.getSession(this.vm.session!.id));
    if (session) this.emit({ session });
  }

  async selectHole(holeId: string): Promise<void> {
    if (!this.vm.session) return;
    const candidates = await this.guard(holeId, () =>
      this.transport.rules(this.vm.session!.id, holeId),
    );
    if (candidates) {
      this.emit({ selectedHole: holeId, candidates, error: null, errorHole: null });
    }
  }

  async applyCandidate(candidateId: number): Promise<void> {
    const { session, selectedHole } = this.vm;
    if (!session || selectedHole === null) return;
    const next = await this.guard(selectedHole, () =>
      this.transport.apply(session.id, selectedHole, candidateId),
    );
    if (next) {
      this.emit({ session: next, selectedHole: null, candidates: [], error: null, errorHole: null });
    }
  }

  async undo(): Promise<void> {
    if (!this.vm.session) return;
    const next = await this.guard(null, () => this.transport.undo(this.vm.session!.id));
    if (next) {
      this.emit({ session: next, selectedHole: null, candidates: [], error: null, errorHole: null });
    }
  }

  async exportProof(format: ExportFormat, scale = "1"): Promise<string | null> {
    if (!this.vm.session) return null;
    return this.guard(null, () => this.transport.exportProof(this.vm.session!.id, format, scale));
  }
}
