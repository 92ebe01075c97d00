/** Shapes served by the proof service; the UI displays these verbatim. */

export interface Goal {
  actor: string;
  claim: string;
}

export interface HoleRef {
  id: string;
  goal: Goal;
}

export type TreeNode =
  | { kind: "hole"; id: string; goal: Goal }
  | {
      kind: "node";
      rule: string;
      label: string;
      goal: Goal;
      premises: TreeNode[];
      evidence?: string;
    };

export interface SessionState {
  id: string;
  goal: Goal;
  complete: boolean;
  holes: HoleRef[];
  tree: TreeNode;
  history_depth: number;
}

export interface Candidate {
  id: number;
  rule: string;
  label: string;
  display: string;
  premises: number;
}

export interface ProblemDetail {
  code: string;
  message: string;
  path: string;
}

export type ExportFormat = "latex" | "nl" | "machine";
