import type { ViewModel } from "./controller.js";
import type { TreeNode } from "./types.js";

/** Pure DOM rendering of the service's view model.  Premises sit above the
 * node that concludes them, so the root is at the bottom, like the printed
 * derivations. */

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderTree(
  node: TreeNode,
  selectedHole: string | null,
  errorHole: string | null,
  onHoleClick: (id: string) => void,
): HTMLElement {
  const box = el("div", "node");
  if (node.kind === "hole") {
    const btn = el("button", "hole", `? ${node.goal.actor} : ${node.goal.claim}`);
    btn.dataset.holeId = node.id;
    if (node.id === selectedHole) btn.classList.add("selected");
    if (node.id === errorHole) btn.classList.add("error");
    btn.addEventListener("click", () => onHoleClick(node.id));
    box.append(btn);
    return box;
  }
  if (node.premises.length > 0) {
    const row = el("div", "premises");
    for (const premise of node.premises) {
      row.append(renderTree(premise, selectedHole, errorHole, onHoleClick));
    }
    box.append(row, el("div", "bar"));
  }
  const label = node.kind === "node" && node.evidence ? `${node.rule} ${node.evidence}` : node.rule;
  const line = el("div", "conclusion");
  line.append(
    el("span", "goal-text", `${node.goal.actor} : ${node.goal.claim}`),
    el("span", "rule-label", label),
  );
  box.append(line);
  return box;
}

export function render(root: HTMLElement, vm: ViewModel, actions: {
  onHoleClick: (id: string) => void;
  onCandidateClick: (id: number) => void;
  onUndo: () => void;
}): void {
  const tree = root.querySelector("#tree")!;
  const palette = root.querySelector("#palette")!;
  const status = root.querySelector("#status")!;
  tree.replaceChildren();
  palette.replaceChildren();

  if (!vm.session) {
    status.textContent = vm.error ?? "enter a goal and a configuration to begin";
    return;
  }

  tree.append(renderTree(vm.session.tree, vm.selectedHole, vm.errorHole, actions.onHoleClick));

  if (vm.selectedHole !== null) {
    if (vm.candidates.length === 0) {
      palette.append(el("p", "empty", "no applicable rules at this hole: nothing in the configuration matches its goal"));
    }
    for (const candidate of vm.candidates) {
      const btn = el("button", "candidate", candidate.display);
      btn.addEventListener("click", () => actions.onCandidateClick(candidate.id));
      palette.append(btn);
    }
  } else if (!vm.session.complete) {
    palette.append(el("p", "empty", "select a hole to see applicable rules"));
  }

  const undo = el("button", "undo", "undo");
  undo.disabled = vm.session.history_depth === 0;
  undo.addEventListener("click", actions.onUndo);
  palette.append(undo);

  status.textContent = vm.error
    ? vm.error
    : vm.session.complete
      ? "proof complete - export below"
      : `${vm.session.holes.length} open hole(s)`;
}
