import { VeracityClient } from "./client.js";
import { SessionController } from "./controller.js";
import { render } from "./view.js";

const root = document.getElementById("app")!;
const client = new VeracityClient("");

const controller = new SessionController(client, async (vm) => {
  render(root, vm, {
    onHoleClick: (id) => controller.selectHole(id),
    onCandidateClick: (id) => controller.applyCandidate(id),
    onUndo: () => controller.undo(),
  });
  await refreshExports(vm.session?.complete ?? false);
});

async function refreshExports(complete: boolean) {
  const latex = document.getElementById("export-latex") as HTMLPreElement;
  const nl = document.getElementById("export-nl") as HTMLPreElement;
  if (!complete) {
    latex.textContent = "";
    nl.textContent = "";
    return;
  }
  const scale = (document.getElementById("scale") as HTMLInputElement).value || "1";
  // panes show the export endpoint's responses verbatim
  latex.textContent = (await controller.exportProof("latex", scale)) ?? "";
  nl.textContent = (await controller.exportProof("nl")) ?? "";
}

document.getElementById("start")!.addEventListener("click", () => {
  const goal = (document.getElementById("goal") as HTMLInputElement).value;
  const config = (document.getElementById("config") as HTMLTextAreaElement).value;
  controller.start(goal, config);
});
