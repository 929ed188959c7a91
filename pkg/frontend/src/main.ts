/** DOM glue: binds the static panels to the controller and redraws the canvas. */

import { ApiClient } from "./api.js";
import { AppController, UiModel } from "./app.js";
import { renderGraph } from "./graph.js";

const baseUrl = new URLSearchParams(location.search).get("api") ?? "";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

const canvas = el<HTMLDivElement>("canvas");
const exampleList = el<HTMLDivElement>("example-list");
const wordViewBox = el<HTMLDivElement>("word-view");
const captionBox = el<HTMLDivElement>("caption");
const statusBox = el<HTMLDivElement>("status");
const natureBox = el<HTMLDivElement>("nature-result");

let renderedExamples = "";

function render(model: UiModel): void {
  if (model.summary) {
    try {
      canvas.innerHTML = renderGraph(
        model.summary,
        model.view?.colors ?? {},
        new Set(model.natureStates),
      );
    } catch (error) {
      canvas.innerHTML = `<p class="error-banner">cannot render automaton: ${String(error)}</p>`;
    }
  } else {
    canvas.innerHTML = '<p class="placeholder">Load an example or build an automaton.</p>';
  }

  const names = model.exampleNames.join("|");
  if (names !== renderedExamples) {
    renderedExamples = names;
    exampleList.innerHTML = "";
    for (const name of model.exampleNames) {
      const button = document.createElement("button");
      button.textContent = name;
      button.addEventListener("click", () => void controller.loadExample(name));
      exampleList.appendChild(button);
    }
  }

  wordViewBox.textContent = model.view?.wordView ?? "";
  captionBox.textContent = model.view?.caption ?? "";
  if (model.view) {
    // the word box mirrors the consumed|remaining split while stepping
    el<HTMLInputElement>("word").value = model.view.wordView;
  }
  natureBox.textContent = model.natureKind
    ? `${model.natureKind}: ${model.natureStates.join(", ") || "(none)"}`
    : "";
  statusBox.textContent = model.error ?? "";
  statusBox.classList.toggle("error", model.error !== null);

  const disabled = model.sessionId === null || model.running;
  el<HTMLButtonElement>("word-back").disabled = disabled;
  el<HTMLButtonElement>("word-forward").disabled = disabled;
  el<HTMLButtonElement>("word-run").disabled = disabled;
}

const controller = new AppController(new ApiClient(baseUrl), render);

el<HTMLButtonElement>("build-new").addEventListener("click", () => {
  const name = el<HTMLInputElement>("state-name").value;
  const accept = el<HTMLInputElement>("state-accept").checked;
  void controller.startNewAutomaton(name, accept);
});

el<HTMLButtonElement>("build-add-state").addEventListener("click", () => {
  const name = el<HTMLInputElement>("state-name").value;
  const accept = el<HTMLInputElement>("state-accept").checked;
  void controller.addState(name, accept);
});

el<HTMLButtonElement>("build-add-transition").addEventListener("click", () => {
  void controller.addTransition(
    el<HTMLInputElement>("transition-from").value,
    el<HTMLInputElement>("transition-symbol").value,
    el<HTMLInputElement>("transition-to").value,
  );
});

el<HTMLButtonElement>("word-start").addEventListener("click", () => {
  // drop the progress separator so a shown split can be re-run as typed
  const word = el<HTMLInputElement>("word").value.replaceAll("·", "");
  void controller.startWord(word);
});
el<HTMLButtonElement>("word-forward").addEventListener("click", () => void controller.stepForward());
el<HTMLButtonElement>("word-back").addEventListener("click", () => void controller.stepBack());
el<HTMLButtonElement>("word-run").addEventListener("click", () => void controller.runAnimated(500));

for (const kind of ["productive", "accessible", "useful"] as const) {
  el<HTMLButtonElement>(`nature-${kind}`).addEventListener("click", () => {
    void controller.showNature(kind);
  });
}
el<HTMLButtonElement>("nature-clear").addEventListener("click", () => controller.clearNature());

render(controller.model);
void controller.refreshExamples();
