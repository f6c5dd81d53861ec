// Browser bootstrap: mount the app, populate the example picker, and
// wire the upload box.  The API base defaults to the serving origin.

import { App } from "./app.js";

function mountPicker(app: App, host: HTMLElement): void {
  const picker = document.createElement("div");
  picker.className = "picker";
  picker.innerHTML = `
    <label>example <select data-role="examples"><option value="">pick...</option></select></label>
    <details>
      <summary>upload apx</summary>
      <textarea data-role="upload-text" rows="6"
        placeholder="arg(a). arg(b). att(a,b)."></textarea>
      <button data-role="upload-btn">load</button>
    </details>`;
  host.prepend(picker);

  const select = picker.querySelector('[data-role="examples"]') as HTMLSelectElement;
  app.api.listExamples().then((examples) => {
    for (const entry of examples) {
      const option = document.createElement("option");
      option.value = entry.name;
      option.textContent = entry.name;
      select.appendChild(option);
    }
  });
  select.addEventListener("change", () => {
    if (select.value) {
      app.loadExample(select.value);
    }
  });

  const text = picker.querySelector('[data-role="upload-text"]') as HTMLTextAreaElement;
  const button = picker.querySelector('[data-role="upload-btn"]') as HTMLButtonElement;
  button.addEventListener("click", () => {
    if (text.value.trim()) {
      app.loadFrameworkText(text.value, "apx", "upload");
    }
  });
}

const root = document.getElementById("app");
if (root) {
  const base = window.location.origin;
  const app = new App(root, base);
  mountPicker(app, root);
}
