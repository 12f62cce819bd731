import { ApiClient } from "./api.js";
import { App } from "./app.js";

const root = document.getElementById("app");
if (root) {
  const api = new ApiClient("");
  const app = new App(root, api);
  app.render();

  const loader = document.getElementById("repository-file");
  loader?.addEventListener("change", async () => {
    const file = (loader as HTMLInputElement).files?.[0];
    if (!file) return;
    const document_ = JSON.parse(await file.text());
    app.state.sessionId = await api.createSession(document_);
    await app.refresh();
  });
}
