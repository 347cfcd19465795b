/** Browser entry point. Set `window.API_BASE` (or ?api=...) to point elsewhere. */

import { HttpClient } from "./api.js";
import { mountApp } from "./app.js";

declare global {
  interface Window {
    API_BASE?: string;
  }
}

const params = new URLSearchParams(window.location.search);
const base = params.get("api") ?? window.API_BASE ?? "";
const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");
mountApp(root, new HttpClient(base), window);
