/** Options page: where the engine lives. */

import { ServiceClient } from "./api.js";
import { getServiceOrigin, setServiceOrigin } from "./storage.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

async function init(): Promise<void> {
  const input = el<HTMLInputElement>("origin");
  const status = el<HTMLDivElement>("status");
  input.value = await getServiceOrigin();

  el<HTMLButtonElement>("save").addEventListener("click", async () => {
    const origin = input.value.trim().replace(/\/+$/, "");
    if (!/^https?:\/\//.test(origin)) {
      status.textContent = "Origin must start with http:// or https://";
      return;
    }
    await setServiceOrigin(origin);
    status.textContent = "Saved. Checking…";
    try {
      const health = await new ServiceClient(origin).health();
      status.textContent =
        `Saved. Engine ok, models loaded: ${health.models_loaded.join(", ") || "none"}`;
    } catch {
      status.textContent = "Saved, but the engine did not answer at that origin.";
    }
  });
}

void init();
