/** Browser entry point: connect the WebSocket session, paint render lists,
 * forward pointer events, and wire the parameter panel. */

import { parseServerMessage, encodeMessage, RenderList, ClientMessage } from "./protocol.js";
import { pointerDownMessage, pointerMoveMessage, pointerUpMessage, cssCursor } from "./pointer.js";
import { renderFrame } from "./render.js";
import {
  addCurveCommand,
  hideCommand,
  pickElement,
  saveSceneRequest,
  setColorCommand,
  setFontCommand,
  showCommand,
  zOrderCommand,
} from "./panel.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
}

function start(): void {
  const canvas = byId<HTMLCanvasElement>("scene");
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("no 2d context");
  const status = byId<HTMLSpanElement>("status");
  const selectedLabel = byId<HTMLSpanElement>("selected");
  const banner = byId<HTMLDivElement>("banner");

  let lastList: RenderList = { cursor: "default", items: [] };
  let selected: string | null = null;
  let dragging = false;

  const socket = new WebSocket(`ws://${location.host}/ws`);

  const send = (message: ClientMessage | null) => {
    if (message && socket.readyState === WebSocket.OPEN) {
      socket.send(encodeMessage(message));
    }
  };

  socket.onmessage = (event) => {
    const message = parseServerMessage(String(event.data));
    if (message.type === "renderList") {
      lastList = message.list;
      renderFrame(ctx, lastList, canvas.width, canvas.height);
      canvas.style.cursor = cssCursor(lastList.cursor);
    } else if (message.type === "error") {
      status.textContent = message.message;
    } else if (message.type === "scene") {
      const blob = new Blob([message.doc], { type: "application/json" });
      const link = document.createElement("a");
      link.href = URL.createObjectURL(blob);
      link.download = "saved.scene.json";
      link.click();
      status.textContent = "scene saved";
    } else if (message.type === "ack" && message.changed) {
      status.textContent = "";
    }
  };
  socket.onclose = () => {
    banner.textContent = "session closed — reload to reconnect";
    banner.style.display = "block";
  };

  canvas.addEventListener("contextmenu", (e) => e.preventDefault());
  canvas.addEventListener("pointerdown", (e) => {
    const message = pointerDownMessage(e);
    if (!message) return; // middle button and friends are not in the model
    dragging = true;
    selected = pickElement(lastList, e.offsetX, e.offsetY);
    selectedLabel.textContent = selected ?? "(none)";
    send(message);
  });
  canvas.addEventListener("pointermove", (e) => {
    if (dragging) send(pointerMoveMessage(e));
  });
  canvas.addEventListener("pointerup", (e) => {
    if (!dragging) return;
    dragging = false;
    send(pointerUpMessage(e));
  });

  const withSelection = (make: (id: string) => ClientMessage) => () => {
    if (!selected) {
      status.textContent = "click an element first";
      return;
    }
    send(make(selected));
  };

  byId<HTMLInputElement>("color").addEventListener("change", (e) => {
    const value = (e.target as HTMLInputElement).value;
    withSelection((id) => setColorCommand(id, value))();
  });
  byId<HTMLButtonElement>("apply-font").addEventListener(
    "click",
    () => withSelection((id) => setFontCommand(id, byId<HTMLInputElement>("font").value))(),
  );
  byId<HTMLButtonElement>("hide").addEventListener("click", withSelection(hideCommand));
  byId<HTMLButtonElement>("show").addEventListener("click", withSelection(showCommand));
  byId<HTMLButtonElement>("to-top").addEventListener("click", withSelection((id) => zOrderCommand(id, "top")));
  byId<HTMLButtonElement>("to-bottom").addEventListener("click", withSelection((id) => zOrderCommand(id, "bottom")));
  byId<HTMLButtonElement>("save").addEventListener("click", () => send(saveSceneRequest()));
  byId<HTMLButtonElement>("add-curve").addEventListener("click", () => {
    const plot = byId<HTMLInputElement>("curve-plot").value.trim();
    const expression = byId<HTMLInputElement>("curve-expr").value.trim();
    if (plot && expression) {
      send(addCurveCommand(plot, expression, byId<HTMLInputElement>("color").value));
    }
  });
}

window.addEventListener("load", start);
