/** Parameter panel logic: pure builders turning UI intent into protocol
 * commands, plus client-side element picking over the last render list.
 * All authoritative changes round-trip through the server. */

import { ClientMessage, RenderList, commandMessage, saveMessage } from "./protocol.js";
import { itemBounds } from "./tessellate.js";

export function setColorCommand(elementId: string, cssColor: string): ClientMessage {
  return commandMessage("setColor", [elementId, cssColor]);
}

export function setFontCommand(elementId: string, font: string): ClientMessage {
  return commandMessage("setFont", [elementId, font]);
}

export function hideCommand(elementId: string): ClientMessage {
  return commandMessage("hide", [elementId]);
}

export function showCommand(elementId: string): ClientMessage {
  return commandMessage("show", [elementId]);
}

export function zOrderCommand(elementId: string, where: "top" | "bottom"): ClientMessage {
  return commandMessage("zorder", [elementId, where]);
}

export function addCurveCommand(plotId: string, expression: string, cssColor: string): ClientMessage {
  return commandMessage("addCurve", [plotId, expression, cssColor]);
}

export function saveSceneRequest(): ClientMessage {
  return saveMessage();
}

/** Topmost element whose drawn bounds contain the point; a convenience for
 * the panel only — real grabbing is decided server-side. */
export function pickElement(list: RenderList, x: number, y: number): string | null {
  for (let i = list.items.length - 1; i >= 0; i--) {
    const item = list.items[i];
    if (!item.elementId) continue;
    const bounds = itemBounds(item);
    if (!bounds) continue;
    const [minX, minY, maxX, maxY] = bounds;
    if (x >= minX && x <= maxX && y >= minY && y <= maxY) {
      return item.elementId;
    }
  }
  return null;
}
