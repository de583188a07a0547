/** Pointer-event to protocol-message mapping. Everything is moved and
 * resized only by the two mouse buttons; middle presses and anything else
 * are not part of the interaction model and map to null. */

import { Button, ClientMessage, downMessage, moveMessage, upMessage } from "./protocol.js";

export interface PointerLike {
  button: number; // DOM convention: 0 primary, 1 middle, 2 secondary
  offsetX: number;
  offsetY: number;
}

export function buttonFromDom(domButton: number): Button | null {
  if (domButton === 0) return "left";
  if (domButton === 2) return "right";
  return null;
}

export function pointerDownMessage(event: PointerLike): ClientMessage | null {
  const button = buttonFromDom(event.button);
  if (button === null) return null;
  return downMessage(event.offsetX, event.offsetY, button);
}

export function pointerMoveMessage(event: PointerLike): ClientMessage {
  return moveMessage(event.offsetX, event.offsetY);
}

export function pointerUpMessage(event: PointerLike): ClientMessage | null {
  if (buttonFromDom(event.button) === null) return null;
  return upMessage();
}

/** Map a cursor hint from the render list to a CSS cursor. */
export function cssCursor(hint: string): string {
  switch (hint) {
    case "move":
      return "move";
    case "sizeH":
      return "ew-resize";
    case "sizeV":
      return "ns-resize";
    case "sizeNWSE":
      return "nwse-resize";
    case "sizeNESW":
      return "nesw-resize";
    case "hand":
      return "pointer";
    default:
      return "default";
  }
}
