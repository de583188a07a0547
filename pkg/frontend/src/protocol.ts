/** Message schema of the scene session protocol (one JSON object per
 * WebSocket text frame). The client holds no authoritative state: it sends
 * pointer events and commands, and repaints whatever render list arrives. */

export type Button = "left" | "right";

export interface RenderItem {
  kind: string;
  elementId?: string;
  points?: [number, number][];
  center?: [number, number];
  radius?: number;
  startAngle?: number;
  sweep?: number;
  innerRadius?: number | null;
  position?: [number, number];
  text?: string;
  font?: string;
  color?: string | null;
  fill?: string | null;
  stroke?: string | null;
  strokeWidth?: number;
}

export interface RenderList {
  cursor: string;
  items: RenderItem[];
}

export type ServerMessage =
  | { type: "renderList"; seq: number; list: RenderList }
  | { type: "ack"; seq: number; changed: boolean }
  | { type: "scene"; seq: number; doc: string }
  | { type: "error"; seq: number; message: string };

export type ClientMessage =
  | { type: "down"; x: number; y: number; button: Button }
  | { type: "move"; x: number; y: number }
  | { type: "up" }
  | { type: "command"; name: string; args: string[] }
  | { type: "save" };

export function downMessage(x: number, y: number, button: Button): ClientMessage {
  return { type: "down", x, y, button };
}

export function moveMessage(x: number, y: number): ClientMessage {
  return { type: "move", x, y };
}

export function upMessage(): ClientMessage {
  return { type: "up" };
}

export function commandMessage(name: string, args: string[]): ClientMessage {
  return { type: "command", name, args };
}

export function saveMessage(): ClientMessage {
  return { type: "save" };
}

export function encodeMessage(message: ClientMessage): string {
  return JSON.stringify(message);
}

const SERVER_TYPES = new Set(["renderList", "ack", "scene", "error"]);

export function parseServerMessage(text: string): ServerMessage {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (err) {
    throw new Error(`unparseable server message: ${err}`);
  }
  const message = raw as { type?: string };
  if (!message || typeof message.type !== "string" || !SERVER_TYPES.has(message.type)) {
    throw new Error(`unknown server message type: ${message?.type}`);
  }
  return raw as ServerMessage;
}
