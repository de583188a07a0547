import assert from "node:assert/strict";
import { test } from "node:test";

import {
  commandMessage,
  downMessage,
  encodeMessage,
  moveMessage,
  parseServerMessage,
  saveMessage,
  upMessage,
} from "../src/protocol.js";

test("client messages encode with exact field names", () => {
  assert.equal(encodeMessage(downMessage(50, 40, "left")), '{"type":"down","x":50,"y":40,"button":"left"}');
  assert.equal(encodeMessage(moveMessage(62.5, 38)), '{"type":"move","x":62.5,"y":38}');
  assert.equal(encodeMessage(upMessage()), '{"type":"up"}');
  assert.equal(
    encodeMessage(commandMessage("setColor", ["bld-1", "#c03030"])),
    '{"type":"command","name":"setColor","args":["bld-1","#c03030"]}',
  );
  assert.equal(encodeMessage(saveMessage()), '{"type":"save"}');
});

test("server messages parse by type", () => {
  const ack = parseServerMessage('{"type":"ack","seq":3,"changed":true}');
  assert.equal(ack.type, "ack");
  const list = parseServerMessage('{"type":"renderList","seq":0,"list":{"cursor":"default","items":[]}}');
  assert.equal(list.type, "renderList");
  if (list.type === "renderList") {
    assert.equal(list.list.items.length, 0);
  }
});

test("unknown server message types are rejected", () => {
  assert.throws(() => parseServerMessage('{"type":"telepathy"}'));
  assert.throws(() => parseServerMessage("{nope"));
});
