/** Render fidelity: the client's rasterization of a demo render list must
 * match the server's SVG export (parsed and rasterized through the same
 * tessellation) within 0.5% differing pixels. */

import assert from "node:assert/strict";
import { test } from "node:test";
import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { rasterizeItems, pixelDiffRatio } from "../src/raster.js";
import { parseSvg } from "../src/svgparse.js";
import { RenderList } from "../src/protocol.js";

const WIDTH = 1024;
const HEIGHT = 768;

const RENDER_LIST_SNIPPET = `
import json, sys
from movescene.demos import DEMO_BUILDERS
from movescene.render import build_render_list
print(json.dumps(build_render_list(DEMO_BUILDERS[sys.argv[1]]())))
`;

function serverArtifacts(demo: string): { list: RenderList; svg: string } {
  const dir = mkdtempSync(join(tmpdir(), "movescene-fidelity-"));
  try {
    const sceneFile = join(dir, `${demo}.scene.json`);
    const svgFile = join(dir, `${demo}.svg`);
    execFileSync("python3", ["-m", "movescene.cli", "new-demo", demo, "--out", sceneFile]);
    execFileSync("python3", ["-m", "movescene.cli", "export-svg", "--scene", sceneFile, "--out", svgFile]);
    const listJson = execFileSync("python3", ["-c", RENDER_LIST_SNIPPET, demo], { encoding: "utf-8" });
    return { list: JSON.parse(listJson) as RenderList, svg: readFileSync(svgFile, "utf-8") };
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

for (const demo of ["village", "personaldata", "funcview"]) {
  test(`client raster matches server SVG for ${demo}`, () => {
    const { list, svg } = serverArtifacts(demo);
    assert.ok(list.items.length > 0);
    const clientSide = rasterizeItems(list.items, WIDTH, HEIGHT);
    const serverSide = rasterizeItems(parseSvg(svg), WIDTH, HEIGHT);
    const ratio = pixelDiffRatio(clientSide, serverSide);
    assert.ok(ratio <= 0.005, `${demo}: ${(ratio * 100).toFixed(3)}% pixels differ`);
  });
}
