/**
 * End-to-end against a real service process: replayed generation, slider
 * drags with coalescing, revision-gated meshes, and preview toggles, all
 * through the HTTP API only.
 */
import { spawn, type ChildProcess } from 'node:child_process';
import { afterAll, beforeAll, describe, expect, test } from 'vitest';

import { WorkflowApi } from '../src/api.js';
import { buildCanvasViewModel, renderGraphCanvas } from '../src/canvas.js';
import { boundingRadius } from '../src/meshmath.js';
import { renderOutcome } from '../src/prompt.js';
import { SliderDriver } from '../src/sliders.js';
import { ViewportStore } from '../src/viewport.js';
import type { SessionJson } from '../src/types.js';

const PORT = 7700 + (process.pid % 250);
const API = new WorkflowApi(`http://127.0.0.1:${PORT}`);

// requests must match the recorded transcripts byte for byte
const TOWER_PROMPT =
  "I need a workflow to draw a closed round tower with each layer as a closed cylinder at a constant height. Each layer's base circle reduces the radius by a continuous reduction factor compared to the layer below. Include number sliders for the bottom circle radius (20 to 200, default 100, accuracy to the tenth), the height of each layer (1 to 20, default 10, accuracy to the hundredth), the total number of layers (1 to 20, default 10), and the reduction factor (0.1 to 1.0, default 0.75, accuracy to the thousandth).";
const SQUARES_PROMPT =
  "I need a workflow to draw a multilayer tower. Each layer is a closed, regular square prism with a constant height. The layers are based on a series of concentric squares, each rotated at constant angles and decreasing in size from the nearest outer square, with vertices always positioned at the edges of the nearest outer square. (Nested Squares) Include number sliders to control the bottom square's radius (20 to 200, default 100, accuracy to the tenth), layer height (1 to 20, default 10, accuracy to the hundredth), total layers (1 to 20, default 10), and control layer rotation (0 to 0.5, default 0.25, thousandth accuracy) for degrees between 0 and 90.";
const SQUARES_FOLLOWUP =
  "Each layer's square must shrink, not just rotate: rotate layer k by k times the slider angle and scale its radius by 1 / (cos(angle) + sin(angle)) per layer, so every vertex of a square lands exactly on an edge of the square below.";

let server: ChildProcess;

beforeAll(async () => {
  server = spawn('graphflow', ['serve', '--host', '127.0.0.1', '--port', String(PORT)], {
    stdio: 'ignore',
  });
  const deadline = Date.now() + 40000;
  for (;;) {
    try {
      const response = await fetch(`http://127.0.0.1:${PORT}/components/docs`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) throw new Error('service did not come up');
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
});

afterAll(() => {
  server?.kill('SIGTERM');
});

async function towerSession(): Promise<SessionJson> {
  return API.createFromPrompt(TOWER_PROMPT, { replay: 'test3_namespace_slip' });
}

describe('replayed generation', () => {
  test('attempts and their diagnostics render for the bundled transcript', async () => {
    const session = await towerSession();
    expect(session.outcome?.status).toBe('success');
    expect(session.outcome?.attempts.map((a) => a.verdict)).toEqual(['rejected', 'accepted']);

    const el = renderOutcome(session.outcome!);
    document.body.replaceChildren(el);
    const diagnostic = el.querySelector<HTMLElement>('.diagnostic.error')!;
    expect(diagnostic.dataset.code).toBe('UnknownComponent');
    expect(el.querySelectorAll('.attempt')).toHaveLength(2);
  });

  test('canvas node positions equal the workflow document positions', async () => {
    const session = await towerSession();
    const vm = buildCanvasViewModel(session.document, session.sliders);
    expect(vm.nodes.map((n) => [n.id, ...n.position]))
      .toEqual(session.document.nodes.map((n) => [n.id, ...n.position]));

    const el = renderGraphCanvas(vm);
    for (const node of session.document.nodes) {
      const box = el.querySelector<HTMLElement>(`[data-node-id="${node.id}"]`)!;
      expect(Number(box.dataset.x)).toBe(node.position[0]);
      expect(Number(box.dataset.y)).toBe(node.position[1]);
    }
  });
});

describe('slider interaction', () => {
  test('reduction drag coalesces PATCHes and lands every layer radius', async () => {
    const session = await towerSession();
    const id = session.session_id;
    const store = new ViewportStore();

    await API.patchParam(id, 'radius', 'value', 200);

    const sent: number[] = [];
    const driver = new SliderDriver(async (value) => {
      sent.push(value);
      const ack = await API.patchParam(id, 'reduction', 'value', value);
      const meshes = await API.getMeshes(id);
      store.accept(meshes.revision, meshes.meshes);
      expect(ack.value).toBeCloseTo(value, 9);
    });

    for (const value of [0.7, 0.65, 0.6, 0.55]) driver.set(value);
    await driver.whenIdle();

    expect(sent).toEqual([0.7, 0.55]);        // trailing-edge coalescing
    expect(store.revision).toBe(3);           // radius + two reduction PATCHes
    expect(store.meshes).toHaveLength(10);
    store.meshes.forEach((mesh, k) => {
      expect(Math.abs(boundingRadius(mesh) - 200 * 0.55 ** k)).toBeLessThanOrEqual(0.1);
    });
  });

  test('reduction 1.0 gives a straight stack', async () => {
    const session = await towerSession();
    await API.patchParam(session.session_id, 'reduction', 'value', 1.0);
    const meshes = await API.getMeshes(session.session_id);
    expect(meshes.meshes).toHaveLength(10);
    for (const mesh of meshes.meshes) {
      expect(Math.abs(boundingRadius(mesh) - 100)).toBeLessThanOrEqual(0.1);
    }
  });

  test('out-of-range values come back clamped', async () => {
    const session = await towerSession();
    const ack = await API.patchParam(session.session_id, 'radius', 'value', 99999);
    expect(ack.value).toBe(200);
  });
});

describe('nested squares via follow-up replay', () => {
  test('rotation slider to zero collapses the layers to one footprint', async () => {
    const session = await API.createFromPrompt(
      SQUARES_PROMPT,
      { replay: 'test4_slider_syntax' },
      {},
      [SQUARES_FOLLOWUP],
    );
    expect(session.outcome?.attempts.map((a) => a.verdict))
      .toEqual(['superseded', 'rejected', 'accepted']);
    const slipCodes = session.outcome!.attempts[1]!.diagnostics.map((d) => d.code);
    expect(slipCodes).toContain('SliderMisuse');

    await API.patchParam(session.session_id, 'rotation', 'value', 0);
    const { meshes } = await API.getMeshes(session.session_id);
    expect(meshes).toHaveLength(10);

    const footprint = (mesh: (typeof meshes)[number]) =>
      mesh.vertices
        .map(([x, y]) => `${x.toFixed(6)},${y.toFixed(6)}`)
        .sort()
        .filter((v, i, all) => i === 0 || v !== all[i - 1])
        .join(' ');
    const first = footprint(meshes[0]!);
    for (const mesh of meshes) {
      expect(Math.abs(boundingRadius(mesh) - 100)).toBeLessThanOrEqual(1e-6);
      expect(footprint(mesh)).toBe(first);
    }
  });
});

describe('preview toggles', () => {
  test('showing an intermediate node adds its meshes, hiding removes them', async () => {
    const session = await towerSession();
    const id = session.session_id;
    expect((await API.getMeshes(id)).meshes).toHaveLength(10);

    await API.patchPreview(id, 'rings', true);
    const shown = await API.getMeshes(id);
    expect(shown.meshes).toHaveLength(20);
    expect(new Set(shown.meshes.map((m) => m.node_id))).toEqual(new Set(['rings', 'cylinders']));

    const refreshed = await API.getWorkflow(id);
    expect(refreshed.document.nodes.find((n) => n.id === 'rings')?.preview).toBe(true);

    await API.patchPreview(id, 'rings', false);
    expect((await API.getMeshes(id)).meshes).toHaveLength(10);
  });
});
