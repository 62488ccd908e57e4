import { describe, expect, test } from 'vitest';

import { boundingBox, boundingRadius, fitCamera, projectPoint, wireframeSegments } from '../src/meshmath.js';
import { ViewportStore } from '../src/viewport.js';
import type { MeshJson } from '../src/types.js';

function ring(radius: number, z: number, n = 8): MeshJson {
  const vertices: [number, number, number][] = [];
  for (let i = 0; i < n; i++) {
    const a = (2 * Math.PI * i) / n;
    vertices.push([radius * Math.cos(a), radius * Math.sin(a), z]);
  }
  return { node_id: 'ring', vertices, triangles: [] };
}

describe('ViewportStore revision gating', () => {
  test('stale snapshots never overwrite newer geometry', () => {
    const store = new ViewportStore();
    const events: number[] = [];
    store.onChange((_, revision) => events.push(revision));

    expect(store.accept(0, [ring(1, 0)])).toBe(true);
    expect(store.accept(2, [ring(2, 0)])).toBe(true);
    expect(store.accept(1, [ring(9, 0)])).toBe(false);

    expect(store.revision).toBe(2);
    expect(boundingRadius(store.meshes[0]!)).toBeCloseTo(2, 12);
    expect(events).toEqual([0, 2]);
  });

  test('a snapshot for the displayed revision replaces atomically', () => {
    const store = new ViewportStore();
    store.accept(3, [ring(1, 0)]);
    expect(store.accept(3, [ring(4, 0), ring(5, 0)])).toBe(true);
    expect(store.meshes).toHaveLength(2);
  });
});

describe('mesh math', () => {
  test('bounding radius is the largest distance from the z axis', () => {
    expect(boundingRadius(ring(5, 3))).toBeCloseTo(5, 12);
    expect(boundingRadius({ node_id: 'x', vertices: [], triangles: [] })).toBe(0);
  });

  test('bounding box spans all meshes', () => {
    const bounds = boundingBox([ring(2, -1), ring(1, 7)])!;
    expect(bounds.min[2]).toBe(-1);
    expect(bounds.max[2]).toBe(7);
    expect(bounds.max[0]).toBeCloseTo(2, 12);
  });

  test('fitted camera centers the scene target', () => {
    const camera = fitCamera([ring(2, 0), ring(2, 10)], 640, 480);
    expect(camera.target[2]).toBeCloseTo(5, 12);
    expect(camera.zoom).toBeGreaterThan(0);
  });

  test('front view projects x right and z up', () => {
    const camera = { yaw: 0, pitch: Math.PI / 2, zoom: 1, target: [0, 0, 0] as [number, number, number] };
    const [sx, sy] = projectPoint([3, 0, 4], camera, 200, 200);
    expect(sx).toBeCloseTo(103, 9);
    expect(sy).toBeCloseTo(96, 9);
  });

  test('faceless meshes draw as a closed loop, faceted ones as unique edges', () => {
    const camera = { yaw: 0, pitch: 0, zoom: 1, target: [0, 0, 0] as [number, number, number] };
    expect(wireframeSegments(ring(1, 0, 6), camera, 100, 100)).toHaveLength(6);

    const quad: MeshJson = {
      node_id: 'q',
      vertices: [[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0]],
      triangles: [[0, 1, 2], [0, 2, 3]],
    };
    // 6 triangle edges, one shared
    expect(wireframeSegments(quad, camera, 100, 100)).toHaveLength(5);
  });
});
