/**
 * Pure mesh geometry helpers for the viewport: bounds, camera, and the
 * orthographic projection used by the software wireframe renderer.
 */

import type { MeshJson } from './types.js';

export interface Camera {
  yaw: number;                        // radians around +z
  pitch: number;                      // radians around the screen x axis
  zoom: number;                       // screen pixels per model unit
  target: [number, number, number];
}

/** Largest distance of any vertex from the z axis. */
export function boundingRadius(mesh: MeshJson): number {
  let best = 0;
  for (const [x, y] of mesh.vertices) {
    const r = Math.hypot(x, y);
    if (r > best) best = r;
  }
  return best;
}

export interface Bounds {
  min: [number, number, number];
  max: [number, number, number];
}

export function boundingBox(meshes: MeshJson[]): Bounds | null {
  let bounds: Bounds | null = null;
  for (const mesh of meshes) {
    for (const v of mesh.vertices) {
      if (bounds === null) {
        bounds = { min: [...v], max: [...v] };
        continue;
      }
      for (let axis = 0; axis < 3; axis++) {
        if (v[axis]! < bounds.min[axis]!) bounds.min[axis] = v[axis]!;
        if (v[axis]! > bounds.max[axis]!) bounds.max[axis] = v[axis]!;
      }
    }
  }
  return bounds;
}

/** Camera centered on the scene, zoomed so it fits a viewport of the given size. */
export function fitCamera(meshes: MeshJson[], width: number, height: number): Camera {
  const bounds = boundingBox(meshes);
  if (bounds === null) {
    return { yaw: -Math.PI / 4, pitch: Math.PI / 5, zoom: 1, target: [0, 0, 0] };
  }
  const target: [number, number, number] = [
    (bounds.min[0] + bounds.max[0]) / 2,
    (bounds.min[1] + bounds.max[1]) / 2,
    (bounds.min[2] + bounds.max[2]) / 2,
  ];
  const spanX = bounds.max[0] - bounds.min[0];
  const spanY = bounds.max[1] - bounds.min[1];
  const spanZ = bounds.max[2] - bounds.min[2];
  const radius = Math.max(Math.hypot(spanX, spanY, spanZ) / 2, 1e-9);
  const zoom = (0.45 * Math.min(width, height)) / radius;
  return { yaw: -Math.PI / 4, pitch: Math.PI / 5, zoom, target };
}

/** Model space -> screen space; +z up on screen before pitch. */
export function projectPoint(
  v: [number, number, number],
  camera: Camera,
  width: number,
  height: number,
): [number, number, number] {
  const x = v[0] - camera.target[0];
  const y = v[1] - camera.target[1];
  const z = v[2] - camera.target[2];
  const cy = Math.cos(camera.yaw);
  const sy = Math.sin(camera.yaw);
  const rx = x * cy - y * sy;
  const ry = x * sy + y * cy;
  const cp = Math.cos(camera.pitch);
  const sp = Math.sin(camera.pitch);
  const upY = ry * cp + z * sp;       // screen-vertical component
  const depth = -ry * sp + z * cp;
  return [width / 2 + rx * camera.zoom, height / 2 - upY * camera.zoom, depth];
}

export type Segment = [number, number, number, number];

/**
 * Wireframe edges of a mesh in screen space. Faceted meshes contribute
 * their unique triangle edges; faceless meshes (tessellated curves) are
 * drawn as a closed vertex loop.
 */
export function wireframeSegments(
  mesh: MeshJson,
  camera: Camera,
  width: number,
  height: number,
): Segment[] {
  const projected = mesh.vertices.map((v) => projectPoint(v, camera, width, height));
  const segments: Segment[] = [];
  const push = (a: number, b: number) => {
    const p = projected[a]!;
    const q = projected[b]!;
    segments.push([p[0], p[1], q[0], q[1]]);
  };
  if (mesh.triangles.length === 0) {
    const n = mesh.vertices.length;
    for (let i = 0; i < n; i++) push(i, (i + 1) % n);
    return segments;
  }
  const seen = new Set<string>();
  for (const [a, b, c] of mesh.triangles) {
    for (const [lo, hi] of [[a, b], [b, c], [c, a]] as const) {
      const key = lo < hi ? `${lo}-${hi}` : `${hi}-${lo}`;
      if (!seen.has(key)) {
        seen.add(key);
        push(lo, hi);
      }
    }
  }
  return segments;
}
