/**
 * Viewport state and the software wireframe renderer.
 *
 * Mesh sets are keyed to server revisions: a snapshot is replaced
 * atomically and only ever moves forward, so a slow response for an old
 * revision can never overwrite newer geometry.
 */

import { Camera, fitCamera, wireframeSegments } from './meshmath.js';
import type { MeshJson } from './types.js';

export class ViewportStore {
  private displayed = -1;
  private current: MeshJson[] = [];
  private listeners: Array<(meshes: MeshJson[], revision: number) => void> = [];

  get revision(): number {
    return this.displayed;
  }

  get meshes(): MeshJson[] {
    return this.current;
  }

  /** Adopt a snapshot unless something newer is already on screen. */
  accept(revision: number, meshes: MeshJson[]): boolean {
    if (revision < this.displayed) return false;
    this.displayed = revision;
    this.current = meshes;
    for (const listener of this.listeners) listener(meshes, revision);
    return true;
  }

  onChange(listener: (meshes: MeshJson[], revision: number) => void): void {
    this.listeners.push(listener);
  }
}

export class ViewportView {
  camera: Camera | null = null;

  constructor(
    private readonly canvas: HTMLCanvasElement,
    store: ViewportStore,
  ) {
    store.onChange((meshes) => this.render(meshes));
    this.attachOrbit();
  }

  render(meshes: MeshJson[]): void {
    const ctx = this.canvas.getContext('2d');
    if (ctx === null) return;
    const { width, height } = this.canvas;
    if (this.camera === null) {
      this.camera = fitCamera(meshes, width, height);
    }
    this.lastMeshes = meshes;
    ctx.fillStyle = '#14161a';
    ctx.fillRect(0, 0, width, height);
    ctx.strokeStyle = '#7fd4a8';
    ctx.lineWidth = 1;
    for (const mesh of meshes) {
      ctx.beginPath();
      for (const [x1, y1, x2, y2] of wireframeSegments(mesh, this.camera, width, height)) {
        ctx.moveTo(x1, y1);
        ctx.lineTo(x2, y2);
      }
      ctx.stroke();
    }
  }

  private lastMeshes: MeshJson[] = [];

  private attachOrbit(): void {
    let dragging = false;
    let lastX = 0;
    let lastY = 0;
    this.canvas.addEventListener('mousedown', (e) => {
      dragging = true;
      lastX = e.clientX;
      lastY = e.clientY;
    });
    window.addEventListener('mouseup', () => {
      dragging = false;
    });
    window.addEventListener('mousemove', (e) => {
      if (!dragging || this.camera === null) return;
      this.camera.yaw += (e.clientX - lastX) * 0.01;
      this.camera.pitch = Math.min(
        Math.PI / 2,
        Math.max(-Math.PI / 2, this.camera.pitch + (e.clientY - lastY) * 0.01),
      );
      lastX = e.clientX;
      lastY = e.clientY;
      this.render(this.lastMeshes);
    });
    this.canvas.addEventListener('wheel', (e) => {
      if (this.camera === null) return;
      e.preventDefault();
      this.camera.zoom *= e.deltaY < 0 ? 1.1 : 1 / 1.1;
      this.render(this.lastMeshes);
    });
  }
}
