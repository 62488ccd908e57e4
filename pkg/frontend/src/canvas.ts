/**
 * Node-graph canvas: a pure view model over the workflow document plus a
 * DOM renderer.
 *
 * View-model positions are the document positions verbatim; scaling to
 * screen pixels happens only at render time, so the canvas stays a pure
 * function of the document and selection.
 */

import type { SliderMeta, WorkflowDocument } from './types.js';

export interface CanvasNodeVM {
  id: string;
  nickname: string;                   // component id without its namespace
  type: string;
  position: [number, number];
  preview: boolean;
  slider: SliderMeta | null;
}

export interface CanvasWireVM {
  from: [string, number];
  to: [string, number];
}

export interface CanvasViewModel {
  nodes: CanvasNodeVM[];
  wires: CanvasWireVM[];
  selected: string | null;
}

export function buildCanvasViewModel(
  document: WorkflowDocument,
  sliders: SliderMeta[],
  selected: string | null = null,
): CanvasViewModel {
  const byNode = new Map(sliders.map((s) => [s.node_id, s]));
  return {
    nodes: document.nodes.map((node) => ({
      id: node.id,
      nickname: node.type.split('.').pop() ?? node.type,
      type: node.type,
      position: [node.position[0], node.position[1]],
      preview: node.preview,
      slider: byNode.get(node.id) ?? null,
    })),
    wires: document.wires.map((w) => ({ from: [...w.from], to: [...w.to] })),
    selected,
  };
}

export interface CanvasHandlers {
  onTogglePreview?: (nodeId: string, shown: boolean) => void;
  onSelect?: (nodeId: string) => void;
}

const SCALE = 0.9;                    // document units -> px
const NODE_W = 130;
const NODE_H = 44;

export function renderGraphCanvas(
  vm: CanvasViewModel,
  handlers: CanvasHandlers = {},
): HTMLElement {
  const root = document.createElement('div');
  root.className = 'graph-canvas';

  const positions = new Map(vm.nodes.map((n) => [n.id, n.position]));
  const svg = document.createElementNS('http://www.w3.org/2000/svg', 'svg');
  svg.classList.add('graph-wires');
  for (const wire of vm.wires) {
    const from = positions.get(wire.from[0]);
    const to = positions.get(wire.to[0]);
    if (!from || !to) continue;
    const line = document.createElementNS('http://www.w3.org/2000/svg', 'line');
    line.setAttribute('x1', String(from[0] * SCALE + NODE_W));
    line.setAttribute('y1', String(from[1] * SCALE + NODE_H / 2));
    line.setAttribute('x2', String(to[0] * SCALE));
    line.setAttribute('y2', String(to[1] * SCALE + NODE_H / 2));
    svg.appendChild(line);
  }
  root.appendChild(svg);

  for (const node of vm.nodes) {
    const box = document.createElement('div');
    box.className = 'graph-node' + (node.id === vm.selected ? ' selected' : '');
    box.dataset.nodeId = node.id;
    box.dataset.x = String(node.position[0]);
    box.dataset.y = String(node.position[1]);
    box.style.left = `${node.position[0] * SCALE}px`;
    box.style.top = `${node.position[1] * SCALE}px`;

    const title = document.createElement('span');
    title.className = 'graph-node-title';
    title.textContent = `${node.id} · ${node.nickname}`;

    const eye = document.createElement('button');
    eye.className = 'graph-node-preview';
    eye.dataset.shown = String(node.preview);
    eye.textContent = node.preview ? 'shown' : 'hidden';
    eye.addEventListener('click', (e) => {
      e.stopPropagation();
      handlers.onTogglePreview?.(node.id, !node.preview);
    });

    box.append(title, eye);
    box.addEventListener('click', () => handlers.onSelect?.(node.id));
    root.appendChild(box);
  }
  return root;
}
