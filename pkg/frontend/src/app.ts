/**
 * Application assembly: one session at a time, three panes.
 *
 * Prompt pane creates sessions (LLM or raw script), the graph pane mirrors
 * the workflow document, and the viewport shows revision-gated meshes with
 * one slider driver per stateful node.
 */

import { WorkflowApi } from './api.js';
import { buildCanvasViewModel, renderGraphCanvas } from './canvas.js';
import { PromptPanel } from './prompt.js';
import { renderSlider, SliderDriver } from './sliders.js';
import { ViewportStore, ViewportView } from './viewport.js';
import type { SessionJson } from './types.js';

export class Studio {
  readonly store = new ViewportStore();
  private sessionId: string | null = null;
  private session: SessionJson | null = null;

  constructor(
    private readonly api: WorkflowApi,
    private readonly graphPane: HTMLElement,
    private readonly sliderPane: HTMLElement,
    private readonly statusLine: HTMLElement,
  ) {}

  async loadSession(session: SessionJson): Promise<void> {
    this.session = session;
    this.sessionId = session.session_id;
    this.renderGraph();
    this.renderSliders();
    this.statusLine.textContent =
      `session ${session.session_id} · revision ${session.revision}`;
    if (session.evaluated) await this.refreshMeshes();
  }

  async refreshMeshes(): Promise<void> {
    if (this.sessionId === null) return;
    const data = await this.api.getMeshes(this.sessionId);
    this.store.accept(data.revision, data.meshes);
    this.statusLine.textContent = `session ${this.sessionId} · revision ${data.revision}`;
  }

  private renderGraph(): void {
    if (this.session === null) return;
    const vm = buildCanvasViewModel(this.session.document, this.session.sliders);
    const canvas = renderGraphCanvas(vm, {
      onTogglePreview: (nodeId, shown) => void this.togglePreview(nodeId, shown),
    });
    this.graphPane.replaceChildren(canvas);
  }

  private async togglePreview(nodeId: string, shown: boolean): Promise<void> {
    if (this.sessionId === null) return;
    await this.api.patchPreview(this.sessionId, nodeId, shown);
    // the document is server truth; re-read it rather than patching locally
    this.session = await this.api.getWorkflow(this.sessionId);
    this.renderGraph();
    await this.refreshMeshes();
  }

  private renderSliders(): void {
    if (this.session === null) return;
    this.sliderPane.replaceChildren();
    for (const meta of this.session.sliders) {
      const driver = new SliderDriver(async (value) => {
        if (this.sessionId === null) return;
        const ack = await this.api.patchParam(this.sessionId, meta.node_id, 'value', value);
        handle.showValue(ack.value);
        await this.refreshMeshes();
      });
      const handle = renderSlider(meta, (value) => driver.set(value));
      this.sliderPane.appendChild(handle.root);
    }
  }
}

export function mount(root: HTMLElement, api: WorkflowApi): Studio {
  const promptPane = document.createElement('div');
  promptPane.className = 'pane pane-prompt';
  const graphPane = document.createElement('div');
  graphPane.className = 'pane pane-graph';
  const rightPane = document.createElement('div');
  rightPane.className = 'pane pane-viewport';

  const canvas = document.createElement('canvas');
  canvas.width = 640;
  canvas.height = 480;
  const sliderPane = document.createElement('div');
  sliderPane.className = 'slider-pane';
  const statusLine = document.createElement('p');
  statusLine.className = 'status-line';
  statusLine.textContent = 'no session';
  rightPane.append(canvas, sliderPane, statusLine);

  const studio = new Studio(api, graphPane, sliderPane, statusLine);
  new ViewportView(canvas, studio.store);

  const panel = new PromptPanel(api, {
    provider: { replay: 'test3_namespace_slip' },
    onSession: (session) => void studio.loadSession(session),
  });
  promptPane.appendChild(panel.root);

  // raw script entry for driving the service without a language model
  const scriptBox = document.createElement('details');
  const scriptSummary = document.createElement('summary');
  scriptSummary.textContent = 'Run a script directly';
  const scriptArea = document.createElement('textarea');
  scriptArea.placeholder = 'add params.number_slider r { min: 2, max: 20 }...';
  const scriptRun = document.createElement('button');
  scriptRun.textContent = 'Run script';
  scriptRun.addEventListener('click', () => {
    void api
      .createFromScript(scriptArea.value)
      .then((session) => studio.loadSession(session))
      .catch((error) => {
        statusLine.textContent = `script rejected: ${error}`;
      });
  });
  scriptBox.append(scriptSummary, scriptArea, scriptRun);
  promptPane.appendChild(scriptBox);

  root.append(promptPane, graphPane, rightPane);
  return studio;
}

declare global {
  interface Window {
    studio?: Studio;
  }
}

if (typeof document !== 'undefined' && document.getElementById('app') !== null) {
  const params = new URLSearchParams(window.location.search);
  const base = params.get('api') ?? 'http://localhost:7878';
  window.studio = mount(document.getElementById('app')!, new WorkflowApi(base));
}
