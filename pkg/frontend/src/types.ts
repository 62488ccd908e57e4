/**
 * Wire-format types for the workflow service JSON API.
 *
 * These mirror the server's serialization exactly; nothing here is
 * computed client-side.
 */

export interface NodeDoc {
  id: string;
  type: string;                       // namespaced component id, e.g. "curve.circle"
  position: [number, number];
  state: Record<string, unknown>;
  literals: Record<string, string>;   // input index -> formatted literal
  preview: boolean;
}

export interface WireDoc {
  from: [string, number];             // [node id, output index]
  to: [string, number];               // [node id, input index]
}

export interface WorkflowDocument {
  format_version: number;
  nodes: NodeDoc[];
  wires: WireDoc[];
}

export interface SliderMeta {
  node_id: string;
  type: string;                       // params.number_slider | params.integer_slider
  min: number;
  max: number;
  value: number;
  decimals: number;
}

export interface DiagnosticJson {
  severity: 'error' | 'warning';
  code: string;
  message: string;
  line: number;
  column: number | null;
  ident: string | null;
}

export interface AttemptJson {
  script: string;
  verdict: 'accepted' | 'rejected' | 'superseded';
  diagnostics: DiagnosticJson[];
  workflow: WorkflowDocument | null;
}

export interface OutcomeJson {
  status: 'success' | 'failed';
  request: string;
  attempts: AttemptJson[];
  workflow: WorkflowDocument | null;
}

export interface SessionJson {
  session_id: string;
  revision: number;
  origin: 'prompt' | 'script' | 'file';
  evaluated: boolean;
  document: WorkflowDocument;
  sliders: SliderMeta[];
  outcome?: OutcomeJson | null;
}

export interface MeshJson {
  node_id: string;
  vertices: [number, number, number][];
  triangles: [number, number, number][];
}

export interface MeshesJson {
  revision: number;
  tol: number;
  meshes: MeshJson[];
}

export interface PatchParamsAck {
  revision: number;
  node_id: string;
  field: string;
  value: number;                      // server echo after clamping/rounding
}

export interface PatchPreviewAck {
  revision: number;
  node_id: string;
  shown: boolean;
}
