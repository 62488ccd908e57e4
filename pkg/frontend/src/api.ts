/**
 * Thin typed client over the workflow service HTTP API.
 *
 * Every model mutation goes through here; the client never edits geometry
 * or documents locally.
 */

import type {
  MeshesJson,
  PatchParamsAck,
  PatchPreviewAck,
  SessionJson,
} from './types.js';

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: unknown,
  ) {
    super(`HTTP ${status}: ${typeof detail === 'string' ? detail : JSON.stringify(detail)}`);
    this.name = 'ApiError';
  }
}

export interface ProviderSpec {
  replay?: string;                    // bundled transcript name or path on the server
  endpoint?: string;
  model?: string;
}

export class WorkflowApi {
  constructor(readonly baseUrl: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      headers: { 'content-type': 'application/json', accept: 'application/json' },
      ...init,
    });
    const body = response.status === 204 ? null : await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, (body as { detail?: unknown })?.detail ?? body);
    }
    return body as T;
  }

  createFromScript(script: string, evaluate = true): Promise<SessionJson> {
    return this.request('/workflows', {
      method: 'POST',
      body: JSON.stringify({ script, evaluate }),
    });
  }

  createFromPrompt(
    prompt: string,
    provider: ProviderSpec,
    config: Record<string, unknown> = {},
    followups: string[] = [],
  ): Promise<SessionJson> {
    return this.request('/workflows', {
      method: 'POST',
      body: JSON.stringify({ prompt, provider, config, followups }),
    });
  }

  getWorkflow(sessionId: string): Promise<SessionJson> {
    return this.request(`/workflows/${sessionId}`);
  }

  patchParam(
    sessionId: string,
    nodeId: string,
    field: string,
    value: number,
    revision?: number,
  ): Promise<PatchParamsAck> {
    return this.request(`/workflows/${sessionId}/params`, {
      method: 'PATCH',
      body: JSON.stringify({ node_id: nodeId, field, value, revision: revision ?? null }),
    });
  }

  patchPreview(sessionId: string, nodeId: string, shown: boolean): Promise<PatchPreviewAck> {
    return this.request(`/workflows/${sessionId}/preview`, {
      method: 'PATCH',
      body: JSON.stringify({ node_id: nodeId, shown }),
    });
  }

  getMeshes(sessionId: string, tol = 0.1): Promise<MeshesJson> {
    return this.request(`/workflows/${sessionId}/meshes?tol=${tol}`);
  }

  async getDocsMarkdown(): Promise<string> {
    const response = await fetch(`${this.baseUrl}/components/docs`, {
      headers: { accept: 'text/markdown' },
    });
    if (!response.ok) throw new ApiError(response.status, await response.text());
    return response.text();
  }
}
