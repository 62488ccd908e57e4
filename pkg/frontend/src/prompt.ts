/**
 * Prompt panel: submit a modeling request, watch every generation attempt
 * come back with its verdict and diagnostics, and recover from a dead
 * server without losing the typed prompt.
 */

import { ApiError } from './api.js';
import type { OutcomeJson, SessionJson } from './types.js';

export function renderOutcome(outcome: OutcomeJson): HTMLElement {
  const root = document.createElement('div');
  root.className = 'outcome ' + outcome.status;

  const status = document.createElement('p');
  status.className = 'outcome-status';
  status.textContent =
    outcome.status === 'success'
      ? `workflow generated in ${outcome.attempts.length} attempt(s)`
      : `generation failed after ${outcome.attempts.length} attempt(s)`;
  root.appendChild(status);

  outcome.attempts.forEach((attempt, i) => {
    const section = document.createElement('details');
    section.className = `attempt ${attempt.verdict}`;
    section.open = attempt.verdict !== 'accepted';

    const header = document.createElement('summary');
    header.textContent = `attempt ${i + 1}: ${attempt.verdict}`;
    section.appendChild(header);

    if (attempt.diagnostics.length > 0) {
      const list = document.createElement('ul');
      list.className = 'diagnostics';
      for (const d of attempt.diagnostics) {
        const item = document.createElement('li');
        item.className = `diagnostic ${d.severity}`;
        item.dataset.code = d.code;
        item.textContent = `${d.severity} ${d.code} line ${d.line}: ${d.message}`;
        list.appendChild(item);
      }
      section.appendChild(list);
    }

    const script = document.createElement('pre');
    script.className = 'attempt-script';
    script.textContent = attempt.script;
    section.appendChild(script);

    root.appendChild(section);
  });
  return root;
}

export interface PromptBackend {
  createFromPrompt(
    prompt: string,
    provider: Record<string, unknown>,
    config?: Record<string, unknown>,
    followups?: string[],
  ): Promise<SessionJson>;
}

export interface PromptPanelOptions {
  provider: Record<string, unknown>;
  onSession: (session: SessionJson) => void;
}

export class PromptPanel {
  readonly root: HTMLElement;
  readonly textarea: HTMLTextAreaElement;
  readonly submit: HTMLButtonElement;
  private readonly results: HTMLElement;
  private readonly banner: HTMLElement;

  constructor(
    private readonly backend: PromptBackend,
    private readonly options: PromptPanelOptions,
  ) {
    this.root = document.createElement('section');
    this.root.className = 'prompt-panel';

    this.textarea = document.createElement('textarea');
    this.textarea.placeholder = 'Describe the model you want...';

    this.submit = document.createElement('button');
    this.submit.textContent = 'Generate';
    this.submit.disabled = true;

    this.banner = document.createElement('div');
    this.banner.className = 'retry-banner';
    this.banner.hidden = true;

    this.results = document.createElement('div');
    this.results.className = 'prompt-results';

    this.textarea.addEventListener('input', () => {
      this.submit.disabled = this.textarea.value.trim() === '';
    });
    this.submit.addEventListener('click', () => void this.run());

    this.root.append(this.textarea, this.submit, this.banner, this.results);
  }

  async run(): Promise<void> {
    const prompt = this.textarea.value.trim();
    if (prompt === '') return;
    this.banner.hidden = true;
    this.submit.disabled = true;
    try {
      const session = await this.backend.createFromPrompt(prompt, this.options.provider);
      this.results.replaceChildren();
      if (session.outcome) this.results.appendChild(renderOutcome(session.outcome));
      this.options.onSession(session);
    } catch (error) {
      if (error instanceof ApiError) {
        const detail = error.detail as { error?: string; outcome?: OutcomeJson };
        if (detail?.error === 'exhausted' && detail.outcome) {
          this.results.replaceChildren(renderOutcome(detail.outcome));
        } else {
          this.showBanner(`request rejected: ${JSON.stringify(error.detail)}`);
        }
      } else {
        // network failure: keep the prompt text, offer a retry
        this.showBanner('service unreachable; check the server and retry');
      }
    } finally {
      this.submit.disabled = this.textarea.value.trim() === '';
    }
  }

  private showBanner(message: string): void {
    this.banner.replaceChildren();
    this.banner.hidden = false;
    const text = document.createElement('span');
    text.textContent = message;
    const retry = document.createElement('button');
    retry.textContent = 'Retry';
    retry.addEventListener('click', () => void this.run());
    this.banner.append(text, retry);
  }
}
