import { describe, expect, test, vi } from 'vitest';

import { ApiError } from '../src/api.js';
import { PromptPanel, renderOutcome } from '../src/prompt.js';
import type { OutcomeJson, SessionJson } from '../src/types.js';

const emptyDoc = { format_version: 1, nodes: [], wires: [] };

const outcome: OutcomeJson = {
  status: 'success',
  request: 'draw a tower',
  attempts: [
    {
      script: 'add surface.Component_Extrude cylinders\n',
      verdict: 'rejected',
      diagnostics: [
        {
          severity: 'error', code: 'UnknownComponent',
          message: "unknown component 'surface.Component_Extrude'",
          line: 12, column: null, ident: 'surface.Component_Extrude',
        },
      ],
      workflow: null,
    },
    { script: 'add surface.extrude cylinders\n', verdict: 'accepted', diagnostics: [], workflow: emptyDoc },
  ],
  workflow: emptyDoc,
};

const session: SessionJson = {
  session_id: 'abc123', revision: 0, origin: 'prompt', evaluated: true,
  document: emptyDoc, sliders: [], outcome,
};

function panelWith(backend: (prompt: string) => Promise<SessionJson>) {
  const onSession = vi.fn();
  const panel = new PromptPanel(
    { createFromPrompt: (prompt) => backend(prompt) },
    { provider: { replay: 'test3_namespace_slip' }, onSession },
  );
  document.body.replaceChildren(panel.root);
  return { panel, onSession };
}

function typePrompt(panel: PromptPanel, text: string) {
  panel.textarea.value = text;
  panel.textarea.dispatchEvent(new Event('input'));
}

describe('renderOutcome', () => {
  test('shows every attempt with verdict, diagnostics, and script', () => {
    const el = renderOutcome(outcome);
    const attempts = el.querySelectorAll('.attempt');
    expect(attempts).toHaveLength(2);
    expect(attempts[0]!.querySelector('summary')?.textContent).toBe('attempt 1: rejected');

    const diagnostic = attempts[0]!.querySelector<HTMLElement>('.diagnostic.error')!;
    expect(diagnostic.dataset.code).toBe('UnknownComponent');
    expect(diagnostic.textContent).toContain('line 12');
    expect(attempts[1]!.querySelector('.diagnostics')).toBeNull();
    expect(el.querySelector('.outcome-status')?.textContent).toContain('2 attempt(s)');
  });
});

describe('PromptPanel', () => {
  test('submit stays disabled until the prompt has content', () => {
    const { panel } = panelWith(() => Promise.resolve(session));
    expect(panel.submit.disabled).toBe(true);
    typePrompt(panel, '   ');
    expect(panel.submit.disabled).toBe(true);
    typePrompt(panel, 'draw a tower');
    expect(panel.submit.disabled).toBe(false);
  });

  test('a successful run renders the outcome and hands the session over', async () => {
    const { panel, onSession } = panelWith(() => Promise.resolve(session));
    typePrompt(panel, 'draw a tower');
    await panel.run();
    expect(onSession).toHaveBeenCalledWith(session);
    expect(panel.root.querySelectorAll('.attempt')).toHaveLength(2);
    expect(panel.root.querySelector('[data-code="UnknownComponent"]')).not.toBeNull();
  });

  test('an exhausted generation shows diagnostics from all attempts', async () => {
    const failed: OutcomeJson = {
      ...outcome, status: 'failed',
      attempts: [outcome.attempts[0]!, outcome.attempts[0]!, outcome.attempts[0]!],
      workflow: null,
    };
    const { panel, onSession } = panelWith(() =>
      Promise.reject(new ApiError(422, { error: 'exhausted', outcome: failed })),
    );
    typePrompt(panel, 'draw a tower');
    await panel.run();
    expect(onSession).not.toHaveBeenCalled();
    expect(panel.root.querySelectorAll('.attempt')).toHaveLength(3);
    expect(panel.root.querySelector('.outcome-status')?.textContent).toContain('failed');
  });

  test('a dead server raises the retry banner and keeps the prompt text', async () => {
    let down = true;
    const { panel, onSession } = panelWith(() =>
      down ? Promise.reject(new TypeError('fetch failed')) : Promise.resolve(session),
    );
    typePrompt(panel, 'draw a tower');
    await panel.run();

    const banner = panel.root.querySelector<HTMLElement>('.retry-banner')!;
    expect(banner.hidden).toBe(false);
    expect(panel.textarea.value).toBe('draw a tower');
    expect(onSession).not.toHaveBeenCalled();

    down = false;
    banner.querySelector('button')!.click();
    await vi.waitFor(() => expect(onSession).toHaveBeenCalled());
    expect(panel.root.querySelector<HTMLElement>('.retry-banner')!.hidden).toBe(true);
  });
});
