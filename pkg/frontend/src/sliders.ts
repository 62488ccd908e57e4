/**
 * Slider widgets and the drag-to-PATCH driver.
 *
 * One PATCH may be in flight per slider; values arriving mid-flight are
 * coalesced so only the newest is sent once the acknowledgment returns
 * (trailing-edge coalescing). The widget always displays the server echo,
 * which is the clamped and rounded value.
 */

import type { SliderMeta } from './types.js';

/** Input step attribute from the slider's declared decimal places. */
export function sliderStep(decimals: number): string {
  if (decimals <= 0) return '1';
  return '0.' + '0'.repeat(decimals - 1) + '1';
}

export class SliderDriver {
  private inflight = false;
  private pending: number | null = null;
  private idleResolvers: Array<() => void> = [];

  constructor(
    private readonly send: (value: number) => Promise<void>,
    private readonly onError: (error: unknown) => void = () => {},
  ) {}

  set(value: number): void {
    if (this.inflight) {
      this.pending = value;
      return;
    }
    this.inflight = true;
    void this.send(value)
      .catch((error) => this.onError(error))
      .finally(() => {
        this.inflight = false;
        if (this.pending !== null) {
          const next = this.pending;
          this.pending = null;
          this.set(next);
        } else {
          for (const resolve of this.idleResolvers.splice(0)) resolve();
        }
      });
  }

  get busy(): boolean {
    return this.inflight || this.pending !== null;
  }

  /** Resolves once no PATCH is in flight and nothing is queued. */
  whenIdle(): Promise<void> {
    if (!this.busy) return Promise.resolve();
    return new Promise((resolve) => this.idleResolvers.push(resolve));
  }
}

export interface SliderHandle {
  root: HTMLElement;
  input: HTMLInputElement;
  /** Reflect the server echo back into the widget. */
  showValue(value: number): void;
}

export function renderSlider(
  meta: SliderMeta,
  onInput: (value: number) => void,
): SliderHandle {
  const root = document.createElement('label');
  root.className = 'slider';
  root.dataset.nodeId = meta.node_id;

  const name = document.createElement('span');
  name.className = 'slider-name';
  name.textContent = meta.node_id;

  const input = document.createElement('input');
  input.type = 'range';
  input.min = String(meta.min);
  input.max = String(meta.max);
  input.step = sliderStep(meta.decimals);
  input.value = String(meta.value);

  const readout = document.createElement('span');
  readout.className = 'slider-value';
  readout.textContent = meta.value.toFixed(Math.max(meta.decimals, 0));

  input.addEventListener('input', () => {
    readout.textContent = input.value;
    onInput(Number(input.value));
  });

  root.append(name, input, readout);
  return {
    root,
    input,
    showValue(value: number) {
      input.value = String(value);
      readout.textContent = value.toFixed(Math.max(meta.decimals, 0));
    },
  };
}
