import { describe, expect, test, vi } from 'vitest';

import { SliderDriver, renderSlider, sliderStep } from '../src/sliders.js';
import type { SliderMeta } from '../src/types.js';

const flush = () => new Promise((resolve) => setTimeout(resolve, 0));

describe('sliderStep', () => {
  test('decimal places set the widget resolution', () => {
    expect(sliderStep(0)).toBe('1');
    expect(sliderStep(1)).toBe('0.1');
    expect(sliderStep(3)).toBe('0.001');
  });
});

describe('SliderDriver', () => {
  test('coalesces a rapid drag to first plus latest', async () => {
    const sent: number[] = [];
    const releases: Array<() => void> = [];
    const driver = new SliderDriver((value) => {
      sent.push(value);
      return new Promise<void>((resolve) => releases.push(resolve));
    });

    driver.set(0.7);
    driver.set(0.65);
    driver.set(0.6);
    driver.set(0.55);
    expect(sent).toEqual([0.7]);
    expect(driver.busy).toBe(true);

    releases.shift()!();
    await flush();
    expect(sent).toEqual([0.7, 0.55]);

    releases.shift()!();
    await driver.whenIdle();
    expect(sent).toEqual([0.7, 0.55]);
    expect(driver.busy).toBe(false);
  });

  test('whenIdle resolves immediately when nothing is queued', async () => {
    const driver = new SliderDriver(() => Promise.resolve());
    await driver.whenIdle();
  });

  test('a failed PATCH reports the error and the driver recovers', async () => {
    const errors: unknown[] = [];
    let fail = true;
    const sent: number[] = [];
    const driver = new SliderDriver(
      (value) => {
        sent.push(value);
        return fail ? Promise.reject(new Error('boom')) : Promise.resolve();
      },
      (error) => errors.push(error),
    );
    driver.set(1);
    await driver.whenIdle();
    expect(errors).toHaveLength(1);

    fail = false;
    driver.set(2);
    await driver.whenIdle();
    expect(sent).toEqual([1, 2]);
  });
});

describe('renderSlider', () => {
  const meta: SliderMeta = {
    node_id: 'reduction', type: 'params.number_slider',
    min: 0.1, max: 1.0, value: 0.75, decimals: 3,
  };

  test('widget bounds and step come from the server slider state', () => {
    const handle = renderSlider(meta, () => {});
    expect(handle.input.min).toBe('0.1');
    expect(handle.input.max).toBe('1');
    expect(handle.input.step).toBe('0.001');
    expect(handle.input.value).toBe('0.75');
  });

  test('dragging emits numbers and the server echo wins', () => {
    const seen: number[] = [];
    const handle = renderSlider(meta, (value) => seen.push(value));
    handle.input.value = '0.55';
    handle.input.dispatchEvent(new Event('input'));
    expect(seen).toEqual([0.55]);

    handle.showValue(0.55);
    expect(handle.root.querySelector('.slider-value')?.textContent).toBe('0.550');
  });
});
