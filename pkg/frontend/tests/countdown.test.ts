import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { Countdown, formatClock } from "../src/countdown";

describe("Countdown", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("ticks down once per second and fires onZero exactly once", () => {
    const ticks: number[] = [];
    const onZero = vi.fn();
    const countdown = new Countdown((s) => ticks.push(s), onZero);
    countdown.start(3);
    expect(ticks).toEqual([3]);
    vi.advanceTimersByTime(3000);
    expect(ticks).toEqual([3, 2, 1, 0]);
    expect(onZero).toHaveBeenCalledTimes(1);
    vi.advanceTimersByTime(5000);
    expect(onZero).toHaveBeenCalledTimes(1);
  });

  it("resync overrides the local estimate (server is the authority)", () => {
    const ticks: number[] = [];
    const countdown = new Countdown((s) => ticks.push(s), vi.fn());
    countdown.start(100);
    vi.advanceTimersByTime(2000);
    countdown.resync(50);
    expect(ticks.at(-1)).toBe(50);
    vi.advanceTimersByTime(1000);
    expect(ticks.at(-1)).toBe(49);
  });

  it("stop halts ticking", () => {
    const ticks: number[] = [];
    const countdown = new Countdown((s) => ticks.push(s), vi.fn());
    countdown.start(10);
    countdown.stop();
    vi.advanceTimersByTime(5000);
    expect(ticks).toEqual([10]);
  });

  it("never goes negative", () => {
    const onZero = vi.fn();
    const countdown = new Countdown(vi.fn(), onZero);
    countdown.start(-5);
    vi.advanceTimersByTime(2000);
    expect(onZero).not.toHaveBeenCalled();
  });
});

describe("formatClock", () => {
  it("formats mm:ss", () => {
    expect(formatClock(0)).toBe("00:00");
    expect(formatClock(61)).toBe("01:01");
    expect(formatClock(600)).toBe("10:00");
    expect(formatClock(3599)).toBe("59:59");
  });
});
