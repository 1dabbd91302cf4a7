import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { debounce, SequenceGate } from "../src/sequence.js";

describe("debounce", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("fires once with the last arguments after the wait", () => {
    const calls: string[] = [];
    const fn = debounce((text: string) => calls.push(text), 400);
    fn("a");
    fn("ab");
    fn("abc");
    vi.advanceTimersByTime(399);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual(["abc"]);
  });

  it("fires again for later bursts", () => {
    const calls: string[] = [];
    const fn = debounce((text: string) => calls.push(text), 400);
    fn("first");
    vi.advanceTimersByTime(400);
    fn("second");
    vi.advanceTimersByTime(400);
    expect(calls).toEqual(["first", "second"]);
  });

  it("cancel drops the pending call", () => {
    const calls: string[] = [];
    const fn = debounce((text: string) => calls.push(text), 400);
    fn("doomed");
    fn.cancel();
    vi.advanceTimersByTime(1000);
    expect(calls).toEqual([]);
  });
});

describe("SequenceGate", () => {
  it("accepts responses in order", () => {
    const gate = new SequenceGate();
    const first = gate.issue();
    const second = gate.issue();
    expect(gate.accept(first)).toBe(true);
    expect(gate.accept(second)).toBe(true);
  });

  it("discards a response older than the newest applied", () => {
    const gate = new SequenceGate();
    const first = gate.issue();
    const second = gate.issue();
    expect(gate.accept(second)).toBe(true);
    expect(gate.accept(first)).toBe(false);
  });

  it("never applies the same response twice", () => {
    const gate = new SequenceGate();
    const seq = gate.issue();
    expect(gate.accept(seq)).toBe(true);
    expect(gate.accept(seq)).toBe(false);
  });

  it("invalidate drops everything already issued", () => {
    const gate = new SequenceGate();
    const seq = gate.issue();
    gate.invalidate();
    expect(gate.accept(seq)).toBe(false);
    const next = gate.issue();
    expect(gate.accept(next)).toBe(true);
  });
});
