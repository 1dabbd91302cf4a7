/**
 * Timing helpers for the live editor: a trailing-edge debounce and a
 * sequence gate that drops out-of-order responses so a slow early
 * request can never overwrite a newer result.
 */

export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  /** Drop the pending call, if any. */
  cancel(): void;
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): Debounced<A> {
  let timer: ReturnType<typeof setTimeout> | null = null;
  const wrapped = (...args: A) => {
    if (timer !== null) {
      clearTimeout(timer);
    }
    timer = setTimeout(() => {
      timer = null;
      fn(...args);
    }, waitMs);
  };
  wrapped.cancel = () => {
    if (timer !== null) {
      clearTimeout(timer);
      timer = null;
    }
  };
  return wrapped;
}

export class SequenceGate {
  private issued = 0;
  private applied = 0;

  /** Number for the request about to be sent. */
  issue(): number {
    this.issued += 1;
    return this.issued;
  }

  /** True when a response with this number is still current. */
  accept(seq: number): boolean {
    if (seq <= this.applied) {
      return false;
    }
    this.applied = seq;
    return true;
  }

  /** Drop every response still in flight (used when the editor empties). */
  invalidate(): void {
    this.applied = this.issued;
  }
}
