/** Bounded request buffer: oldest entries drop under pressure, and the
 * drop count is kept so the popup can report loss. */

import type { CapturedRequest } from "./types.js";
import { BUFFER_CAPACITY } from "./types.js";

export class RequestBuffer {
  private entries: CapturedRequest[] = [];
  private droppedCount = 0;

  constructor(private readonly capacity: number = BUFFER_CAPACITY) {
    if (capacity < 1) throw new Error("capacity must be >= 1");
  }

  push(entry: CapturedRequest): void {
    this.entries.push(entry);
    if (this.entries.length > this.capacity) {
      this.entries.splice(0, this.entries.length - this.capacity);
      this.droppedCount += 1;
    }
  }

  /** Remove and return everything buffered (a successful sweep drains). */
  drain(): CapturedRequest[] {
    const out = this.entries;
    this.entries = [];
    return out;
  }

  /** Put entries back at the front after a failed post. */
  requeue(entries: CapturedRequest[]): void {
    this.entries = [...entries, ...this.entries];
    if (this.entries.length > this.capacity) {
      const excess = this.entries.length - this.capacity;
      this.entries.splice(0, excess);
      this.droppedCount += excess;
    }
  }

  get size(): number {
    return this.entries.length;
  }

  get dropped(): number {
    return this.droppedCount;
  }
}
