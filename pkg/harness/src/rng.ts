import seedrandom from "seedrandom";

/** Uniform [0, 1) generator. */
export type Rng = () => number;

/**
 * Deterministic generator from a seed and any number of stream labels, so
 * every run/fold/tree draws from its own independent stream regardless of
 * evaluation order.
 */
export function makeRng(seed: number, ...streams: Array<number | string>): Rng {
  return seedrandom([seed, ...streams].join(":"));
}

/** Integer in [0, n). */
export function randInt(rng: Rng, n: number): number {
  return Math.floor(rng() * n);
}

/** In-place Fisher-Yates shuffle. */
export function shuffle<T>(items: T[], rng: Rng): T[] {
  for (let i = items.length - 1; i > 0; i--) {
    const j = randInt(rng, i + 1);
    [items[i], items[j]] = [items[j], items[i]];
  }
  return items;
}

/** k distinct values sampled from [0, n) (partial Fisher-Yates). */
export function sampleWithoutReplacement(n: number, k: number, rng: Rng): number[] {
  const pool = Array.from({ length: n }, (_, i) => i);
  const take = Math.min(k, n);
  for (let i = 0; i < take; i++) {
    const j = i + randInt(rng, n - i);
    [pool[i], pool[j]] = [pool[j], pool[i]];
  }
  return pool.slice(0, take);
}
