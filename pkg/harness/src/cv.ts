import { type Rng, shuffle } from "./rng.js";
import { ConfigError, DataFormatError } from "./errors.js";

/**
 * Disjoint test folds covering every sample, stratified by label: each
 * class's samples are shuffled and dealt into the folds in near-equal
 * chunks, so per-fold class proportions match the dataset within one sample.
 */
export function stratifiedFolds(labels: number[], nFolds: number, rng: Rng): number[][] {
  if (nFolds < 2) {
    throw new ConfigError(`fold count must be >= 2, got ${nFolds}`);
  }
  if (labels.length < nFolds) {
    throw new DataFormatError(`cannot make ${nFolds} folds from ${labels.length} samples`);
  }
  const byClass = new Map<number, number[]>();
  labels.forEach((label, i) => {
    const bucket = byClass.get(label);
    if (bucket === undefined) {
      byClass.set(label, [i]);
    } else {
      bucket.push(i);
    }
  });

  const folds: number[][] = Array.from({ length: nFolds }, () => []);
  // iterate classes in sorted order so the fold layout depends only on the
  // rng stream, not map insertion order
  for (const label of [...byClass.keys()].sort((a, b) => a - b)) {
    const indices = shuffle(byClass.get(label)!, rng);
    for (let f = 0; f < nFolds; f++) {
      const lo = Math.round((f * indices.length) / nFolds);
      const hi = Math.round(((f + 1) * indices.length) / nFolds);
      folds[f].push(...indices.slice(lo, hi));
    }
  }
  const empty = folds.findIndex((f) => f.length === 0);
  if (empty >= 0) {
    throw new DataFormatError(`fold ${empty} is empty; too few samples for ${nFolds} folds`);
  }
  return folds;
}

export interface FoldJob {
  run: number;
  fold: number;
  trainIndices: number[];
  testIndices: number[];
}

/** All train/test index pairs for `nRuns` repetitions of `nFolds`-fold CV. */
export function crossValidationJobs(
  labels: number[],
  nRuns: number,
  nFolds: number,
  makeRunRng: (run: number) => Rng,
): FoldJob[] {
  const all = Array.from(labels.keys());
  const jobs: FoldJob[] = [];
  for (let run = 0; run < nRuns; run++) {
    const folds = stratifiedFolds(labels, nFolds, makeRunRng(run));
    folds.forEach((testIndices, fold) => {
      const inTest = new Set(testIndices);
      jobs.push({
        run,
        fold,
        trainIndices: all.filter((i) => !inTest.has(i)),
        testIndices,
      });
    });
  }
  return jobs;
}

/** Fraction of positions where the two arrays agree. */
export function accuracy(predicted: number[], actual: number[]): number {
  let hits = 0;
  for (let i = 0; i < actual.length; i++) {
    if (predicted[i] === actual[i]) {
      hits++;
    }
  }
  return hits / actual.length;
}

export function mean(xs: number[]): number {
  return xs.reduce((a, b) => a + b, 0) / xs.length;
}

/** Population standard deviation. */
export function std(xs: number[]): number {
  const m = mean(xs);
  return Math.sqrt(xs.reduce((acc, x) => acc + (x - m) * (x - m), 0) / xs.length);
}
