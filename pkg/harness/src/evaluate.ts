import { readFeatureCsv, type FeatureTable } from "./csv.js";
import { accuracy, crossValidationJobs, mean, std } from "./cv.js";
import { trainForest } from "./forest.js";
import { makeRng } from "./rng.js";
import { ConfigError, DataFormatError } from "./errors.js";

export interface EvalConfig {
  nTrees: number;
  minSamplesSplit: number;
  splitCriterion: "gini";
  nRuns: number;
  nFolds: number;
  seed: number;
}

export const DEFAULT_CONFIG: Omit<EvalConfig, "seed"> = {
  nTrees: 1000,
  minSamplesSplit: 2,
  splitCriterion: "gini",
  nRuns: 10,
  nFolds: 10,
};

export interface EvalReport {
  dataset: string;
  config: EvalConfig & { stratified: true };
  /** Mean accuracy over all run x fold evaluations, in percent. */
  mean: number;
  /** Population standard deviation over the same evaluations, in percent. */
  std: number;
  /** Per-run mean accuracies, in percent. */
  per_run: number[];
}

function checkConfig(config: EvalConfig): void {
  for (const [key, value] of Object.entries(config)) {
    if (key !== "splitCriterion" && (!Number.isInteger(value) || (value as number) <= 0)) {
      throw new ConfigError(`${key} must be a positive integer, got ${value}`);
    }
  }
  if (config.splitCriterion !== "gini") {
    throw new ConfigError(`unsupported split criterion ${config.splitCriterion}`);
  }
}

/**
 * The full protocol on an in-memory table: `nRuns` repetitions of stratified
 * `nFolds`-fold cross-validation of a bagged CART ensemble, reported as
 * percent accuracy aggregated over every fold evaluation.
 */
export function evaluateTable(table: FeatureTable, config: EvalConfig): EvalReport {
  checkConfig(config);
  const classes = new Set(table.labels);
  if (classes.size < 2) {
    throw new DataFormatError(`need at least 2 classes, found ${classes.size}`);
  }
  const jobs = crossValidationJobs(table.labels, config.nRuns, config.nFolds, (run) =>
    makeRng(config.seed, "folds", run),
  );
  const perFold: number[][] = Array.from({ length: config.nRuns }, () => []);
  for (const job of jobs) {
    const forest = trainForest(
      job.trainIndices.map((i) => table.features[i]),
      job.trainIndices.map((i) => table.labels[i]),
      {
        nTrees: config.nTrees,
        minSamplesSplit: config.minSamplesSplit,
        seed: config.seed,
        streams: ["run", job.run, "fold", job.fold],
      },
    );
    const predicted = forest.predict(job.testIndices.map((i) => table.features[i]));
    const actual = job.testIndices.map((i) => table.labels[i]);
    perFold[job.run].push(accuracy(predicted, actual));
  }
  const flat = perFold.flat();
  return {
    dataset: table.dataset,
    config: { ...config, stratified: true },
    mean: 100 * mean(flat),
    std: 100 * std(flat),
    per_run: perFold.map((run) => 100 * mean(run)),
  };
}

/** Load a feature CSV (plus its JSON sidecar, if present) and evaluate it. */
export function evaluate(featuresCsv: string, config: EvalConfig): EvalReport {
  return evaluateTable(readFeatureCsv(featuresCsv), config);
}
