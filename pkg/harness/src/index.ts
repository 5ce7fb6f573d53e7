export { readFeatureCsv, type FeatureTable } from "./csv.js";
export { ConfigError, DataFormatError } from "./errors.js";
export { makeRng, randInt, sampleWithoutReplacement, shuffle, type Rng } from "./rng.js";
export { predictProba, trainTree, type TreeNode, type TreeParams } from "./tree.js";
export { trainForest, type Forest, type ForestParams } from "./forest.js";
export {
  accuracy,
  crossValidationJobs,
  mean,
  std,
  stratifiedFolds,
  type FoldJob,
} from "./cv.js";
export {
  DEFAULT_CONFIG,
  evaluate,
  evaluateTable,
  type EvalConfig,
  type EvalReport,
} from "./evaluate.js";
