import { type Rng, makeRng, randInt } from "./rng.js";
import { type TreeNode, predictProba, trainTree } from "./tree.js";
import { DataFormatError } from "./errors.js";

export interface ForestParams {
  nTrees: number;
  minSamplesSplit: number;
  /** Base seed; tree t draws from its own stream derived from it. */
  seed: number;
  /** Extra stream labels so forests trained in different folds differ. */
  streams?: Array<number | string>;
}

export interface Forest {
  /** Distinct labels in training order-independent (sorted) order. */
  classes: number[];
  trees: TreeNode[];
  predict(rows: number[][]): number[];
}

/**
 * Bagged CART ensemble: each tree fits a bootstrap resample, considers
 * sqrt(n_features) features per split, and votes with its leaf class
 * distribution; prediction is the argmax of the averaged distributions.
 */
export function trainForest(X: number[][], y: number[], params: ForestParams): Forest {
  if (X.length === 0 || X.length !== y.length) {
    throw new DataFormatError("feature matrix and labels must be non-empty and aligned");
  }
  const classes = [...new Set(y)].sort((a, b) => a - b);
  const classIndex = new Map(classes.map((c, i) => [c, i]));
  const yIdx = y.map((label) => classIndex.get(label)!);
  const n = X.length;
  const nFeatures = X[0].length;
  const treeParams = {
    nClasses: classes.length,
    minSamplesSplit: params.minSamplesSplit,
    maxFeatures: Math.max(1, Math.round(Math.sqrt(nFeatures))),
  };

  const trees: TreeNode[] = [];
  for (let t = 0; t < params.nTrees; t++) {
    const rng: Rng = makeRng(params.seed, ...(params.streams ?? []), "tree", t);
    const bootstrap = Array.from({ length: n }, () => randInt(rng, n));
    trees.push(trainTree(X, yIdx, bootstrap, treeParams, rng));
  }

  const predict = (rows: number[][]): number[] =>
    rows.map((row) => {
      const mean = new Array<number>(classes.length).fill(0);
      for (const tree of trees) {
        const proba = predictProba(tree, row);
        for (let c = 0; c < mean.length; c++) {
          mean[c] += proba[c];
        }
      }
      let argmax = 0;
      for (let c = 1; c < mean.length; c++) {
        if (mean[c] > mean[argmax]) {
          argmax = c;
        }
      }
      return classes[argmax];
    });

  return { classes, trees, predict };
}
