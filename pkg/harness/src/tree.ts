import { type Rng, sampleWithoutReplacement } from "./rng.js";

export interface TreeParams {
  /** Class count; labels passed to training are class indices 0..nClasses-1. */
  nClasses: number;
  /** Nodes with fewer samples become leaves. */
  minSamplesSplit: number;
  /** Features drawn (without replacement) at every split. */
  maxFeatures: number;
}

export interface SplitNode {
  kind: "split";
  feature: number;
  /** Samples with x[feature] <= threshold go left. */
  threshold: number;
  left: TreeNode;
  right: TreeNode;
}

export interface LeafNode {
  kind: "leaf";
  /** Per-class sample counts at the leaf. */
  counts: number[];
}

export type TreeNode = SplitNode | LeafNode;

function giniOfCounts(counts: number[], total: number): number {
  let sumSq = 0;
  for (const c of counts) {
    sumSq += c * c;
  }
  return 1 - sumSq / (total * total);
}

function classCounts(y: number[], indices: number[], nClasses: number): number[] {
  const counts = new Array<number>(nClasses).fill(0);
  for (const i of indices) {
    counts[y[i]]++;
  }
  return counts;
}

interface BestSplit {
  feature: number;
  threshold: number;
  impurity: number;
}

/**
 * Best gini-weighted split of one feature over the node's samples, found by
 * sorting and sweeping the boundaries between distinct values.
 */
function scanFeature(
  X: number[][],
  y: number[],
  indices: number[],
  feature: number,
  nClasses: number,
): BestSplit | null {
  const order = [...indices].sort((a, b) => X[a][feature] - X[b][feature]);
  const total = order.length;
  const left = new Array<number>(nClasses).fill(0);
  const right = classCounts(y, order, nClasses);
  let best: BestSplit | null = null;
  for (let i = 0; i < total - 1; i++) {
    const cls = y[order[i]];
    left[cls]++;
    right[cls]--;
    const v = X[order[i]][feature];
    const vNext = X[order[i + 1]][feature];
    if (v === vNext) {
      continue;
    }
    const nLeft = i + 1;
    const nRight = total - nLeft;
    const impurity =
      (nLeft * giniOfCounts(left, nLeft) + nRight * giniOfCounts(right, nRight)) / total;
    if (best === null || impurity < best.impurity) {
      best = { feature, threshold: v + (vNext - v) / 2, impurity };
    }
  }
  return best;
}

function bestSplit(
  X: number[][],
  y: number[],
  indices: number[],
  params: TreeParams,
  rng: Rng,
): BestSplit | null {
  // Zero-gain splits are kept: impure nodes keep splitting while any valid
  // boundary exists, which is what lets a single tree sort out parity-style
  // interactions greedy gain-chasing would miss.
  const nFeatures = X[0].length;
  const candidates = sampleWithoutReplacement(nFeatures, params.maxFeatures, rng);
  let best: BestSplit | null = null;
  for (const f of candidates) {
    const split = scanFeature(X, y, indices, f, params.nClasses);
    if (split !== null && (best === null || split.impurity < best.impurity)) {
      best = split;
    }
  }
  if (best === null && params.maxFeatures < nFeatures) {
    // the sampled features were all constant on this node; widen the search
    // rather than giving up, so constant columns never block a usable split
    for (let f = 0; f < nFeatures; f++) {
      const split = scanFeature(X, y, indices, f, params.nClasses);
      if (split !== null && (best === null || split.impurity < best.impurity)) {
        best = split;
      }
    }
  }
  return best;
}

/** Grow a CART classifier (gini criterion, no depth limit) on `indices`. */
export function trainTree(
  X: number[][],
  y: number[],
  indices: number[],
  params: TreeParams,
  rng: Rng,
): TreeNode {
  const counts = classCounts(y, indices, params.nClasses);
  if (
    indices.length < params.minSamplesSplit ||
    giniOfCounts(counts, indices.length) === 0
  ) {
    return { kind: "leaf", counts };
  }
  const split = bestSplit(X, y, indices, params, rng);
  if (split === null) {
    return { kind: "leaf", counts };
  }
  const leftIdx: number[] = [];
  const rightIdx: number[] = [];
  for (const i of indices) {
    (X[i][split.feature] <= split.threshold ? leftIdx : rightIdx).push(i);
  }
  return {
    kind: "split",
    feature: split.feature,
    threshold: split.threshold,
    left: trainTree(X, y, leftIdx, params, rng),
    right: trainTree(X, y, rightIdx, params, rng),
  };
}

/** Class-probability vector at the leaf reached by `x`. */
export function predictProba(node: TreeNode, x: number[]): number[] {
  while (node.kind === "split") {
    node = x[node.feature] <= node.threshold ? node.left : node.right;
  }
  const total = node.counts.reduce((a, b) => a + b, 0);
  return node.counts.map((c) => (total > 0 ? c / total : 0));
}
