import { describe, expect, test } from "vitest";

import { makeRng } from "../src/rng.js";
import { predictProba, trainTree, type TreeParams } from "../src/tree.js";

const params = (over: Partial<TreeParams> = {}): TreeParams => ({
  nClasses: 2,
  minSamplesSplit: 2,
  maxFeatures: 99,
  ...over,
});

describe("trainTree", () => {
  test("pure nodes become leaves immediately", () => {
    const X = [[0], [1], [2]];
    const y = [1, 1, 1];
    const node = trainTree(X, y, [0, 1, 2], params(), makeRng(1));
    expect(node).toEqual({ kind: "leaf", counts: [0, 3] });
  });

  test("separable 1-d data splits at a midpoint and classifies exactly", () => {
    const X = [[0.1], [0.2], [0.3], [1.1], [1.2], [1.3]];
    const y = [0, 0, 0, 1, 1, 1];
    const node = trainTree(X, y, [0, 1, 2, 3, 4, 5], params(), makeRng(1));
    expect(node.kind).toBe("split");
    if (node.kind === "split") {
      expect(node.threshold).toBeCloseTo(0.7, 12);
    }
    for (let i = 0; i < X.length; i++) {
      expect(predictProba(node, X[i])).toEqual(y[i] === 0 ? [1, 0] : [0, 1]);
    }
  });

  test("min_samples_split stops growth", () => {
    const X = [[0], [1], [2], [3]];
    const y = [0, 1, 0, 1];
    const node = trainTree(X, y, [0, 1, 2, 3], params({ minSamplesSplit: 5 }), makeRng(1));
    expect(node.kind).toBe("leaf");
  });

  test("falls back past constant sampled features", () => {
    // feature 0 is constant; with maxFeatures=1 some nodes will sample only
    // it and must widen the search to find the informative feature 1
    const X = [
      [5, 0.1],
      [5, 0.2],
      [5, 1.1],
      [5, 1.2],
    ];
    const y = [0, 0, 1, 1];
    for (let seed = 0; seed < 10; seed++) {
      const node = trainTree(X, y, [0, 1, 2, 3], params({ maxFeatures: 1 }), makeRng(seed));
      for (let i = 0; i < X.length; i++) {
        expect(predictProba(node, X[i])[y[i]]).toBe(1);
      }
    }
  });

  test("unsplittable mixed nodes keep their class counts", () => {
    // identical rows with different labels: no split can separate them
    const X = [[1, 2], [1, 2], [1, 2]];
    const y = [0, 1, 1];
    const node = trainTree(X, y, [0, 1, 2], params(), makeRng(3));
    expect(node).toEqual({ kind: "leaf", counts: [1, 2] });
    expect(predictProba(node, [1, 2])).toEqual([1 / 3, 2 / 3]);
  });

  test("xor needs two levels and gets them", () => {
    const X = [
      [0, 0],
      [0, 1],
      [1, 0],
      [1, 1],
    ];
    const y = [0, 1, 1, 0];
    const node = trainTree(X, y, [0, 1, 2, 3], params(), makeRng(4));
    for (let i = 0; i < X.length; i++) {
      expect(predictProba(node, X[i])[y[i]]).toBe(1);
    }
  });
});
