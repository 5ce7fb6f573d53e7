import { describe, expect, test } from "vitest";

import { trainForest } from "../src/forest.js";
import { DataFormatError } from "../src/errors.js";
import { makeRng } from "../src/rng.js";

function blobs(n: number, seed: number): { X: number[][]; y: number[] } {
  // two 4-d gaussian-ish blobs separated along every axis
  const rng = makeRng(seed);
  const X: number[][] = [];
  const y: number[] = [];
  for (let i = 0; i < n; i++) {
    const label = i % 2;
    X.push(Array.from({ length: 4 }, () => label * 2 + (rng() - 0.5)));
    y.push(label);
  }
  return { X, y };
}

describe("trainForest", () => {
  test("separable data is classified perfectly", () => {
    const { X, y } = blobs(40, 1);
    const forest = trainForest(X, y, { nTrees: 30, minSamplesSplit: 2, seed: 10 });
    expect(forest.predict(X)).toEqual(y);
  });

  test("same seed reproduces predictions exactly", () => {
    const { X, y } = blobs(30, 2);
    const probe = Array.from({ length: 10 }, (_, i) => [i / 5, 0.3, 1.1, 0.7]);
    const a = trainForest(X, y, { nTrees: 20, minSamplesSplit: 2, seed: 11 });
    const b = trainForest(X, y, { nTrees: 20, minSamplesSplit: 2, seed: 11 });
    expect(a.predict(probe)).toEqual(b.predict(probe));
  });

  test("different stream labels train different forests", () => {
    const { X, y } = blobs(30, 3);
    const a = trainForest(X, y, { nTrees: 5, minSamplesSplit: 2, seed: 12, streams: ["fold", 0] });
    const b = trainForest(X, y, { nTrees: 5, minSamplesSplit: 2, seed: 12, streams: ["fold", 1] });
    expect(JSON.stringify(a.trees)).not.toBe(JSON.stringify(b.trees));
  });

  test("arbitrary integer labels survive the round trip", () => {
    const { X } = blobs(20, 4);
    const y = X.map((row) => (row[0] > 1 ? 5 : -3));
    const forest = trainForest(X, y, { nTrees: 15, minSamplesSplit: 2, seed: 13 });
    expect(forest.classes).toEqual([-3, 5]);
    expect(forest.predict(X)).toEqual(y);
  });

  test("rejects empty or misaligned input", () => {
    expect(() => trainForest([], [], { nTrees: 1, minSamplesSplit: 2, seed: 1 })).toThrow(
      DataFormatError,
    );
    expect(() =>
      trainForest([[1], [2]], [0], { nTrees: 1, minSamplesSplit: 2, seed: 1 }),
    ).toThrow(DataFormatError);
  });
});
