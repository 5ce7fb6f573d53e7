import { describe, expect, test } from "vitest";

import { makeRng, randInt, sampleWithoutReplacement, shuffle } from "../src/rng.js";

describe("makeRng", () => {
  test("same seed and streams reproduce the sequence", () => {
    const a = makeRng(7, "tree", 3);
    const b = makeRng(7, "tree", 3);
    for (let i = 0; i < 100; i++) {
      expect(a()).toBe(b());
    }
  });

  test("different streams decorrelate", () => {
    const a = makeRng(7, "tree", 3);
    const b = makeRng(7, "tree", 4);
    const draws = Array.from({ length: 20 }, () => [a(), b()]);
    expect(draws.some(([x, y]) => x !== y)).toBe(true);
  });

  test("values stay in [0, 1)", () => {
    const rng = makeRng(123);
    for (let i = 0; i < 1000; i++) {
      const x = rng();
      expect(x).toBeGreaterThanOrEqual(0);
      expect(x).toBeLessThan(1);
    }
  });
});

describe("randInt", () => {
  test("covers the full range and nothing else", () => {
    const rng = makeRng(5);
    const seen = new Set<number>();
    for (let i = 0; i < 500; i++) {
      seen.add(randInt(rng, 4));
    }
    expect([...seen].sort()).toEqual([0, 1, 2, 3]);
  });
});

describe("shuffle", () => {
  test("is a deterministic permutation", () => {
    const base = Array.from({ length: 30 }, (_, i) => i);
    const once = shuffle([...base], makeRng(9));
    const twice = shuffle([...base], makeRng(9));
    expect(once).toEqual(twice);
    expect([...once].sort((a, b) => a - b)).toEqual(base);
    expect(once).not.toEqual(base);
  });
});

describe("sampleWithoutReplacement", () => {
  test("draws k distinct in-range values", () => {
    const rng = makeRng(11);
    for (let trial = 0; trial < 50; trial++) {
      const picked = sampleWithoutReplacement(10, 4, rng);
      expect(picked).toHaveLength(4);
      expect(new Set(picked).size).toBe(4);
      for (const p of picked) {
        expect(p).toBeGreaterThanOrEqual(0);
        expect(p).toBeLessThan(10);
      }
    }
  });

  test("caps k at n", () => {
    const picked = sampleWithoutReplacement(3, 99, makeRng(1));
    expect([...picked].sort()).toEqual([0, 1, 2]);
  });
});
