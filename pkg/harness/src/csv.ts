import { readFileSync, existsSync } from "node:fs";

import Papa from "papaparse";

import { DataFormatError } from "./errors.js";

export interface FeatureTable {
  /** Feature column names (the columns after label/n_nodes/n_edges). */
  header: string[];
  /** One integer class label per row. */
  labels: number[];
  /** Row-major feature matrix, rows aligned with labels. */
  features: number[][];
  /** Dataset name from the JSON sidecar when present, else the file stem. */
  dataset: string;
}

const META_COLUMNS = ["label", "n_nodes", "n_edges"];

/**
 * Load a feature CSV written by the fingerprint exporter: a header line
 * `label,n_nodes,n_edges,h*...` followed by one numeric row per graph.
 */
export function readFeatureCsv(path: string): FeatureTable {
  let text: string;
  try {
    text = readFileSync(path, "utf-8");
  } catch (err) {
    throw new DataFormatError(`cannot read ${path}: ${(err as Error).message}`);
  }
  const parsed = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    throw new DataFormatError(`${path}: ${parsed.errors[0].message}`);
  }
  const rows = parsed.data;
  if (rows.length === 0) {
    throw new DataFormatError(`${path}: empty file`);
  }
  const header = rows[0];
  for (let i = 0; i < META_COLUMNS.length; i++) {
    if (header[i] !== META_COLUMNS[i]) {
      throw new DataFormatError(
        `${path}: expected column ${i} to be ${META_COLUMNS[i]}, got ${header[i] ?? "nothing"}`,
      );
    }
  }
  const labels: number[] = [];
  const features: number[][] = [];
  for (let r = 1; r < rows.length; r++) {
    const row = rows[r];
    if (row.length !== header.length) {
      throw new DataFormatError(
        `${path}: row ${r} has ${row.length} cells, header has ${header.length}`,
      );
    }
    const values = row.map((cell) => Number(cell));
    const bad = values.findIndex((v) => !Number.isFinite(v));
    if (bad >= 0) {
      throw new DataFormatError(`${path}: row ${r} column ${bad} is not a finite number`);
    }
    const label = values[0];
    if (!Number.isInteger(label)) {
      throw new DataFormatError(`${path}: row ${r} has non-integer label ${row[0]}`);
    }
    labels.push(label);
    features.push(values.slice(META_COLUMNS.length));
  }
  return {
    header: header.slice(META_COLUMNS.length),
    labels,
    features,
    dataset: sidecarName(path),
  };
}

function sidecarName(csvPath: string): string {
  const sidecar = csvPath.replace(/\.csv$/i, ".json");
  if (sidecar !== csvPath && existsSync(sidecar)) {
    try {
      const meta = JSON.parse(readFileSync(sidecar, "utf-8"));
      if (typeof meta?.dataset?.name === "string") {
        return meta.dataset.name;
      }
    } catch {
      // fall through to the file stem; the sidecar is advisory
    }
  }
  const stem = csvPath.split(/[\\/]/).pop() ?? csvPath;
  return stem.replace(/\.csv$/i, "");
}
