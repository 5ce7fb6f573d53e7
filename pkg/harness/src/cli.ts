import { writeFileSync } from "node:fs";

import yargs from "yargs";

import { DEFAULT_CONFIG, evaluate } from "./evaluate.js";
import { ConfigError, DataFormatError } from "./errors.js";

/** Exit codes: 0 success, 2 bad configuration, 3 bad data. */
export async function main(argv: string[]): Promise<number> {
  const args = await yargs(argv)
    .scriptName("emp-eval")
    .usage("$0 --features <csv> --seed <n> --report <json>")
    .option("features", { type: "string", demandOption: true, describe: "feature CSV from the exporter" })
    .option("seed", { type: "number", demandOption: true, describe: "base seed for folds and forests" })
    .option("report", { type: "string", demandOption: true, describe: "output JSON path" })
    .option("trees", { type: "number", default: DEFAULT_CONFIG.nTrees })
    .option("runs", { type: "number", default: DEFAULT_CONFIG.nRuns })
    .option("folds", { type: "number", default: DEFAULT_CONFIG.nFolds })
    .option("min-samples-split", { type: "number", default: DEFAULT_CONFIG.minSamplesSplit })
    .strict()
    .fail((msg) => {
      throw new ConfigError(msg);
    })
    .parse();

  const report = evaluate(args.features, {
    nTrees: args.trees,
    minSamplesSplit: args["min-samples-split"],
    splitCriterion: "gini",
    nRuns: args.runs,
    nFolds: args.folds,
    seed: args.seed,
  });
  writeFileSync(args.report, JSON.stringify(report, null, 2) + "\n");
  console.log(
    `${report.dataset}: ${report.mean.toFixed(2)} ± ${report.std.toFixed(2)} ` +
      `(${report.config.nRuns} runs x ${report.config.nFolds} folds, ${report.config.nTrees} trees)`,
  );
  console.log(args.report);
  return 0;
}

/** `main` wrapped with the error-to-exit-code mapping, for the bin shim. */
export async function run(argv: string[]): Promise<number> {
  try {
    return await main(argv);
  } catch (err) {
    if (err instanceof ConfigError) {
      console.error(`error: ${err.message}`);
      return 2;
    }
    if (err instanceof DataFormatError) {
      console.error(`error: ${err.message}`);
      return 3;
    }
    throw err;
  }
}
