import { spawn } from "node:child_process";
import { createReadStream, existsSync } from "node:fs";
import { mkdtemp, rm } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { createInterface } from "node:readline";

export const version = "0.1.0";

export type Strategy = "tsm" | "ssm" | "entities";

/** One masked training example, exactly as the CLI writes it to jsonl. */
export interface MaskedExampleRecord {
  example_id: string;
  sent_id: string;
  strategy: Strategy;
  span_type: string;
  inputs: string;
  targets: string;
  span_start: number;
  span_end: number;
}

export interface StreamConfig {
  /** Corpus file: jsonl records, or plain text with one document per line. */
  input: string;
  format?: "jsonl" | "plain";
  /** Non-empty subset of tsm, ssm, entities.  Default: ["tsm"]. */
  strategies?: string[];
  /** Required whenever ssm or entities is requested. */
  seed?: number;
  /** Rules file (toml or json); omitted, the compiled-in grammar is used. */
  rules?: string;
  /** "heuristic", "none", or an entity annotation jsonl file. */
  entities?: string;
  strict?: boolean;
  jobs?: number;
  /** Interleave multi-strategy output into one stream.  Default: true. */
  mixOutputs?: boolean;
  mixtureMode?: "exact" | "exhaust";
  dedupInputs?: boolean;
  /** Python executable; TEMPSPAN_PYTHON env wins over the default "python3". */
  python?: string;
}

const VALID_STRATEGIES = ["tsm", "ssm", "entities"];

// Same checks, same wording, as the pipeline's own config validation —
// a config rejected here would have been rejected over there too.
function validate(config: StreamConfig): void {
  const strategies = config.strategies ?? ["tsm"];
  if (strategies.length === 0) {
    throw new Error("at least one strategy is required");
  }
  for (const s of strategies) {
    if (!VALID_STRATEGIES.includes(s)) {
      throw new Error(
        `unknown strategy '${s}' (expected one of ${VALID_STRATEGIES.join(", ")})`,
      );
    }
  }
  if (new Set(strategies).size !== strategies.length) {
    throw new Error("strategies must not repeat");
  }
  const format = config.format ?? "jsonl";
  if (format !== "jsonl" && format !== "plain") {
    throw new Error(`unknown corpus format '${format}'`);
  }
  const needsSeed = strategies
    .filter((s) => s === "ssm" || s === "entities")
    .sort();
  if (needsSeed.length > 0 && config.seed === undefined) {
    throw new Error(`strategy '${needsSeed[0]}' requires a seed`);
  }
  if ((config.jobs ?? 1) < 1) {
    throw new Error("jobs must be >= 1");
  }
  const mode = config.mixtureMode ?? "exact";
  if (mode !== "exact" && mode !== "exhaust") {
    throw new Error(`unknown mixture mode '${mode}'`);
  }
}

function cliArgs(config: StreamConfig, outDir: string): string[] {
  const args = [
    "-m", "tempspan", "pipeline",
    "--in", config.input,
    "--out-dir", outDir,
    "--strategies", (config.strategies ?? ["tsm"]).join(","),
    "--format", config.format ?? "jsonl",
    "--entities", config.entities ?? "heuristic",
    "--jobs", String(config.jobs ?? 1),
    "--mixture-mode", config.mixtureMode ?? "exact",
  ];
  if (config.seed !== undefined) args.push("--seed", String(config.seed));
  if (config.rules !== undefined) args.push("--rules", config.rules);
  if (config.strict) args.push("--strict");
  if (config.mixOutputs === false) args.push("--no-mix");
  if (config.dedupInputs) args.push("--dedup-inputs");
  return args;
}

function runPipeline(python: string, args: string[]): Promise<void> {
  return new Promise((resolve, reject) => {
    const child = spawn(python, args, { stdio: ["ignore", "ignore", "pipe"] });
    let stderr = "";
    child.stderr.setEncoding("utf-8");
    child.stderr.on("data", (chunk: string) => {
      stderr += chunk;
    });
    child.on("error", reject);
    child.on("close", (code) => {
      if (code === 0) resolve();
      else reject(new Error(stderr.trim() || `pipeline exited with code ${code}`));
    });
  });
}

async function* readJsonl(path: string): AsyncGenerator<MaskedExampleRecord> {
  const lines = createInterface({
    input: createReadStream(path, { encoding: "utf-8" }),
    crlfDelay: Infinity,
  });
  for await (const line of lines) {
    if (line.length > 0) yield JSON.parse(line) as MaskedExampleRecord;
  }
}

async function* stream(
  config: StreamConfig,
): AsyncGenerator<MaskedExampleRecord> {
  const python =
    config.python ?? process.env["TEMPSPAN_PYTHON"] ?? "python3";
  const outDir = await mkdtemp(join(tmpdir(), "tempspan-"));
  try {
    await runPipeline(python, cliArgs(config, outDir));
    const strategies = config.strategies ?? ["tsm"];
    const mixed = join(outDir, "mixed.jsonl");
    if (strategies.length >= 2 && config.mixOutputs !== false && existsSync(mixed)) {
      yield* readJsonl(mixed);
    } else {
      // Single strategy, or mixing switched off: the per-strategy files
      // in the order the config named them.
      for (const s of strategies) {
        yield* readJsonl(join(outDir, `examples_${s}.jsonl`));
      }
    }
  } finally {
    await rm(outDir, { recursive: true, force: true });
  }
}

/**
 * Run the masking pipeline over a corpus and lazily iterate its examples.
 *
 * The work happens out of process; records are read back verbatim, so a
 * given (config, seed) yields exactly what the command line writes.
 * Throws synchronously on an invalid config; pipeline failures surface
 * as a rejected iteration carrying the process stderr.
 */
export function open_stream(
  config: StreamConfig,
): AsyncIterableIterator<MaskedExampleRecord> {
  validate(config);
  return stream(config);
}
