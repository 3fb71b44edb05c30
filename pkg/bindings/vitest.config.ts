import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    // Every case shells out to the pipeline at least once.
    testTimeout: 60_000,
    hookTimeout: 60_000,
  },
});
