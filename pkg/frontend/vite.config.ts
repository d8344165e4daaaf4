import { defineConfig } from "vitest/config";

export default defineConfig({
  server: {
    proxy: {
      // Dev server forwards API calls to a locally running quizhost backend.
      "/api": "http://127.0.0.1:8000",
    },
  },
  build: {
    outDir: "dist",
  },
  test: {
    environment: "happy-dom",
    globals: true,
    include: ["tests/**/*.test.ts"],
  },
});
