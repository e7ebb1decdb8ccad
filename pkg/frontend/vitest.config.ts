import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "happy-dom",
    environmentOptions: {
      happyDOM: {
        url: "http://127.0.0.1:8931",
      },
    },
    testTimeout: 30000,
    hookTimeout: 60000,
  },
});
