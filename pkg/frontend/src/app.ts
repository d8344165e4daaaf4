import type { ApiClient } from "./api";
import type { Ctx } from "./context";
import type { Locale } from "./i18n";
import { renderAdmin } from "./screens/admin";
import { renderHome } from "./screens/home";
import { renderLogin } from "./screens/login";
import { renderExpired, renderResult } from "./screens/result";
import { renderTest } from "./screens/test";

export function createApp(root: HTMLElement, client: ApiClient, locale: Locale = "ro"): Ctx {
  const ctx: Ctx = {
    client,
    root,
    locale,
    user: null,
    go: {
      login: () => renderLogin(ctx),
      home: () => renderHome(ctx),
      test: (started) => renderTest(ctx, started),
      result: (resultId) => renderResult(ctx, resultId),
      expired: (payload) => renderExpired(ctx, payload),
      admin: () => renderAdmin(ctx),
    },
  };
  return ctx;
}
