import type { Ctx } from "../context";
import { clear, el } from "../dom";
import { t, translateFlag } from "../i18n";
import type { ExpiredPayload } from "../types";

// Annotated result, rendered like the original layout: each option on its
// own line, with the flag appended after the chosen/correct options.
export async function renderResult(ctx: Ctx, resultId: number): Promise<void> {
  const detail = await ctx.client.resultDetail(resultId);
  clear(ctx.root);
  const locale = ctx.locale;

  const questionBlocks = detail.questions.map((question) => {
    const lines = question.options.map((choice) => {
      const flag = choice.flag === null ? "" : ` ----- ${translateFlag(choice.flag, locale)}`;
      return el(
        "li",
        {
          "data-testid": "result-option",
          "data-option-id": String(choice.option_id),
          "data-flag": choice.flag ?? "",
        },
        `--- ${choice.text}${flag}`,
      );
    });
    return el(
      "div",
      { "data-testid": "result-question", "data-position": String(question.position) },
      el("h3", {}, `${question.position}. ${question.text}`),
      el("ul", {}, ...lines),
    );
  });

  const backLink = el("a", { href: "#", "data-testid": "back-home" }, "Inapoi la teste");
  backLink.addEventListener("click", (event) => {
    event.preventDefault();
    void ctx.go.home();
  });

  ctx.root.append(
    el(
      "div",
      { "data-testid": "result-page" },
      el("p", {}, `${t(locale, "user")}:${detail.username}`),
      el(
        "h2",
        { "data-testid": "score-header" },
        t(locale, "scoreHeader", { count: detail.score }),
      ),
      ...questionBlocks,
      backLink,
    ),
  );
}

// The page shown when the time limit was exceeded.
export function renderExpired(ctx: Ctx, payload: ExpiredPayload): void {
  clear(ctx.root);
  const detailLink = el("a", { href: "#", "data-testid": "expired-detail" }, "Vezi rezultatul");
  detailLink.addEventListener("click", (event) => {
    event.preventDefault();
    void ctx.go.result(payload.result_id);
  });
  const backLink = el("a", { href: "#", "data-testid": "back-home" }, "Inapoi la teste");
  backLink.addEventListener("click", (event) => {
    event.preventDefault();
    void ctx.go.home();
  });
  ctx.root.append(
    el(
      "div",
      { "data-testid": "expired-page" },
      el("h2", {}, payload.message),
      el(
        "p",
        {},
        `Test intrerupt la intrebarea ${payload.answered_count + 1}. ` +
          `Scor: ${payload.score} din ${payload.answered_count} raspunsuri date.`,
      ),
      detailLink,
      " ",
      backLink,
    ),
  );
}
