import { ApiError } from "../api";
import type { Ctx } from "../context";
import { Countdown, formatClock } from "../countdown";
import { clear, el } from "../dom";
import { formatDate, formatTime, t } from "../i18n";
import type { QuestionPayload, StartedSession } from "../types";

// Live test screen. Forward-only by construction: the only controls are the
// option radios and one submit button; no back/previous control ever exists.
// The countdown is display-only and re-synced from every server response;
// expiry authority stays with the server.
export async function renderTest(ctx: Ctx, started: StartedSession): Promise<void> {
  clear(ctx.root);
  const locale = ctx.locale;

  const countdownLabel = el(
    "span",
    { "data-testid": "countdown" },
    formatClock(started.time_limit_seconds),
  );
  const scoreLabel = el(
    "span",
    { "data-testid": "running-score" },
    t(locale, "runningScore", { count: 0 }),
  );
  const questionArea = el("div", { "data-testid": "question-area" });
  const status = el("p", { class: "status", "data-testid": "test-status" });

  const header = el(
    "header",
    { "data-testid": "test-header" },
    el("h2", {}, started.test_title),
    el(
      "p",
      {},
      `${t(locale, "user")}: ${ctx.user?.username ?? ""} | ` +
        `${t(locale, "name")}: ${ctx.user?.name ?? ""} | ` +
        `${t(locale, "firstName")}: ${ctx.user?.first_name ?? ""}`,
    ),
    el(
      "p",
      {},
      `${t(locale, "date")}: ${formatDate(started.started_at)} | ` +
        `${t(locale, "startTime")}: ${formatTime(started.started_at)} | ` +
        `${t(locale, "finalTime")}: ${formatTime(started.deadline)}`,
    ),
    el("p", {}, `${t(locale, "remaining")}: `, countdownLabel, " | ", scoreLabel),
  );

  const countdown = new Countdown(
    (seconds) => {
      countdownLabel.textContent = formatClock(seconds);
    },
    () => void onCountdownZero(),
  );

  async function onCountdownZero(): Promise<void> {
    // The display hit zero; ask the server, which owns expiry.
    try {
      const payload = await ctx.client.currentQuestion(started.session_id);
      if (payload.kind === "expired") {
        countdown.stop();
        ctx.go.expired(payload);
      } else {
        countdown.resync(payload.remaining_seconds);
        showQuestion(payload);
      }
    } catch {
      // Session already finalized elsewhere; nothing to render here.
    }
  }

  function showQuestion(view: QuestionPayload): void {
    clear(questionArea);
    const form = el("form", { "data-testid": "answer-form" });
    form.addEventListener("submit", (event) => event.preventDefault());
    const title = el(
      "h3",
      { "data-testid": "question-text" },
      `${view.position}. ${view.text}`,
    );
    const progress = el(
      "p",
      {},
      t(locale, "question", { position: view.position, total: view.total_questions }),
    );
    const submit = el(
      "button",
      { "data-testid": "submit-answer", type: "submit", disabled: "" },
      t(locale, "submitAnswer"),
    );
    const radios: HTMLInputElement[] = [];
    for (const choice of view.options) {
      const radio = el("input", {
        type: "radio",
        name: "option",
        value: String(choice.option_id),
      });
      radio.addEventListener("change", () => {
        submit.disabled = false;
      });
      radios.push(radio);
      form.append(el("label", { class: "option" }, radio, " ", choice.text));
    }
    submit.addEventListener("click", () => void submitAnswer(view, radios, submit));
    form.append(submit);
    questionArea.append(progress, title, form);
  }

  async function submitAnswer(
    view: QuestionPayload,
    radios: HTMLInputElement[],
    submit: HTMLButtonElement,
  ): Promise<void> {
    const chosen = radios.find((r) => r.checked);
    if (!chosen) return;
    // One in-flight request at most: everything locks until the reply.
    submit.disabled = true;
    for (const radio of radios) radio.disabled = true;
    try {
      const outcome = await ctx.client.submitAnswer(
        started.session_id,
        view.position,
        Number(chosen.value),
      );
      scoreLabel.textContent = t(locale, "runningScore", {
        count: outcome.running_score,
      });
      const next = outcome.next;
      if (next.kind === "question") {
        countdown.resync(next.remaining_seconds);
        showQuestion(next);
      } else if (next.kind === "finished") {
        countdown.stop();
        await ctx.go.result(next.result_id);
      } else {
        countdown.stop();
        ctx.go.expired(next);
      }
    } catch (error) {
      if (error instanceof ApiError && (error.code === "session_finished" || error.code === "forward_only")) {
        countdown.stop();
        await ctx.go.home();
        return;
      }
      status.textContent = error instanceof ApiError ? error.message : String(error);
      submit.disabled = false;
      for (const radio of radios) radio.disabled = false;
    }
  }

  ctx.root.append(
    header,
    el("p", { "data-testid": "warning-banner", class: "warning" }, started.warning),
    status,
    questionArea,
  );

  const first = await ctx.client.currentQuestion(started.session_id);
  if (first.kind === "expired") {
    ctx.go.expired(first);
    return;
  }
  countdown.start(first.remaining_seconds);
  showQuestion(first);
}
