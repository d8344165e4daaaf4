import { ApiError } from "../api";
import type { Ctx } from "../context";
import { clear, el, option } from "../dom";
import { formatDate, formatTime, t } from "../i18n";
import type { ResultRow } from "../types";

const PRE_TEST_WARNING =
  "Atentie: nu puteti reveni la o intrebare dupa ce ati trecut mai departe.";

// Test-taker landing page: cascading catalog picker on the left (domain ->
// subdomain -> test), education links, and the last-20 history on the right.
export async function renderHome(ctx: Ctx): Promise<void> {
  clear(ctx.root);
  const locale = ctx.locale;

  const domainSelect = el("select", { "data-testid": "domain-select" });
  const subdomainSelect = el("select", { "data-testid": "subdomain-select" });
  const testSelect = el("select", { "data-testid": "test-select" });
  const applyButton = el("button", { "data-testid": "apply-button" }, t(locale, "apply"));
  const status = el("p", { class: "status", "data-testid": "home-status" });

  const repopulateTests = async () => {
    clear(testSelect);
    const subdomainId = Number(subdomainSelect.value);
    if (!subdomainId) return;
    for (const test of await ctx.client.tests(subdomainId)) {
      testSelect.append(option(String(test.id), `${test.title} (${test.question_count})`));
    }
  };

  const repopulateSubdomains = async () => {
    clear(subdomainSelect);
    const domainId = Number(domainSelect.value);
    if (!domainId) return;
    for (const sub of await ctx.client.subdomains(domainId)) {
      subdomainSelect.append(option(String(sub.id), sub.name));
    }
    await repopulateTests();
  };

  domainSelect.addEventListener("change", () => void repopulateSubdomains());
  subdomainSelect.addEventListener("change", () => void repopulateTests());

  applyButton.addEventListener("click", async () => {
    const testId = Number(testSelect.value);
    if (!testId) return;
    applyButton.disabled = true;
    try {
      const started = await ctx.client.startSession(testId);
      await ctx.go.test(started);
    } catch (error) {
      status.textContent = error instanceof ApiError ? error.message : String(error);
      applyButton.disabled = false;
    }
  });

  const linkList = el("ul", { "data-testid": "education-links" });
  const historyBody = el("tbody", {});

  const sidebar = el(
    "aside",
    { class: "sidebar" },
    el("h1", {}, "Teste online"),
    el("h2", {}, "Teste grila"),
    el(
      "div",
      { class: "picker" },
      el("label", {}, t(locale, "domain"), " ", domainSelect),
      el("label", {}, t(locale, "subdomain"), " ", subdomainSelect),
      el("label", {}, t(locale, "test"), " ", testSelect),
      applyButton,
    ),
    el("p", { "data-testid": "pre-test-warning", class: "warning" }, PRE_TEST_WARNING),
    el("h3", {}, "Linkuri educationale"),
    linkList,
  );

  const main = el(
    "main",
    {},
    el(
      "p",
      { "data-testid": "user-line" },
      `${t(locale, "user")}: ${ctx.user?.username ?? ""}`,
    ),
    status,
    el("h2", {}, t(locale, "history")),
    el(
      "table",
      { "data-testid": "history-table" },
      el(
        "thead",
        {},
        el(
          "tr",
          {},
          el("th", {}, t(locale, "test")),
          el("th", {}, "Scor"),
          el("th", {}, "Rezultat"),
          el("th", {}, t(locale, "date")),
          el("th", {}, ""),
        ),
      ),
      historyBody,
    ),
  );

  ctx.root.append(el("div", { class: "layout" }, sidebar, main));

  const [domains, links, history] = await Promise.all([
    ctx.client.domains(),
    ctx.client.links(),
    ctx.client.results(20),
  ]);

  for (const domain of domains) {
    domainSelect.append(option(String(domain.id), domain.name));
  }
  await repopulateSubdomains();

  for (const link of links) {
    linkList.append(el("li", {}, el("a", { href: link.url, target: "_blank" }, link.label)));
  }

  for (const row of history) {
    historyBody.append(historyRow(ctx, row));
  }
}

function historyRow(ctx: Ctx, row: ResultRow): HTMLTableRowElement {
  const detailLink = el("a", { href: "#", "data-testid": `result-link-${row.id}` }, "detalii");
  detailLink.addEventListener("click", (event) => {
    event.preventDefault();
    void ctx.go.result(row.id);
  });
  return el(
    "tr",
    { class: "history-row" },
    el("td", {}, row.test_title ?? `#${row.test_id}`),
    el("td", {}, `${row.score}/${row.total_questions}`),
    el("td", {}, row.outcome === "expired" ? "expirat" : "incheiat"),
    el("td", {}, `${formatDate(row.finished_at)} ${formatTime(row.finished_at)}`),
    el("td", {}, detailLink),
  );
}
