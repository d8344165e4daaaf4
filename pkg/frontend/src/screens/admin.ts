import { ApiError } from "../api";
import type { Ctx } from "../context";
import { clear, el, option } from "../dom";
import { formatDate, formatTime } from "../i18n";

// Supervisor console: input tests, browse every user's results, delete
// results or tests, modify registrations, manage user activation.
export async function renderAdmin(ctx: Ctx): Promise<void> {
  clear(ctx.root);
  const status = el("p", { class: "status", "data-testid": "admin-status" });

  const report = (error: unknown) => {
    status.textContent = error instanceof ApiError ? error.message : String(error);
  };

  const menu = el(
    "nav",
    { "data-testid": "admin-menu" },
    el("h1", {}, "Consola supervizorului"),
    el(
      "ul",
      {},
      el("li", {}, "Introducere teste"),
      el("li", {}, "Rezultatele utilizatorilor"),
      el("li", {}, "Stergere teste"),
      el("li", {}, "Modificare registrari"),
      el("li", {}, "Utilizatori"),
    ),
  );

  // -- catalog browser + test deletion -------------------------------------
  const domainSelect = el("select", { "data-testid": "admin-domain-select" });
  const subdomainSelect = el("select", { "data-testid": "admin-subdomain-select" });
  const testList = el("ul", { "data-testid": "admin-test-list" });

  const refreshTests = async () => {
    clear(testList);
    const subdomainId = Number(subdomainSelect.value);
    if (!subdomainId) return;
    for (const test of await ctx.client.tests(subdomainId)) {
      const remove = el(
        "button",
        { "data-testid": `delete-test-${test.id}` },
        "Sterge",
      );
      remove.addEventListener("click", async () => {
        try {
          await ctx.client.adminDeleteTest(test.id);
          status.textContent = `Testul ${test.title} a fost sters.`;
          await refreshTests();
        } catch (error) {
          report(error);
        }
      });
      testList.append(
        el("li", {}, `${test.title} (${test.question_count}) `, remove),
      );
    }
  };

  const refreshSubdomains = async () => {
    clear(subdomainSelect);
    const domainId = Number(domainSelect.value);
    if (!domainId) return;
    for (const sub of await ctx.client.subdomains(domainId)) {
      subdomainSelect.append(option(String(sub.id), sub.name));
    }
    await refreshTests();
  };

  domainSelect.addEventListener("change", () => void refreshSubdomains());
  subdomainSelect.addEventListener("change", () => void refreshTests());

  // -- test authoring -------------------------------------------------------
  const titleInput = el("input", { name: "test-title" });
  const timeLimitInput = el("input", { name: "time-limit", type: "number", value: "600" });
  const ordinalInput = el("input", { name: "ordinal", type: "number", value: "1" });
  const questionsContainer = el("div", { "data-testid": "bundle-questions" });

  const addQuestionButton = el("button", { "data-testid": "add-question" }, "Adauga intrebare");
  const addQuestion = () => {
    const index = questionsContainer.children.length;
    const text = el("input", { name: `question-${index}`, class: "question-text" });
    const optionRows = el("div", {});
    for (let i = 0; i < 4; i++) {
      optionRows.append(
        el(
          "label",
          { class: "option" },
          el("input", {
            type: "radio",
            name: `correct-${index}`,
            value: String(i),
            ...(i === 0 ? { checked: "" } : {}),
          }),
          el("input", { name: `option-${index}-${i}`, class: "option-text" }),
        ),
      );
    }
    questionsContainer.append(
      el("fieldset", { class: "question-spec" }, el("label", {}, "Intrebare ", text), optionRows),
    );
  };
  addQuestionButton.addEventListener("click", addQuestion);
  addQuestion();

  const createTestButton = el("button", { "data-testid": "create-test" }, "Salveaza testul");
  createTestButton.addEventListener("click", async () => {
    const subdomainId = Number(subdomainSelect.value);
    const questions = Array.from(
      questionsContainer.querySelectorAll<HTMLFieldSetElement>(".question-spec"),
    ).map((fieldset, index) => {
      const text =
        fieldset.querySelector<HTMLInputElement>(".question-text")?.value ?? "";
      const checked =
        fieldset.querySelector<HTMLInputElement>(`input[name="correct-${index}"]:checked`)
          ?.value ?? "0";
      const options = Array.from(
        fieldset.querySelectorAll<HTMLInputElement>(".option-text"),
      )
        .map((input, optionIndex) => ({
          text: input.value,
          is_correct: optionIndex === Number(checked),
        }))
        .filter((item) => item.text.trim() !== "");
      return { text, options };
    });
    try {
      const created = await ctx.client.adminCreateTest({
        subdomain_id: subdomainId,
        title: titleInput.value,
        time_limit_seconds: Number(timeLimitInput.value),
        ordinal: Number(ordinalInput.value),
        questions,
      });
      status.textContent = `Test creat (id ${created.id}).`;
      await refreshTests();
    } catch (error) {
      report(error);
    }
  });

  // -- results oversight ------------------------------------------------------
  const resultsBody = el("tbody", { "data-testid": "admin-results-body" });
  const filterInput = el("input", { name: "filter-user-id", placeholder: "user id" });
  const refreshResults = async () => {
    clear(resultsBody);
    const filter = filterInput.value.trim();
    const rows = await ctx.client.adminResults(filter ? Number(filter) : undefined);
    for (const row of rows) {
      const remove = el(
        "button",
        { "data-testid": `delete-result-${row.id}` },
        "Sterge",
      );
      remove.addEventListener("click", async () => {
        try {
          await ctx.client.adminDeleteResult(row.id);
          await refreshResults();
        } catch (error) {
          report(error);
        }
      });
      resultsBody.append(
        el(
          "tr",
          { class: "admin-result-row" },
          el("td", {}, row.username),
          el("td", {}, row.test_title ?? `#${row.test_id}`),
          el("td", {}, `${row.score}/${row.total_questions}`),
          el("td", {}, row.outcome),
          el("td", {}, `${formatDate(row.finished_at)} ${formatTime(row.finished_at)}`),
          el("td", {}, remove),
        ),
      );
    }
  };
  const filterButton = el("button", { "data-testid": "filter-results" }, "Filtreaza");
  filterButton.addEventListener("click", () => void refreshResults());

  // -- registration editing -----------------------------------------------------
  const kindSelect = el(
    "select",
    { "data-testid": "edit-kind" },
    option("domains", "domeniu"),
    option("subdomains", "subdomeniu"),
    option("tests", "test"),
    option("questions", "intrebare"),
    option("options", "varianta"),
  );
  const idInput = el("input", { name: "edit-id", type: "number" });
  const fieldInput = el("input", { name: "edit-field", placeholder: "camp" });
  const valueInput = el("input", { name: "edit-value", placeholder: "valoare" });
  const editButton = el("button", { "data-testid": "apply-edit" }, "Modifica");
  editButton.addEventListener("click", async () => {
    const kind = kindSelect.value as
      | "domains"
      | "subdomains"
      | "tests"
      | "questions"
      | "options";
    const field = fieldInput.value.trim();
    const raw = valueInput.value;
    const numeric = ["position", "time_limit_seconds", "ordinal", "domain_id", "subdomain_id"];
    const value: unknown =
      field === "is_correct" ? raw === "true" : numeric.includes(field) ? Number(raw) : raw;
    try {
      await ctx.client.adminUpdate(kind, Number(idInput.value), { [field]: value });
      status.textContent = "Registrare modificata.";
      await refreshTests();
    } catch (error) {
      report(error);
    }
  });

  // -- user management --------------------------------------------------------------
  const usersBody = el("tbody", { "data-testid": "admin-users-body" });
  const refreshUsers = async () => {
    clear(usersBody);
    for (const user of await ctx.client.adminUsers()) {
      const toggle = el(
        "button",
        { "data-testid": `toggle-user-${user.id}` },
        user.active ? "Dezactiveaza" : "Activeaza",
      );
      toggle.addEventListener("click", async () => {
        try {
          await ctx.client.adminSetUserActive(user.id, !user.active);
          await refreshUsers();
        } catch (error) {
          report(error);
        }
      });
      usersBody.append(
        el(
          "tr",
          { class: "admin-user-row" },
          el("td", {}, user.username),
          el("td", {}, user.role),
          el("td", {}, user.active ? "activ" : "inactiv"),
          el("td", {}, toggle),
        ),
      );
    }
  };

  const logout = el("a", { href: "#", "data-testid": "logout" }, "Deconectare");
  logout.addEventListener("click", (event) => {
    event.preventDefault();
    ctx.client.setToken(null);
    ctx.user = null;
    ctx.go.login();
  });

  ctx.root.append(
    menu,
    status,
    el(
      "section",
      { "data-testid": "admin-catalog" },
      el("h2", {}, "Catalog si stergere teste"),
      el("label", {}, "Domeniul ", domainSelect),
      el("label", {}, "Subdomeniul ", subdomainSelect),
      testList,
    ),
    el(
      "section",
      { "data-testid": "admin-create-test" },
      el("h2", {}, "Introducere teste"),
      el("label", {}, "Titlu ", titleInput),
      el("label", {}, "Limita de timp (s) ", timeLimitInput),
      el("label", {}, "Numar ", ordinalInput),
      questionsContainer,
      addQuestionButton,
      createTestButton,
    ),
    el(
      "section",
      { "data-testid": "admin-results" },
      el("h2", {}, "Rezultatele utilizatorilor"),
      el("label", {}, "Filtru ", filterInput, filterButton),
      el(
        "table",
        {},
        el(
          "thead",
          {},
          el(
            "tr",
            {},
            el("th", {}, "Utilizator"),
            el("th", {}, "Test"),
            el("th", {}, "Scor"),
            el("th", {}, "Rezultat"),
            el("th", {}, "Data"),
            el("th", {}, ""),
          ),
        ),
        resultsBody,
      ),
    ),
    el(
      "section",
      { "data-testid": "admin-edit" },
      el("h2", {}, "Modificare registrari"),
      el("label", {}, "Tip ", kindSelect),
      el("label", {}, "Id ", idInput),
      el("label", {}, "Camp ", fieldInput),
      el("label", {}, "Valoare ", valueInput),
      editButton,
    ),
    el(
      "section",
      { "data-testid": "admin-users" },
      el("h2", {}, "Utilizatori"),
      el(
        "table",
        {},
        el(
          "thead",
          {},
          el(
            "tr",
            {},
            el("th", {}, "Utilizator"),
            el("th", {}, "Rol"),
            el("th", {}, "Stare"),
            el("th", {}, ""),
          ),
        ),
        usersBody,
      ),
    ),
    logout,
  );

  const domains = await ctx.client.domains();
  for (const domain of domains) {
    domainSelect.append(option(String(domain.id), domain.name));
  }
  await refreshSubdomains();
  await refreshResults();
  await refreshUsers();
}
