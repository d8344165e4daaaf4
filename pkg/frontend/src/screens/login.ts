import { ApiError } from "../api";
import type { Ctx } from "../context";
import { clear, el } from "../dom";

// Login, registration, and password recovery on one screen.
export function renderLogin(ctx: Ctx, message = ""): void {
  clear(ctx.root);

  const status = el("p", { "data-testid": "login-status", class: "status" }, message);

  const username = el("input", { name: "username", autocomplete: "username" });
  const password = el("input", { name: "password", type: "password" });
  const loginButton = el("button", { "data-testid": "login-button" }, "Conectare");
  loginButton.addEventListener("click", async () => {
    try {
      const response = await ctx.client.login(username.value, password.value);
      ctx.user = response.user;
      if (response.user.role === "supervisor") {
        await ctx.go.admin();
      } else {
        await ctx.go.home();
      }
    } catch (error) {
      status.textContent = error instanceof ApiError ? error.message : String(error);
    }
  });

  const regUsername = el("input", { name: "reg-username" });
  const regPassword = el("input", { name: "reg-password", type: "password" });
  const regName = el("input", { name: "reg-name" });
  const regFirstName = el("input", { name: "reg-first-name" });
  const regEmail = el("input", { name: "reg-email" });
  const registerButton = el(
    "button",
    { "data-testid": "register-button" },
    "Creeaza cont",
  );
  registerButton.addEventListener("click", async () => {
    try {
      await ctx.client.register({
        username: regUsername.value,
        password: regPassword.value,
        name: regName.value,
        first_name: regFirstName.value,
        email: regEmail.value,
      });
      status.textContent = "Cont creat. Va puteti conecta.";
    } catch (error) {
      status.textContent = error instanceof ApiError ? error.message : String(error);
    }
  });

  const recoverEmail = el("input", { name: "recover-email" });
  const recoverButton = el(
    "button",
    { "data-testid": "recover-button" },
    "Recupereaza parola",
  );
  recoverButton.addEventListener("click", async () => {
    await ctx.client.recover(recoverEmail.value);
    status.textContent = "Daca adresa exista, veti primi instructiuni.";
  });

  ctx.root.append(
    el("h1", {}, "Teste online"),
    status,
    el(
      "section",
      { "data-testid": "login-form" },
      el("h2", {}, "Conectare"),
      el("label", {}, "Utilizator ", username),
      el("label", {}, "Parola ", password),
      loginButton,
    ),
    el(
      "section",
      { "data-testid": "register-form" },
      el("h2", {}, "Cont nou"),
      el("label", {}, "Utilizator ", regUsername),
      el("label", {}, "Parola ", regPassword),
      el("label", {}, "Nume ", regName),
      el("label", {}, "Prenume ", regFirstName),
      el("label", {}, "Email ", regEmail),
      registerButton,
    ),
    el(
      "section",
      { "data-testid": "recover-form" },
      el("h2", {}, "Parola uitata"),
      el("label", {}, "Email ", recoverEmail),
      recoverButton,
    ),
  );
}
