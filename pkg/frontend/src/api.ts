// JSON API client. Attaches the Bearer token to every request once logged
// in; error bodies always carry {error, message}, surfaced as ApiError.

import type {
  AccountInfo,
  AdminResultRow,
  AdminUserRow,
  AnnotatedResultPayload,
  AnswerOutcomePayload,
  DomainInfo,
  EducationLink,
  ExpiredPayload,
  LoginResponse,
  QuestionPayload,
  ResultRow,
  StartedSession,
  SubdomainInfo,
  TestBundleInput,
  TestInfo,
} from "./types";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private token: string | null = null;

  constructor(
    private baseUrl = "",
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  setToken(token: string | null): void {
    this.token = token;
  }

  getToken(): string | null {
    return this.token;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["Content-Type"] = "application/json";
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let code = "error";
      let message = `HTTP ${response.status}`;
      try {
        const data = await response.json();
        code = data.error ?? code;
        message = data.message ?? message;
      } catch {
        // non-JSON error body; keep the fallback message
      }
      throw new ApiError(response.status, code, message);
    }
    return response.json() as Promise<T>;
  }

  // accounts
  register(input: {
    username: string;
    password: string;
    name: string;
    first_name: string;
    email: string;
  }): Promise<AccountInfo> {
    return this.request("POST", "/api/register", input);
  }

  async login(username: string, password: string): Promise<LoginResponse> {
    const response = await this.request<LoginResponse>("POST", "/api/login", {
      username,
      password,
    });
    this.token = response.token;
    return response;
  }

  recover(email: string): Promise<{ status: string }> {
    return this.request("POST", "/api/recover", { email });
  }

  reset(ticket: string, newPassword: string): Promise<{ status: string }> {
    return this.request("POST", "/api/reset", { ticket, new_password: newPassword });
  }

  // catalog
  domains(): Promise<DomainInfo[]> {
    return this.request("GET", "/api/catalog/domains");
  }

  subdomains(domainId: number): Promise<SubdomainInfo[]> {
    return this.request("GET", `/api/catalog/domains/${domainId}/subdomains`);
  }

  tests(subdomainId: number): Promise<TestInfo[]> {
    return this.request("GET", `/api/catalog/subdomains/${subdomainId}/tests`);
  }

  // sessions
  startSession(testId: number): Promise<StartedSession> {
    return this.request("POST", "/api/sessions", { test_id: testId });
  }

  currentQuestion(sessionId: number): Promise<QuestionPayload | ExpiredPayload> {
    return this.request("GET", `/api/sessions/${sessionId}/question`);
  }

  submitAnswer(
    sessionId: number,
    position: number,
    optionId: number,
  ): Promise<AnswerOutcomePayload> {
    return this.request("POST", `/api/sessions/${sessionId}/answer`, {
      position,
      option_id: optionId,
    });
  }

  // results
  results(limit = 20): Promise<ResultRow[]> {
    return this.request("GET", `/api/results?limit=${limit}`);
  }

  resultDetail(resultId: number): Promise<AnnotatedResultPayload> {
    return this.request("GET", `/api/results/${resultId}`);
  }

  links(): Promise<EducationLink[]> {
    return this.request("GET", "/api/links");
  }

  // supervisor console
  adminCreateDomain(name: string): Promise<DomainInfo> {
    return this.request("POST", "/api/admin/domains", { name });
  }

  adminCreateSubdomain(domainId: number, name: string): Promise<SubdomainInfo> {
    return this.request("POST", "/api/admin/subdomains", {
      domain_id: domainId,
      name,
    });
  }

  adminCreateTest(bundle: TestBundleInput): Promise<{ id: number }> {
    return this.request("POST", "/api/admin/tests", bundle);
  }

  adminUpdate(
    kind: "domains" | "subdomains" | "tests" | "questions" | "options",
    id: number,
    patch: Record<string, unknown>,
  ): Promise<Record<string, unknown>> {
    return this.request("PUT", `/api/admin/${kind}/${id}`, patch);
  }

  adminDeleteTest(testId: number): Promise<{ deleted_rows: number }> {
    return this.request("DELETE", `/api/admin/tests/${testId}`);
  }

  adminResults(userId?: number): Promise<AdminResultRow[]> {
    const query = userId === undefined ? "" : `?user_id=${userId}`;
    return this.request("GET", `/api/admin/results${query}`);
  }

  adminDeleteResult(resultId: number): Promise<{ status: string }> {
    return this.request("DELETE", `/api/admin/results/${resultId}`);
  }

  adminUsers(): Promise<AdminUserRow[]> {
    return this.request("GET", "/api/admin/users");
  }

  adminSetUserActive(userId: number, active: boolean): Promise<AdminUserRow> {
    return this.request("PUT", `/api/admin/users/${userId}`, { active });
  }
}
