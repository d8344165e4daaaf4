import { vi } from "vitest";

import type { ApiClient } from "../src/api";
import { createApp } from "../src/app";
import type { Ctx } from "../src/context";
import type {
  AccountInfo,
  AnnotatedResultPayload,
  AnswerOutcomePayload,
  ExpiredPayload,
  QuestionPayload,
  StartedSession,
} from "../src/types";

export function flush(): Promise<void> {
  // Settle chained promises from event handlers.
  return new Promise((resolve) => setTimeout(resolve, 0));
}

export const FLORY: AccountInfo = {
  id: 7,
  username: "flory",
  name: "Popescu",
  first_name: "Florina",
  email: "flory@example.ro",
  role: "regular",
  created_at: 1_700_000_000,
  active: true,
};

export const STARTED: StartedSession = {
  session_id: 11,
  test_id: 3,
  test_title: "Testul nr 3",
  total_questions: 3,
  started_at: 1_700_000_000,
  deadline: 1_700_000_600,
  time_limit_seconds: 600,
  warning: "Atentie: nu puteti reveni la o intrebare dupa ce ati trecut mai departe.",
};

export const QUESTION_1: QuestionPayload = {
  kind: "question",
  text: "Care este cel mai popular sport in Jamaica ?",
  position: 1,
  total_questions: 3,
  remaining_seconds: 600,
  options: [
    { option_id: 1, text: "Tae Kwon Do" },
    { option_id: 2, text: "Karate" },
    { option_id: 3, text: "Baseball" },
    { option_id: 4, text: "Inot" },
  ],
};

export const QUESTION_2: QuestionPayload = {
  kind: "question",
  text: "Care este cea mai veche capitala din lume ?",
  position: 2,
  total_questions: 3,
  remaining_seconds: 590,
  options: [
    { option_id: 5, text: "Atena" },
    { option_id: 6, text: "Roma" },
    { option_id: 7, text: "Damasc" },
  ],
};

export const EXPIRED: ExpiredPayload = {
  kind: "expired",
  message: "Time expired",
  result_id: 21,
  score: 1,
  answered_count: 2,
  total_questions: 3,
};

export const ANNOTATED: AnnotatedResultPayload = {
  result_id: 21,
  username: "flory",
  name: "Popescu",
  first_name: "Florina",
  score: 3,
  total_questions: 3,
  answered_count: 2,
  outcome: "expired",
  questions: [
    {
      position: 1,
      text: "Care este cel mai popular sport in Jamaica ?",
      chosen_option_id: 2,
      correct_option_id: 3,
      options: [
        { option_id: 1, text: "Tae Kwon Do", flag: null },
        { option_id: 2, text: "Karate", flag: "Raspunsul corect este: Baseball" },
        { option_id: 3, text: "Baseball", flag: "Acesta este raspunsul corect" },
        { option_id: 4, text: "Inot", flag: null },
      ],
    },
    {
      position: 2,
      text: "Care este cea mai veche capitala din lume ?",
      chosen_option_id: 7,
      correct_option_id: 7,
      options: [
        { option_id: 5, text: "Atena", flag: null },
        { option_id: 6, text: "Roma", flag: null },
        { option_id: 7, text: "Damasc", flag: "Acesta este raspunsul corect" },
      ],
    },
    {
      position: 3,
      text: "Cate lacuri intra in componenta Marilor Lacuri ?",
      chosen_option_id: null,
      correct_option_id: 10,
      options: [
        { option_id: 8, text: "2", flag: null },
        { option_id: 9, text: "7", flag: null },
        { option_id: 10, text: "5", flag: null },
      ],
    },
  ],
};

export function outcome(
  correct: boolean,
  runningScore: number,
  next: AnswerOutcomePayload["next"],
): AnswerOutcomePayload {
  return { correct, running_score: runningScore, next };
}

// Stub client: every screen-facing method is a vi.fn with a sane default;
// individual tests override what they need.
export function stubClient(overrides: Partial<Record<string, unknown>> = {}): ApiClient {
  const base = {
    setToken: vi.fn(),
    getToken: vi.fn(() => "token"),
    register: vi.fn(async () => FLORY),
    login: vi.fn(async () => ({ token: "t", expires_at: 0, user: FLORY })),
    recover: vi.fn(async () => ({ status: "ok" })),
    reset: vi.fn(async () => ({ status: "ok" })),
    domains: vi.fn(async () => [{ id: 1, name: "Teste grila" }]),
    subdomains: vi.fn(async () => [
      { id: 2, domain_id: 1, name: "Cultura generala" },
    ]),
    tests: vi.fn(async () => [
      { id: 3, title: "Testul nr 3", time_limit_seconds: 600, ordinal: 3, question_count: 9 },
    ]),
    links: vi.fn(async () => [
      { label: "Ministerul Educatiei", url: "https://edu.example.ro" },
    ]),
    results: vi.fn(async () => []),
    resultDetail: vi.fn(async () => ANNOTATED),
    startSession: vi.fn(async () => STARTED),
    currentQuestion: vi.fn(async () => QUESTION_1),
    submitAnswer: vi.fn(async () => outcome(true, 1, QUESTION_2)),
    adminCreateDomain: vi.fn(async () => ({ id: 1, name: "x" })),
    adminCreateSubdomain: vi.fn(async () => ({ id: 2, domain_id: 1, name: "x" })),
    adminCreateTest: vi.fn(async () => ({ id: 99 })),
    adminUpdate: vi.fn(async () => ({})),
    adminDeleteTest: vi.fn(async () => ({ deleted_rows: 16 })),
    adminResults: vi.fn(async () => []),
    adminDeleteResult: vi.fn(async () => ({ status: "deleted" })),
    adminUsers: vi.fn(async () => []),
    adminSetUserActive: vi.fn(async () => ({ ...FLORY, active: false })),
    ...overrides,
  };
  return base as unknown as ApiClient;
}

export function mountApp(client: ApiClient): Ctx {
  document.body.innerHTML = '<div id="app"></div>';
  const root = document.getElementById("app") as HTMLElement;
  const ctx = createApp(root, client);
  ctx.user = FLORY;
  return ctx;
}

export function byTestId(id: string): HTMLElement {
  const node = document.querySelector(`[data-testid="${id}"]`);
  if (!node) throw new Error(`missing [data-testid=${id}]`);
  return node as HTMLElement;
}

export function queryAllTestId(id: string): HTMLElement[] {
  return Array.from(document.querySelectorAll(`[data-testid="${id}"]`));
}
