// Wire types mirroring the backend's JSON payloads.

export type RoleName = "supervisor" | "regular";

export interface AccountInfo {
  id: number;
  username: string;
  name: string;
  first_name: string;
  email: string;
  role: RoleName;
  created_at: number;
  active: boolean;
}

export interface LoginResponse {
  token: string;
  expires_at: number;
  user: AccountInfo;
}

export interface DomainInfo {
  id: number;
  name: string;
}

export interface SubdomainInfo {
  id: number;
  domain_id: number;
  name: string;
}

export interface TestInfo {
  id: number;
  title: string;
  time_limit_seconds: number;
  ordinal: number;
  question_count: number;
}

export interface StartedSession {
  session_id: number;
  test_id: number;
  test_title: string;
  total_questions: number;
  started_at: number;
  deadline: number;
  time_limit_seconds: number;
  warning: string;
}

export interface OptionItem {
  option_id: number;
  text: string;
}

export interface QuestionPayload {
  kind: "question";
  text: string;
  position: number;
  total_questions: number;
  remaining_seconds: number;
  options: OptionItem[];
}

export interface FinishedPayload {
  kind: "finished";
  result_id: number;
  score: number;
  answered_count: number;
  total_questions: number;
}

export interface ExpiredPayload {
  kind: "expired";
  message: string;
  result_id: number;
  score: number;
  answered_count: number;
  total_questions: number;
}

export type NextPayload = QuestionPayload | FinishedPayload | ExpiredPayload;

export interface AnswerOutcomePayload {
  correct: boolean | null;
  running_score: number;
  next: NextPayload;
}

export interface ResultRow {
  id: number;
  test_id: number;
  test_title?: string;
  score: number;
  total_questions: number;
  answered_count: number;
  started_at: number;
  finished_at: number;
  outcome: "completed" | "expired";
}

export interface AdminResultRow extends ResultRow {
  username: string;
}

export interface AnnotatedOptionPayload {
  option_id: number;
  text: string;
  flag: string | null;
}

export interface AnnotatedQuestionPayload {
  position: number;
  text: string;
  chosen_option_id: number | null;
  correct_option_id: number | null;
  options: AnnotatedOptionPayload[];
}

export interface AnnotatedResultPayload {
  result_id: number;
  username: string;
  name: string;
  first_name: string;
  score: number;
  total_questions: number;
  answered_count: number;
  outcome: "completed" | "expired";
  questions: AnnotatedQuestionPayload[];
}

export interface EducationLink {
  label: string;
  url: string;
}

export interface AdminUserRow {
  id: number;
  username: string;
  email: string;
  name: string;
  first_name: string;
  role: RoleName;
  active: boolean;
  created_at: number;
}

export interface TestBundleInput {
  subdomain_id: number;
  title: string;
  time_limit_seconds: number;
  ordinal: number;
  questions: Array<{
    text: string;
    options: Array<{ text: string; is_correct: boolean }>;
  }>;
}
