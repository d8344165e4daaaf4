import type { ApiClient } from "./api";
import type { Locale } from "./i18n";
import type { AccountInfo, ExpiredPayload, StartedSession } from "./types";

// Shared screen context: the API client, the mount point, the logged-in
// account, and navigation between screens.
export interface Ctx {
  client: ApiClient;
  root: HTMLElement;
  locale: Locale;
  user: AccountInfo | null;
  go: {
    login(): void;
    home(): Promise<void>;
    test(started: StartedSession): Promise<void>;
    result(resultId: number): Promise<void>;
    expired(payload: ExpiredPayload): void;
    admin(): Promise<void>;
  };
}
