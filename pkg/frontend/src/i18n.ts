// Romanian is the canonical locale; the English table ships alongside.
// Server-sent flag strings are canonical identifiers and are translated
// here for display when the locale is not Romanian.

export type Locale = "ro" | "en";

export const STRINGS: Record<Locale, Record<string, string>> = {
  ro: {
    scoreHeader: "Raspunsuri corecte=> {count}",
    runningScore: "Scor curent: {count}",
    timeExpired: "Time expired",
    apply: "Aplica",
    domain: "Domeniul",
    subdomain: "Subdomeniul",
    test: "Testul",
    user: "User",
    name: "Nume",
    firstName: "Prenume",
    date: "Data",
    startTime: "Ora de start",
    finalTime: "Ora finala",
    remaining: "Timp ramas",
    submitAnswer: "Trimite raspunsul",
    history: "Ultimele 20 de teste",
    question: "Intrebarea {position} din {total}",
  },
  en: {
    scoreHeader: "Correct answers=> {count}",
    runningScore: "Running score: {count}",
    timeExpired: "Time expired",
    apply: "Apply",
    domain: "Domain",
    subdomain: "Subdomain",
    test: "Test",
    user: "User",
    name: "Name",
    firstName: "First name",
    date: "Date",
    startTime: "Start time",
    finalTime: "Final time",
    remaining: "Time remaining",
    submitAnswer: "Submit answer",
    history: "Last 20 tests",
    question: "Question {position} of {total}",
  },
};

const FLAG_TRANSLATIONS: Array<{ ro: RegExp; en: (m: RegExpMatchArray) => string }> = [
  {
    ro: /^Raspunsul corect este: (.*)$/,
    en: (m) => `The correct answer is: ${m[1]}`,
  },
  {
    ro: /^Acesta este raspunsul corect$/,
    en: () => "This is the correct answer",
  },
];

export function t(
  locale: Locale,
  key: string,
  params: Record<string, string | number> = {},
): string {
  let text = STRINGS[locale][key] ?? STRINGS.ro[key] ?? key;
  for (const [name, value] of Object.entries(params)) {
    text = text.replace(`{${name}}`, String(value));
  }
  return text;
}

export function translateFlag(flag: string, locale: Locale): string {
  if (locale === "ro") return flag;
  for (const rule of FLAG_TRANSLATIONS) {
    const match = flag.match(rule.ro);
    if (match) return rule.en(match);
  }
  return flag;
}

export function formatDate(ts: number): string {
  return new Date(ts * 1000).toLocaleDateString();
}

export function formatTime(ts: number): string {
  return new Date(ts * 1000).toLocaleTimeString();
}
