// Display-only countdown. The server owns expiry; this ticker is seeded
// from remaining_seconds and re-synced on every server response, so a
// tampered client clock changes nothing.

export class Countdown {
  private remaining = 0;
  private handle: ReturnType<typeof setInterval> | null = null;

  constructor(
    private onTick: (seconds: number) => void,
    private onZero: () => void,
  ) {}

  start(remainingSeconds: number): void {
    this.stop();
    this.remaining = Math.max(0, Math.floor(remainingSeconds));
    this.onTick(this.remaining);
    this.handle = setInterval(() => this.tick(), 1000);
  }

  resync(remainingSeconds: number): void {
    this.remaining = Math.max(0, Math.floor(remainingSeconds));
    this.onTick(this.remaining);
  }

  stop(): void {
    if (this.handle !== null) {
      clearInterval(this.handle);
      this.handle = null;
    }
  }

  private tick(): void {
    if (this.remaining <= 0) return;
    this.remaining -= 1;
    this.onTick(this.remaining);
    if (this.remaining === 0) {
      this.stop();
      this.onZero();
    }
  }
}

export function formatClock(totalSeconds: number): string {
  const seconds = Math.max(0, totalSeconds);
  const minutes = Math.floor(seconds / 60);
  const rest = seconds % 60;
  return `${String(minutes).padStart(2, "0")}:${String(rest).padStart(2, "0")}`;
}
