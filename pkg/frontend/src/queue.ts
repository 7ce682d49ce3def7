import type { ServiceClient } from './api'
import type { KeyValueStore } from './storage'
import type { FeedbackEvent } from './types'

const QUEUE_KEY = 'pending_actions'

/** Ordered, persisted queue of feedback actions. Every action goes
 * through the queue; a flush drains it head-first and stops at the
 * first network failure so order is preserved across reconnects. */
export class ActionQueue {
  private flushing = false

  constructor(
    private store: KeyValueStore,
    private client: ServiceClient,
  ) {}

  private async load(): Promise<FeedbackEvent[]> {
    const raw = await this.store.get(QUEUE_KEY)
    if (!raw) return []
    try {
      return JSON.parse(raw) as FeedbackEvent[]
    } catch {
      return []
    }
  }

  private async save(events: FeedbackEvent[]): Promise<void> {
    await this.store.set(QUEUE_KEY, JSON.stringify(events))
  }

  async pending(): Promise<FeedbackEvent[]> {
    return this.load()
  }

  /** Enqueue and immediately attempt a flush. */
  async submit(event: FeedbackEvent): Promise<void> {
    const events = await this.load()
    events.push(event)
    await this.save(events)
    await this.flush()
  }

  /** Sends queued events in order; on the first failure the remainder
   * stays queued for the next flush. Returns how many were delivered. */
  async flush(): Promise<number> {
    if (this.flushing) return 0
    this.flushing = true
    let delivered = 0
    try {
      let events = await this.load()
      while (events.length > 0) {
        try {
          await this.client.feedback(events[0])
        } catch {
          break
        }
        events = events.slice(1)
        await this.save(events)
        delivered += 1
      }
    } finally {
      this.flushing = false
    }
    return delivered
  }
}
