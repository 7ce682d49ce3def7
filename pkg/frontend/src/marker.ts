import type { ServiceClient } from './api'
import type { ActionQueue } from './queue'
import { AnchorState, canTransition, type ClassifyItem, type FeedbackKind, type ScannedAnchor } from './types'

export const INDICATOR_CLASS = 'clickshield-indicator'
export const MENU_CLASS = 'clickshield-menu'
export const PLACEHOLDER_CLASS = 'clickshield-blocked'

export interface MarkerOptions {
  debounceMs?: number
  batchSize?: number
  maxRetries?: number
  backoffMs?: number
}

/** Applies classification results to scanned anchors: batches requests,
 * injects indicators on clickbait links, and turns the reader's block /
 * misclassified / report actions into feedback events.
 *
 * Only elements this class created (indicator, menu, placeholder) are
 * ever added, and only anchors it marked are ever hidden; the rest of
 * the page is untouched. */
export class Marker {
  private pending: ScannedAnchor[] = []
  private timer: ReturnType<typeof setTimeout> | null = null
  private attempts = 0
  private lastTimestamp = 0

  private readonly debounceMs: number
  private readonly batchSize: number
  private readonly maxRetries: number
  private readonly backoffMs: number

  constructor(
    private client: ServiceClient,
    private queue: ActionQueue,
    private userId: string,
    options: MarkerOptions = {},
  ) {
    this.debounceMs = options.debounceMs ?? 250
    this.batchSize = options.batchSize ?? 50
    this.maxRetries = options.maxRetries ?? 3
    this.backoffMs = options.backoffMs ?? 500
  }

  /** Queue anchors for classification; the request fires after the
   * debounce window closes. */
  add(anchors: ScannedAnchor[]): void {
    this.pending.push(...anchors.filter((a) => a.text !== null || a.href !== ''))
    if (this.timer !== null) clearTimeout(this.timer)
    this.timer = setTimeout(() => {
      this.timer = null
      void this.processPending()
    }, this.debounceMs)
  }

  private transition(anchor: ScannedAnchor, to: AnchorState): void {
    if (!canTransition(anchor.state, to)) {
      throw new Error(`illegal transition ${anchor.state} -> ${to}`)
    }
    anchor.state = to
  }

  private async processPending(): Promise<void> {
    const batch = this.pending
    this.pending = []
    const withText = batch.filter((a) => a.text !== null)
    const textless = batch.filter((a) => a.text === null)
    try {
      for (let i = 0; i < withText.length; i += this.batchSize) {
        const slice = withText.slice(i, i + this.batchSize)
        const resp = await this.client.classify(
          slice.map((a) => a.text as string),
          this.userId,
        )
        slice.forEach((anchor, j) => this.apply(anchor, resp.results[j]))
      }
      this.attempts = 0
    } catch {
      this.retry(withText.filter((a) => a.state === AnchorState.Pending))
    }
    for (const anchor of textless) {
      try {
        const out = await this.client.classifyUrl(anchor.href, this.userId)
        anchor.text = out.title
        this.apply(anchor, out.result)
      } catch {
        this.transition(anchor, AnchorState.Unmarked)
      }
    }
  }

  /** Service unreachable: leave anchors visually untouched and retry
   * with exponential backoff; give up to Unmarked after maxRetries. */
  private retry(anchors: ScannedAnchor[]): void {
    if (anchors.length === 0) return
    if (this.attempts >= this.maxRetries) {
      this.attempts = 0
      for (const anchor of anchors) this.transition(anchor, AnchorState.Unmarked)
      return
    }
    const delay = this.backoffMs * 2 ** this.attempts
    this.attempts += 1
    this.pending.push(...anchors)
    setTimeout(() => void this.processPending(), delay)
  }

  private apply(anchor: ScannedAnchor, item: ClassifyItem | undefined): void {
    if (!item || item.error) {
      this.transition(anchor, AnchorState.Unmarked)
      return
    }
    if (item.label !== 'clickbait') {
      this.transition(anchor, AnchorState.Unmarked)
      return
    }
    this.transition(anchor, AnchorState.Marked)
    this.injectIndicator(anchor)
    if (item.block) {
      // the user's profile already condemns similar content
      this.blockAnchor(anchor, false)
    }
  }

  private injectIndicator(anchor: ScannedAnchor): void {
    const doc = anchor.element.ownerDocument
    const button = doc.createElement('button')
    button.className = INDICATOR_CLASS
    button.type = 'button'
    button.textContent = 'clickbait'
    button.addEventListener('click', () => this.openMenu(anchor, button))
    anchor.element.insertAdjacentElement('afterend', button)
  }

  private openMenu(anchor: ScannedAnchor, indicator: HTMLElement): void {
    const doc = anchor.element.ownerDocument
    if (indicator.nextElementSibling?.classList.contains(MENU_CLASS)) return
    const menu = doc.createElement('span')
    menu.className = MENU_CLASS
    const block = doc.createElement('button')
    block.type = 'button'
    block.textContent = 'block similar'
    block.addEventListener('click', () => {
      menu.remove()
      void this.blockAnchor(anchor, true)
    })
    const wrong = doc.createElement('button')
    wrong.type = 'button'
    wrong.textContent = 'not clickbait'
    wrong.addEventListener('click', () => {
      menu.remove()
      void this.misclassified(anchor)
    })
    menu.append(block, wrong)
    indicator.insertAdjacentElement('afterend', menu)
  }

  private timestamp(): number {
    this.lastTimestamp = Math.max(Date.now(), this.lastTimestamp + 1)
    return this.lastTimestamp
  }

  private sendFeedback(kind: FeedbackKind, anchor: ScannedAnchor): Promise<void> {
    return this.queue.submit({
      user: this.userId,
      kind,
      headline: anchor.text ?? anchor.href,
      url: anchor.href || null,
      timestamp: this.timestamp(),
    })
  }

  /** Hide the link behind a visible "blocked — undo" placeholder and,
   * when user-initiated, send BlockSimilar feedback. */
  async blockAnchor(anchor: ScannedAnchor, userInitiated: boolean): Promise<void> {
    if (anchor.state !== AnchorState.Marked) return
    this.transition(anchor, AnchorState.Blocked)
    const doc = anchor.element.ownerDocument
    const placeholder = doc.createElement('span')
    placeholder.className = PLACEHOLDER_CLASS
    placeholder.append(doc.createTextNode('blocked — '))
    const undo = doc.createElement('button')
    undo.type = 'button'
    undo.textContent = 'undo'
    undo.addEventListener('click', () => {
      anchor.element.style.removeProperty('display')
      placeholder.remove()
    })
    placeholder.append(undo)
    anchor.element.insertAdjacentElement('beforebegin', placeholder)
    anchor.element.style.setProperty('display', 'none')
    if (userInitiated) {
      await this.sendFeedback('BlockSimilar', anchor)
    }
  }

  /** The indicator was wrong: remove it and tell the service. */
  async misclassified(anchor: ScannedAnchor): Promise<void> {
    const sibling = anchor.element.nextElementSibling
    if (sibling?.classList.contains(INDICATOR_CLASS)) sibling.remove()
    await this.sendFeedback('ReportFalsePositive', anchor)
  }

  /** The reader flags an unmarked link as clickbait. */
  async reportUnmarked(anchor: ScannedAnchor): Promise<void> {
    if (anchor.text === null) return
    await this.sendFeedback('ReportFalseNegative', anchor)
  }
}
