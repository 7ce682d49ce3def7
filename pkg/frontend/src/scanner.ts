import { AnchorState, type ScannedAnchor } from './types'

/** Finds anchor elements: one initial sweep, then a MutationObserver
 * for anchors inserted later. De-duplicates by element identity. */
export class PageScanner {
  private seen = new WeakSet<HTMLAnchorElement>()
  private observer: MutationObserver | null = null

  constructor(private onAnchors: (anchors: ScannedAnchor[]) => void) {}

  /** Sweep the document and start observing; returns the initial batch. */
  scan(root: Document): ScannedAnchor[] {
    const initial = this.collect(Array.from(root.querySelectorAll('a')))
    this.observer = new MutationObserver((mutations) => {
      const added: HTMLAnchorElement[] = []
      for (const mutation of mutations) {
        for (const node of Array.from(mutation.addedNodes)) {
          if (!(node instanceof Element)) continue
          if (node instanceof HTMLAnchorElement) added.push(node)
          added.push(...Array.from(node.querySelectorAll('a')))
        }
      }
      const fresh = this.collect(added)
      if (fresh.length > 0) this.onAnchors(fresh)
    })
    this.observer.observe(root, { childList: true, subtree: true })
    return initial
  }

  stop(): void {
    this.observer?.disconnect()
    this.observer = null
  }

  private collect(elements: HTMLAnchorElement[]): ScannedAnchor[] {
    const out: ScannedAnchor[] = []
    for (const element of elements) {
      if (this.seen.has(element)) continue
      this.seen.add(element)
      const href = element.getAttribute('href') ?? ''
      const text = element.textContent?.trim() || null
      if (!text && !href) continue // nothing to classify by
      out.push({ element, text, href, state: AnchorState.Pending })
    }
    return out
  }
}
