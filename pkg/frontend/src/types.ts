export enum AnchorState {
  Pending = 'pending',
  Marked = 'marked',
  Unmarked = 'unmarked',
  Blocked = 'blocked',
}

export interface ScannedAnchor {
  element: HTMLAnchorElement
  text: string | null
  href: string
  state: AnchorState
}

export type FeedbackKind =
  | 'BlockSimilar'
  | 'ReportFalsePositive'
  | 'ReportFalseNegative'
  | 'Clicked'

export interface FeedbackEvent {
  user: string
  kind: FeedbackKind
  headline: string
  url: string | null
  timestamp: number
}

export interface ClassifyItem {
  text: string
  label?: 'clickbait' | 'news'
  score?: number
  block?: boolean
  error?: { code: string; message: string }
}

export interface ClassifyResponse {
  version: number
  results: ClassifyItem[]
}

/** Allowed state transitions: Pending -> Marked/Unmarked, Marked -> Blocked. */
export function canTransition(from: AnchorState, to: AnchorState): boolean {
  if (from === AnchorState.Pending) {
    return to === AnchorState.Marked || to === AnchorState.Unmarked
  }
  if (from === AnchorState.Marked) {
    return to === AnchorState.Blocked
  }
  return false
}
