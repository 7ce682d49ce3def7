import type { ClassifyResponse, FeedbackEvent } from './types'

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>

export class ServiceError extends Error {
  constructor(
    public code: string,
    message: string,
  ) {
    super(message)
  }
}

/** Thin client for the service's /v1 HTTP API. */
export class ServiceClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    })
    const data = (await resp.json()) as T & {
      error?: { code: string; message: string }
    }
    if (!resp.ok || data.error) {
      const err = data.error ?? { code: 'http_error', message: `HTTP ${resp.status}` }
      throw new ServiceError(err.code, err.message)
    }
    return data
  }

  classify(texts: string[], user?: string): Promise<ClassifyResponse> {
    return this.post('/v1/classify', user ? { texts, user } : { texts })
  }

  classifyUrl(
    url: string,
    user?: string,
  ): Promise<{ version: number; title: string; result: ClassifyResponse['results'][0] }> {
    return this.post('/v1/classify-url', user ? { url, user } : { url })
  }

  feedback(event: FeedbackEvent): Promise<{ seq: number; duplicate: boolean }> {
    return this.post('/v1/feedback', { event })
  }
}
