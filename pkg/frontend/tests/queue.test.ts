import { describe, expect, it } from 'vitest'

import { ServiceClient } from '../src/api'
import { ActionQueue } from '../src/queue'
import { memoryStore } from '../src/storage'
import type { FeedbackEvent } from '../src/types'

function event(n: number): FeedbackEvent {
  return {
    user: 'a'.repeat(64),
    kind: 'BlockSimilar',
    headline: `headline ${n}`,
    url: null,
    timestamp: 1000 + n,
  }
}

function fakeService(failUntilCall = 0) {
  const sent: string[] = []
  let calls = 0
  const fetchFn = async (_url: string, init?: RequestInit) => {
    calls += 1
    if (calls <= failUntilCall) throw new TypeError('network down')
    const body = JSON.parse(String(init?.body)) as { event: FeedbackEvent }
    sent.push(body.event.headline)
    return new Response(JSON.stringify({ seq: calls, duplicate: false }), {
      status: 200,
    })
  }
  return { sent, client: new ServiceClient('http://service', fetchFn) }
}

describe('ActionQueue', () => {
  it('delivers submitted events in order', async () => {
    const { sent, client } = fakeService()
    const queue = new ActionQueue(memoryStore(), client)
    await queue.submit(event(1))
    await queue.submit(event(2))
    await queue.submit(event(3))
    expect(sent).toEqual(['headline 1', 'headline 2', 'headline 3'])
    expect(await queue.pending()).toEqual([])
  })

  it('keeps events queued while offline and flushes on reconnect', async () => {
    const { sent, client } = fakeService(2)
    const queue = new ActionQueue(memoryStore(), client)
    await queue.submit(event(1)) // network down: stays queued
    await queue.submit(event(2)) // still down
    expect(sent).toEqual([])
    expect(await queue.pending()).toHaveLength(2)
    const delivered = await queue.flush() // back online
    expect(delivered).toBe(2)
    expect(sent).toEqual(['headline 1', 'headline 2'])
    expect(await queue.pending()).toEqual([])
  })

  it('stops at the first failure mid-flush and keeps the tail', async () => {
    let calls = 0
    const sent: string[] = []
    const fetchFn = async (_url: string, init?: RequestInit) => {
      calls += 1
      if (calls === 2) throw new TypeError('flaky')
      const body = JSON.parse(String(init?.body)) as { event: FeedbackEvent }
      sent.push(body.event.headline)
      return new Response(JSON.stringify({ seq: calls, duplicate: false }), { status: 200 })
    }
    const store = memoryStore()
    const queue = new ActionQueue(store, new ServiceClient('http://s', fetchFn))
    await store.set(
      'pending_actions',
      JSON.stringify([event(1), event(2), event(3)]),
    )
    await queue.flush()
    expect(sent).toEqual(['headline 1'])
    expect(await queue.pending()).toHaveLength(2)
    await queue.flush()
    expect(sent).toEqual(['headline 1', 'headline 2', 'headline 3'])
  })

  it('survives a fresh queue instance over the same store', async () => {
    const store = memoryStore()
    const down = fakeService(99)
    const queue = new ActionQueue(store, down.client)
    await queue.submit(event(7))
    const up = fakeService()
    const reborn = new ActionQueue(store, up.client)
    await reborn.flush()
    expect(up.sent).toEqual(['headline 7'])
  })
})
