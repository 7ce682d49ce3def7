import { describe, expect, it } from 'vitest'

import { userIdentity } from '../src/identity'
import { memoryStore } from '../src/storage'

describe('userIdentity', () => {
  it('generates a 64-hex id on first use', async () => {
    const id = await userIdentity(memoryStore())
    expect(id).toMatch(/^[0-9a-f]{64}$/)
  })

  it('persists across restarts of the same install', async () => {
    const store = memoryStore()
    const first = await userIdentity(store)
    const second = await userIdentity(store)
    expect(second).toBe(first)
  })

  it('differs between installs', async () => {
    const a = await userIdentity(memoryStore())
    const b = await userIdentity(memoryStore())
    expect(a).not.toBe(b)
  })

  it('replaces a corrupted stored id', async () => {
    const store = memoryStore()
    await store.set('user_id', 'not-hex')
    const id = await userIdentity(store)
    expect(id).toMatch(/^[0-9a-f]{64}$/)
  })
})
