import type { KeyValueStore } from './storage'

const USER_ID_KEY = 'user_id'

/** Returns the install's persistent anonymous identity: 32 random bytes
 * as 64 lowercase hex characters, generated once from a cryptographic
 * randomness source. */
export async function userIdentity(store: KeyValueStore): Promise<string> {
  const existing = await store.get(USER_ID_KEY)
  if (existing && /^[0-9a-f]{64}$/.test(existing)) {
    return existing
  }
  const bytes = new Uint8Array(32)
  crypto.getRandomValues(bytes)
  const id = Array.from(bytes, (b) => b.toString(16).padStart(2, '0')).join('')
  await store.set(USER_ID_KEY, id)
  return id
}
