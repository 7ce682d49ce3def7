/** Key-value persistence behind a tiny interface so page code and tests
 * never touch the chrome.* APIs directly. */

export interface KeyValueStore {
  get(key: string): Promise<string | null>
  set(key: string, value: string): Promise<void>
}

/** chrome.storage.local when running as an extension, localStorage
 * otherwise (tests, plain-page debugging). */
export function defaultStore(): KeyValueStore {
  const chromeStorage = (globalThis as { chrome?: typeof chrome }).chrome?.storage?.local
  if (chromeStorage) {
    return {
      async get(key) {
        const out = await chromeStorage.get(key)
        const value = out[key]
        return typeof value === 'string' ? value : null
      },
      async set(key, value) {
        await chromeStorage.set({ [key]: value })
      },
    }
  }
  return {
    async get(key) {
      return globalThis.localStorage.getItem(key)
    },
    async set(key, value) {
      globalThis.localStorage.setItem(key, value)
    },
  }
}

/** In-memory store for tests. */
export function memoryStore(): KeyValueStore {
  const data = new Map<string, string>()
  return {
    async get(key) {
      return data.has(key) ? (data.get(key) as string) : null
    },
    async set(key, value) {
      data.set(key, value)
    },
  }
}
