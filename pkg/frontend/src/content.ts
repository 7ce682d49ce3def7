/** Content-script entry point: wires scanner, marker, identity, and the
 * offline action queue together against the configured service. */

import { ServiceClient } from './api'
import { userIdentity } from './identity'
import { Marker } from './marker'
import { ActionQueue } from './queue'
import { PageScanner } from './scanner'
import { defaultStore } from './storage'

const DEFAULT_SERVICE_URL = 'http://127.0.0.1:8300'

export async function start(
  doc: Document = document,
  serviceUrl: string = DEFAULT_SERVICE_URL,
): Promise<{ scanner: PageScanner; marker: Marker }> {
  const store = defaultStore()
  const userId = await userIdentity(store)
  const client = new ServiceClient(serviceUrl)
  const queue = new ActionQueue(store, client)
  const marker = new Marker(client, queue, userId)
  const scanner = new PageScanner((anchors) => marker.add(anchors))
  marker.add(scanner.scan(doc))
  // deliver any actions queued while offline
  globalThis.addEventListener?.('online', () => void queue.flush())
  void queue.flush()
  return { scanner, marker }
}

// Autostart in a real page; tests set the flag and call start() themselves.
const flags = globalThis as { __clickshieldNoAutostart?: boolean }
if (typeof document !== 'undefined' && !flags.__clickshieldNoAutostart) {
  void start()
}
