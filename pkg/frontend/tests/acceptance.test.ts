/** End-to-end gate for the extension against the real service.
 *
 * A fixture page with 10 known-clickbait and 10 known-news anchors is
 * scanned; the extension must mark exactly the 10 clickbait anchors.
 * A block action must hide the link and land a BlockSimilar event in
 * the service's on-disk log; a report-unmarked action must land a
 * ReportFalseNegative. The log file itself is the source of truth. */

import { type ChildProcess, spawn } from 'node:child_process'
import { readFileSync } from 'node:fs'
import { afterAll, beforeAll, describe, expect, it } from 'vitest'

import { ServiceClient } from '../src/api'
import { userIdentity } from '../src/identity'
import { INDICATOR_CLASS, Marker, PLACEHOLDER_CLASS } from '../src/marker'
import { ActionQueue } from '../src/queue'
import { PageScanner } from '../src/scanner'
import { memoryStore } from '../src/storage'
import { AnchorState, type ScannedAnchor } from '../src/types'

const CLICKBAIT = [
  'This Is What Your Birth Month Says About Your Dog',
  '11 Reasons Why Your Dog Is Secretly Weird',
  'This Is What Your Birth Month Says About Your Girlfriend',
  '21 Reasons Why Your Mom Is Secretly Weird',
  '25 Reasons Why Your Dad Is Secretly Simple',
  'How Well Do You Know Your Phone',
  'Do You Actually Remember These Facebook Ways',
  "We Tried The New Netflix Drink And It's Amazing",
  "11 Of The Most Stunning Secrets You'll See Today",
  '13 Secret Photos That Prove Google Won The Internet',
]

const NEWS = [
  'Strike halts Egypt rail network for third day',
  'Spain election: prime minister concedes defeat',
  'Iran central bank raises rates amid inflation',
  'Strike halts Turkey rail network for third day',
  'Floodwaters recede in Russia as cleanup begins',
  'Turkey police detain 12 after landslide protest',
  'Japan police detain 7 after flood protest',
  'India reports record exports despite election law row',
  'Mexico central bank raises rates amid inflation',
  'Japan central bank raises rates amid inflation',
]

let child: ChildProcess
let baseUrl = ''
let eventLogPath = ''

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms))
}

async function waitForReady(proc: ChildProcess): Promise<{ port: number; log: string }> {
  return new Promise((resolve, reject) => {
    let buffer = ''
    const timer = setTimeout(
      () => reject(new Error(`service never became ready; output so far:\n${buffer}`)),
      170_000,
    )
    proc.stdout?.on('data', (chunk: Buffer) => {
      buffer += chunk.toString()
      const match = buffer.match(/READY (\d+) (\S+)/)
      if (match) {
        clearTimeout(timer)
        resolve({ port: Number(match[1]), log: match[2] })
      }
    })
    proc.stderr?.on('data', (chunk: Buffer) => {
      buffer += chunk.toString()
    })
    proc.on('exit', (code) => {
      clearTimeout(timer)
      reject(new Error(`service exited early (${code}):\n${buffer}`))
    })
  })
}

function loggedEvents(): Array<{ type: string; kind?: string; headline?: string }> {
  return readFileSync(eventLogPath, 'utf-8')
    .split('\n')
    .filter((line) => line.trim())
    .map((line) => JSON.parse(line))
}

beforeAll(async () => {
  child = spawn('python3', ['scripts/start_service.py'], {
    cwd: process.cwd(), // vitest runs with the package root as cwd
    stdio: ['ignore', 'pipe', 'pipe'],
  })
  const ready = await waitForReady(child)
  baseUrl = `http://127.0.0.1:${ready.port}`
  eventLogPath = ready.log
  for (let i = 0; i < 100; i += 1) {
    try {
      const resp = await fetch(`${baseUrl}/v1/health`)
      if (resp.ok) return
    } catch {
      // still starting up
    }
    await sleep(200)
  }
  throw new Error('service health check never passed')
})

afterAll(() => {
  child?.kill('SIGTERM')
})

describe('extension against the live service', () => {
  it('marks exactly the 10 clickbait anchors and stores block/report feedback', async () => {
    // fixture page: 20 anchors, clickbait and news interleaved
    document.body.innerHTML = ''
    const texts: string[] = []
    for (let i = 0; i < 10; i += 1) {
      texts.push(CLICKBAIT[i], NEWS[i])
    }
    for (const [i, text] of texts.entries()) {
      const a = document.createElement('a')
      a.href = `https://example.com/story/${i}`
      a.textContent = text
      document.body.appendChild(a)
    }

    const store = memoryStore()
    const userId = await userIdentity(store)
    const client = new ServiceClient(baseUrl)
    const queue = new ActionQueue(store, client)
    const marker = new Marker(client, queue, userId)
    const anchors: ScannedAnchor[] = []
    const scanner = new PageScanner((fresh) => {
      anchors.push(...fresh)
      marker.add(fresh)
    })
    const initial = scanner.scan(document)
    anchors.push(...initial)
    marker.add(initial)
    expect(anchors).toHaveLength(20)

    // debounce (250 ms) + server-side annotation of 20 headlines
    for (let i = 0; i < 100 && anchors.some((a) => a.state === AnchorState.Pending); i += 1) {
      await sleep(200)
    }
    scanner.stop()

    const marked = anchors.filter((a) => a.state === AnchorState.Marked)
    expect(marked.map((a) => a.text).sort()).toEqual([...CLICKBAIT].sort())
    expect(document.querySelectorAll(`.${INDICATOR_CLASS}`)).toHaveLength(10)
    for (const anchor of anchors.filter((a) => a.state === AnchorState.Unmarked)) {
      expect(
        anchor.element.nextElementSibling?.classList.contains(INDICATOR_CLASS) ?? false,
      ).toBe(false)
    }

    // block action: hide the link and store a BlockSimilar event
    const target = marked[0]
    const indicator = target.element.nextElementSibling as HTMLElement
    indicator.click()
    const menu = indicator.nextElementSibling as HTMLElement
    ;(menu.querySelectorAll('button')[0] as HTMLElement).click()
    for (let i = 0; i < 50 && target.state !== AnchorState.Blocked; i += 1) {
      await sleep(100)
    }
    await sleep(300) // let the feedback POST land in the log
    expect(target.state).toBe(AnchorState.Blocked)
    expect(target.element.style.display).toBe('none')
    expect(document.querySelector(`.${PLACEHOLDER_CLASS}`)?.textContent).toContain('blocked')

    let events = loggedEvents()
    const blockEvents = events.filter(
      (e) => e.type === 'feedback' && e.kind === 'BlockSimilar',
    )
    expect(blockEvents).toHaveLength(1)
    expect(blockEvents[0].headline).toBe(target.text)

    // report-unmarked on a news anchor stores a ReportFalseNegative
    const unmarked = anchors.find((a) => a.state === AnchorState.Unmarked) as ScannedAnchor
    await marker.reportUnmarked(unmarked)
    await sleep(300)
    events = loggedEvents()
    const reports = events.filter(
      (e) => e.type === 'feedback' && e.kind === 'ReportFalseNegative',
    )
    expect(reports).toHaveLength(1)
    expect(reports[0].headline).toBe(unmarked.text)
  })
})
