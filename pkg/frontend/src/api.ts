// Thin client for the garden server. The fetch function is injectable so
// tests can point at any host or stub the network entirely.

import {
  LayoutResponse,
  Legend,
  SceneDocument,
  validateScene,
} from './types'

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message)
  }
}

export class GardenApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async getJson(path: string): Promise<unknown> {
    const resp = await this.fetchFn(this.baseUrl + path)
    if (!resp.ok) {
      throw new ApiError(`GET ${path} failed: ${resp.status}`, resp.status)
    }
    return resp.json()
  }

  async scene(): Promise<SceneDocument> {
    return validateScene(await this.getJson('/api/scene'))
  }

  async legend(): Promise<Legend> {
    return (await this.getJson('/api/legend')) as Legend
  }

  async entityTooltip(id: string): Promise<[string, string][]> {
    return (await this.getJson(`/api/entity/${encodeURIComponent(id)}`)) as [
      string,
      string,
    ][]
  }

  async layout(request: {
    mode: 'organic' | 'grouped'
    group_by?: string
    spacing?: number
    seed?: number
    duration?: number
    stagger?: number
  }): Promise<LayoutResponse> {
    const resp = await this.fetchFn(this.baseUrl + '/api/layout', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(request),
    })
    if (!resp.ok) {
      throw new ApiError(`layout request failed: ${resp.status}`, resp.status)
    }
    return (await resp.json()) as LayoutResponse
  }
}
