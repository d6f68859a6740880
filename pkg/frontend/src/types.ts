// Wire types mirroring the server's scene document and layout endpoint.

export const SCENE_VERSION = 'datagarden-scene/1'

export interface HslColor {
  h: number
  s: number
  l: number
}

export interface SceneEntity {
  id: string
  archetype: string
  position: [number, number, number]
  color: HslColor
  satellites: Record<string, number>
  scale: number
  tooltip: [string, string][]
}

export interface LegendItem {
  key: string
  value: unknown
}

export interface LegendEntry {
  channel: string
  question: string
  items: [string, unknown][]
}

export interface Legend {
  entries: LegendEntry[]
}

export interface SceneDocument {
  version: string
  bounds: { width: number; depth: number }
  entities: SceneEntity[]
  legend: Legend
  meta: { title: string; entity_count: number; generated_from: string[] }
}

export interface TransitionStep {
  start: [number, number, number]
  end: [number, number, number]
  delay: number
  duration: number
}

export interface TransitionPlan {
  easing: string
  steps: Record<string, TransitionStep>
}

export interface LayoutResponse {
  positions: Record<string, [number, number, number]>
  transition: TransitionPlan
}

export class SceneFormatError extends Error {}

/** Validate a parsed /api/scene payload; throws SceneFormatError. */
export function validateScene(raw: unknown): SceneDocument {
  const doc = raw as SceneDocument
  if (typeof doc !== 'object' || doc === null) {
    throw new SceneFormatError('scene is not an object')
  }
  if (doc.version !== SCENE_VERSION) {
    throw new SceneFormatError(`unsupported scene version ${String(doc.version)}`)
  }
  if (!Array.isArray(doc.entities)) {
    throw new SceneFormatError('scene has no entity list')
  }
  if (doc.meta.entity_count !== doc.entities.length) {
    throw new SceneFormatError('entity count mismatch')
  }
  for (const entity of doc.entities) {
    if (typeof entity.id !== 'string' || entity.position.length !== 3) {
      throw new SceneFormatError(`malformed entity ${JSON.stringify(entity.id)}`)
    }
  }
  return doc
}
