// Scene-graph construction: one renderable group per entity, with the
// archetype body, satellite puffs orbiting above, tint, and scale. Pure
// three.js object graphs; no WebGL context required, which keeps this
// testable headlessly.

import * as THREE from 'three'
import { buildArchetype, buildSatellite, SATELLITE_NAME } from './assets'
import { Vec3 } from './animation'
import { SceneDocument, SceneEntity } from './types'

export const ENTITY_TAG = 'garden-entity'

export interface GardenGraph {
  root: THREE.Group
  byId: Map<string, THREE.Group>
}

export function buildEntity(entity: SceneEntity): THREE.Group {
  const group = new THREE.Group()
  group.name = entity.id
  group.userData.tag = ENTITY_TAG
  group.userData.entityId = entity.id
  group.add(buildArchetype(entity.archetype, entity.color))

  let total = 0
  for (const count of Object.values(entity.satellites)) total += count
  for (let i = 0; i < total; i++) {
    const satellite = buildSatellite()
    const angle = (2 * Math.PI * i) / Math.max(total, 1)
    satellite.position.set(
      0.8 * Math.cos(angle),
      2.6 + 0.15 * (i % 2),
      0.8 * Math.sin(angle),
    )
    group.add(satellite)
  }

  group.scale.setScalar(entity.scale)
  group.position.set(...entity.position)
  return group
}

export function buildGarden(doc: SceneDocument): GardenGraph {
  const root = new THREE.Group()
  root.name = 'garden'
  const byId = new Map<string, THREE.Group>()
  for (const entity of doc.entities) {
    const group = buildEntity(entity)
    byId.set(entity.id, group)
    root.add(group)
  }
  return { root, byId }
}

export function applyPositions(
  graph: GardenGraph,
  positions: Map<string, Vec3>,
): void {
  for (const [id, pos] of positions) {
    graph.byId.get(id)?.position.set(...pos)
  }
}

export function renderableCount(graph: GardenGraph): number {
  return graph.byId.size
}

export function satelliteCount(group: THREE.Object3D): number {
  let count = 0
  group.traverse((child) => {
    if (child.name === SATELLITE_NAME) count++
  })
  return count
}
